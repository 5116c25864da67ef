#include "kfrob/serialize.hpp"

#include "kfrob/errors.hpp"
#include "kfrob/report.hpp"

namespace kfrob {

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidArgument("expected integer or decimal string in KElement JSON");
}

nlohmann::json optional_json(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<int> optional_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

nlohmann::json to_json(const RingDescriptor& ring) {
  return {{"factors", ring.factors},
          {"l", optional_json(ring.cyclic_order)},
          {"k", optional_json(ring.inverted_prime)}};
}

nlohmann::json to_json(const KElement& x) {
  nlohmann::json j = to_json(x.ring());
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, c] : x.terms()) {
    terms.push_back({{"idx", index.exps},
                     {"chi", index.chi},
                     {"num", integer_json(c.get_num())},
                     {"den", integer_json(c.get_den())}});
  }
  j["terms"] = std::move(terms);
  return j;
}

RingDescriptor ring_from_json(const nlohmann::json& j) {
  RingDescriptor ring;
  ring.factors = j.at("factors").get<std::vector<int>>();
  ring.cyclic_order = optional_from_json(j.value("l", nlohmann::json()));
  ring.inverted_prime = optional_from_json(j.value("k", nlohmann::json()));
  ring.validate();
  return ring;
}

KElement kelement_from_json(const nlohmann::json& j) {
  const RingDescriptor ring = ring_from_json(j);
  KElement::Terms terms;
  for (const auto& t : j.at("terms")) {
    BasisIndex index{t.at("idx").get<std::vector<int>>(), t.value("chi", 0)};
    if (index.exps.size() != ring.factors.size()) {
      throw InvalidArgument("KElement JSON: index length mismatch");
    }
    for (std::size_t i = 0; i < index.exps.size(); ++i) {
      if (index.exps[i] < 0 || index.exps[i] > ring.factors[i]) {
        throw InvalidArgument("KElement JSON: index out of bounds");
      }
    }
    const Integer den = integer_from_json(t.at("den"));
    if (den <= 0) throw InvalidArgument("KElement JSON: denominator <= 0");
    terms[index] += make_rational(integer_from_json(t.at("num")), den);
  }
  return KElement::from_terms(ring, std::move(terms));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::error:
      return "ERROR";
  }
  return "ERROR";
}

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::pass;
  if (s == "FAIL") return Status::fail;
  if (s == "ERROR") return Status::error;
  throw InvalidArgument("unknown status '" + s + "'");
}

nlohmann::json VerificationReport::to_json() const {
  return {{"id", id},         {"kind", kind}, {"status", to_string(status)},
          {"params", params}, {"lhs", lhs},   {"rhs", rhs},
          {"trace", trace},   {"message", message}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.params = j.value("params", nlohmann::json::object());
  r.lhs = j.value("lhs", nlohmann::json());
  r.rhs = j.value("rhs", nlohmann::json());
  r.trace = j.value("trace", nlohmann::json::object());
  r.message = j.value("message", "");
  return r;
}

}  // namespace kfrob
