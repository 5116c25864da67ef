#include "kfrob/suite.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "kfrob/equivariant.hpp"
#include "kfrob/errors.hpp"
#include "kfrob/frobenius.hpp"
#include "kfrob/generators.hpp"
#include "kfrob/lambda_ops.hpp"
#include "kfrob/pushforward.hpp"
#include "kfrob/serialize.hpp"
#include "kfrob/tau.hpp"

namespace kfrob {

namespace {

using nlohmann::json;

constexpr int kMaxDimension = 6;
constexpr int kMaxPrime = 13;
constexpr int kMaxTauRank = 6;
constexpr int kMaxVars = 4;
constexpr long kMaxCount = 10000;

int require_int(const json& p, const char* key, int lo, int hi) {
  if (!p.contains(key) || !p.at(key).is_number_integer()) {
    throw InvalidArgument(std::string("missing integer parameter '") + key + "'");
  }
  const int v = p.at(key).get<int>();
  if (v < lo || v > hi) {
    throw InvalidArgument(std::string("parameter '") + key + "' = " +
                          std::to_string(v) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
  return v;
}

int require_prime(const json& p, const char* key) {
  const int v = require_int(p, key, 2, kMaxPrime);
  if (!is_prime(v)) throw InvalidArgument(std::string("'") + key + "' must be prime");
  return v;
}

std::uint64_t require_seed(const json& p) {
  if (!p.contains("seed") || !p.at("seed").is_number_unsigned()) {
    throw InvalidArgument("randomized case needs a non-negative integer 'seed'");
  }
  return p.at("seed").get<std::uint64_t>();
}

std::vector<int> require_geometry(const json& p) {
  if (!p.contains("geometry")) throw InvalidArgument("missing 'geometry'");
  auto g = p.at("geometry").get<std::vector<int>>();
  if (g.empty() || g.size() > 2) {
    throw InvalidArgument("'geometry' must be [n] or [m, n]");
  }
  for (int n : g) {
    if (n < 0 || n > kMaxDimension) throw InvalidArgument("geometry dimension out of range");
  }
  return g;
}

void validate_case(const CaseDescriptor& c) {
  const json& p = c.params;
  if (c.kind == "arr") {
    require_int(p, "n", 0, kMaxDimension);
    require_prime(p, "prime");
    if (p.contains("random")) {
      require_int(p.at("random"), "count", 0, static_cast<int>(kMaxCount));
      require_seed(p.at("random"));
    } else if (!p.contains("bundle")) {
      throw InvalidArgument("arr case needs 'bundle' or 'random'");
    }
  } else if (c.kind == "arr-relative") {
    require_int(p, "m", 0, kMaxDimension);
    require_int(p, "n", 0, kMaxDimension);
    require_prime(p, "prime");
    if (!p.contains("bundle") && !p.contains("grid")) {
      throw InvalidArgument("arr-relative case needs 'bundle' or 'grid'");
    }
  } else if (c.kind == "tau") {
    require_int(p, "rank", 0, kMaxTauRank);
    require_prime(p, "prime");
  } else if (c.kind == "frobenius") {
    require_prime(p, "prime");
    if (p.contains("hypersurface")) {
      if (!p.contains("samples")) throw InvalidArgument("hypersurface case needs 'samples'");
    } else {
      require_int(p, "vars", 0, kMaxVars);
    }
  } else if (c.kind == "equivariant") {
    require_prime(p, "l");
    if (!p.contains("omega")) throw InvalidArgument("equivariant case needs 'omega'");
  } else if (c.kind == "properties") {
    if (!p.contains("property")) throw InvalidArgument("properties case needs 'property'");
    require_geometry(p);
    require_prime(p, "prime");
    require_int(p, "count", 0, static_cast<int>(kMaxCount));
    require_seed(p);
  } else {
    throw InvalidArgument("unknown case kind '" + c.kind + "'");
  }
}

VerificationReport aggregate(const std::string& kind, const json& params,
                             const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.kind = kind;
  out.params = params;
  out.status = Status::pass;
  json failures = json::array();
  for (const auto& r : parts) {
    if (r.status == Status::error && out.status != Status::error) {
      out.status = Status::error;
      out.message = r.message;
    } else if (r.status == Status::fail && out.status == Status::pass) {
      out.status = Status::fail;
      out.message = r.message;
    }
    if (!r.passed()) failures.push_back({{"id", r.id}, {"status", to_string(r.status)}});
  }
  long passed = 0;
  for (const auto& r : parts) passed += r.passed() ? 1 : 0;
  out.lhs = passed;
  out.rhs = parts.size();
  out.trace = {{"checked", parts.size()}, {"failures", failures}};
  return out;
}

VerificationReport run_arr(const json& p) {
  const int n = p.at("n").get<int>();
  const int prime = p.at("prime").get<int>();
  const RingDescriptor ring = RingDescriptor::projective(n).with_inverted_prime(prime);
  if (!p.contains("random")) {
    return verify_arr(n, prime, parse_bundle_spec(p.at("bundle").get<std::string>(), ring));
  }
  const json& r = p.at("random");
  ClassGenerator gen(require_seed(r));
  std::vector<VerificationReport> parts;
  const int count = r.at("count").get<int>();
  for (int i = 0; i < count; ++i) {
    parts.push_back(verify_arr(n, prime, gen.split_class(ring, r.value("max_terms", 4),
                                                         r.value("max_exponent", 3),
                                                         r.value("max_multiplicity", 3),
                                                         false)));
  }
  return aggregate("arr", p, parts);
}

VerificationReport run_arr_relative(const json& p) {
  const int m = p.at("m").get<int>();
  const int n = p.at("n").get<int>();
  const int prime = p.at("prime").get<int>();
  const RingDescriptor ring = RingDescriptor::product(m, n).with_inverted_prime(prime);
  if (p.contains("bundle")) {
    return verify_arr_relative(m, n, prime,
                               parse_bundle_spec(p.at("bundle").get<std::string>(), ring));
  }
  const int g = p.at("grid").get<int>();
  if (g < 0 || g > 5) throw InvalidArgument("'grid' outside [0, 5]");
  std::vector<VerificationReport> parts;
  for (int a = -g; a <= g; ++a) {
    for (int b = -g; b <= g; ++b) {
      parts.push_back(verify_arr_relative(m, n, prime, SplitClass::line(ring, {a, b})));
    }
  }
  return aggregate("arr-relative", p, parts);
}

// Coefficients of (1 + q + ... + q^{p-1})^r by repeated convolution.
std::vector<long> q_binomial_coefficients(int r, int p) {
  std::vector<long> out{1};
  for (int i = 0; i < r; ++i) {
    std::vector<long> next(out.size() + static_cast<std::size_t>(p - 1), 0);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (int b = 0; b < p; ++b) next[a + static_cast<std::size_t>(b)] += out[a];
    }
    out = std::move(next);
  }
  return out;
}

VerificationReport run_tau(const json& p) {
  const int r = p.at("rank").get<int>();
  const int prime = p.at("prime").get<int>();
  VerificationReport out;
  out.kind = "tau";
  out.params = p;
  const TauBasis basis = tau_basis(r, prime);
  const auto dims = tau_graded_dims(r, prime);
  const auto expected = q_binomial_coefficients(r, prime);
  long pr = 1;
  for (int i = 0; i < r; ++i) pr *= prime;
  out.lhs = dims;
  out.rhs = expected;
  out.trace = {{"basis_size", basis.monomials.size()}, {"p_to_r", pr}};
  out.status = Status::pass;
  if (static_cast<long>(basis.monomials.size()) != pr) {
    out.status = Status::fail;
    out.message = "basis size is not p^r";
  } else if (dims != expected) {
    out.status = Status::fail;
    out.message = "graded dimensions differ from ((1-q^p)/(1-q))^r";
  }
  if (p.contains("split")) {
    const auto split = p.at("split").get<std::vector<int>>();
    if (split.size() != 2 || split[0] < 0 || split[1] < 0 || split[0] + split[1] != r) {
      throw InvalidArgument("'split' must be [r1, r2] with r1 + r2 = rank");
    }
    const VerificationReport iso = tau_sum_isomorphism_check(split[0], split[1], prime);
    out.trace["sum_isomorphism"] = iso.to_json();
    if (!iso.passed() && out.status == Status::pass) {
      out.status = iso.status;
      out.message = iso.message;
    }
  }
  return out;
}

VerificationReport run_frobenius(const json& p) {
  const int prime = p.at("prime").get<int>();
  if (p.contains("hypersurface")) {
    const AffineModel model =
        AffineModel::hypersurface_model(p.at("hypersurface").get<std::string>(), prime);
    return hypersurface_conormal_check(model, parse_samples(p.at("samples").get<std::string>()));
  }
  const int r = p.at("vars").get<int>();
  const FrobAlgebra algebra = build_frob_algebra(AffineModel::affine_space(r, prime));
  std::vector<VerificationReport> parts{check_gr_iso(r, prime), diagonal_conormal(algebra)};
  VerificationReport out = aggregate("frobenius", p, parts);
  out.lhs = parts[0].lhs;
  out.rhs = parts[0].rhs;
  out.trace["gr_iso"] = parts[0].to_json();
  out.trace["conormal"] = parts[1].to_json();
  return out;
}

VerificationReport run_equivariant(const json& p) {
  const RingDescriptor ring = ambient_ring(p.value("ambient", "p1"));
  return verify_appendix_theorem(parse_bundle_spec(p.at("omega").get<std::string>(), ring),
                                 p.at("l").get<int>());
}

RingDescriptor geometry_ring(const std::vector<int>& g) {
  return g.size() == 1 ? RingDescriptor::projective(g[0]) : RingDescriptor::product(g[0], g[1]);
}

using PropertyCheck = std::function<bool(ClassGenerator&, std::string&)>;

PropertyCheck make_property(const std::string& name, const RingDescriptor& plain, int prime) {
  const RingDescriptor inverted = plain.with_inverted_prime(prime);
  if (name == "adams-frobenius") {
    return [plain, prime](ClassGenerator& gen, std::string& witness) {
      const SplitClass x = gen.split_class(plain, 4, 3, 3, false);
      witness = x.to_string();
      return adams(prime, x) == adams_substitution(prime, x.evaluate());
    };
  }
  if (name == "theta-presentation") {
    return [inverted, prime](ClassGenerator& gen, std::string& witness) {
      const SplitClass x = gen.split_class(inverted, 3, 2, 2, false);
      const SplitClass y = gen.perturb_by_relation(x, 2);
      witness = x.to_string() + " ~ " + y.to_string();
      return x.evaluate() == y.evaluate() && theta(prime, x) == theta(prime, y);
    };
  }
  if (name == "invert") {
    return [inverted, prime](ClassGenerator& gen, std::string& witness) {
      std::vector<long> ranks;
      for (long r = 1; r <= 4; r *= prime) ranks.push_back(r);
      const long r = ranks[static_cast<std::size_t>(gen.uniform(0, static_cast<long>(ranks.size()) - 1))];
      const SplitClass x = gen.effective_of_rank(inverted, r, 3);
      witness = x.to_string();
      const KElement e = x.evaluate();
      const SeriesInverse inv = invert_series(e, prime);
      return e * inv.value == KElement::one(inverted) &&
             inv.nonzero_terms <= inverted.total_dimension() + 1;
    };
  }
  if (name == "tau-theta") {
    return [plain, prime](ClassGenerator& gen, std::string& witness) {
      const SplitClass x = gen.effective_of_rank(plain, gen.uniform(1, 4), 3);
      witness = x.to_string();
      return tau_k0_class(x, prime) == theta(prime, x);
    };
  }
  if (name == "cyclotomic") {
    return [plain, prime](ClassGenerator& gen, std::string& witness) {
      const int l = prime;
      std::vector<int> exps;
      for (std::size_t j = 0; j < plain.factors.size(); ++j) {
        exps.push_back(static_cast<int>(gen.uniform(-3, 3)));
      }
      const RingDescriptor eq = plain.with_cyclic_order(l);
      witness = SplitClass::line(plain, exps).to_string();
      const KElement line = line_class(eq, exps);
      const KElement one = KElement::one(eq);
      KElement product = one;
      for (int c = 1; c < l; ++c) product *= one - line_class(eq, exps, c);
      const auto lhs = reduce_mod_regular(GroupRingElement(product)) *
                       reduce_mod_regular(GroupRingElement(one - line));
      const auto rhs = reduce_mod_regular(GroupRingElement(one - line.pow(static_cast<unsigned long>(l))));
      return lhs == rhs;
    };
  }
  if (name == "ring-axioms") {
    return [plain](ClassGenerator& gen, std::string& witness) {
      const KElement a = gen.split_class(plain, 3, 3, 3, false).evaluate();
      const KElement b = gen.split_class(plain, 3, 3, 3, false).evaluate();
      const KElement c = gen.split_class(plain, 3, 3, 3, false).evaluate();
      witness = a.to_string() + " | " + b.to_string() + " | " + c.to_string();
      return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
             a * b == b * a && rank(a * b) == rank(a) * rank(b) &&
             rank(a + b) == rank(a) + rank(b);
    };
  }
  throw InvalidArgument("unknown property '" + name + "'");
}

VerificationReport run_properties(const json& p) {
  const std::string name = p.at("property").get<std::string>();
  const int prime = p.at("prime").get<int>();
  const RingDescriptor plain = geometry_ring(require_geometry(p));
  const PropertyCheck check = make_property(name, plain, prime);
  ClassGenerator gen(require_seed(p));
  const int count = p.at("count").get<int>();
  VerificationReport out;
  out.kind = "properties";
  out.params = p;
  out.status = Status::pass;
  json counterexamples = json::array();
  long passed = 0;
  for (int i = 0; i < count; ++i) {
    std::string witness;
    if (check(gen, witness)) {
      ++passed;
    } else {
      counterexamples.push_back(witness);
    }
  }
  if (passed != count) {
    out.status = Status::fail;
    out.message = name + " failed on " + std::to_string(count - passed) + " of " +
                  std::to_string(count) + " samples";
  }
  out.lhs = passed;
  out.rhs = count;
  out.trace = {{"counterexamples", counterexamples}};
  return out;
}

}  // namespace

SuiteConfig SuiteConfig::from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("suite config must be a JSON object");
  const int version = j.value("schema_version", 0);
  if (version != kSuiteSchemaVersion) {
    throw InvalidArgument("unsupported suite schema_version " + std::to_string(version));
  }
  SuiteConfig config;
  config.jobs = j.value("jobs", 1);
  if (config.jobs < 1) throw InvalidArgument("'jobs' must be >= 1");
  config.output_path = j.value("output", "");
  int index = 0;
  for (const auto& c : j.value("cases", json::array())) {
    CaseDescriptor d;
    d.kind = c.at("kind").get<std::string>();
    d.id = c.value("id", "case-" + std::to_string(index) + "-" + d.kind);
    d.params = c;
    d.params.erase("kind");
    d.params.erase("id");
    validate_case(d);
    config.cases.push_back(std::move(d));
    ++index;
  }
  return config;
}

SuiteConfig SuiteConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open suite config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("suite config " + path + ": " + e.what());
  }
  return from_json(j);
}

int SuiteResult::count(Status s) const {
  int n = 0;
  for (const auto& r : reports) n += r.status == s ? 1 : 0;
  return n;
}

json SuiteResult::to_json() const {
  json cases = json::array();
  json timing = json::object();
  for (const auto& r : reports) {
    cases.push_back(r.to_json());
    timing[r.id] = r.seconds;
  }
  return {{"schema_version", kSuiteSchemaVersion},
          {"summary",
           {{"total", reports.size()},
            {"pass", count(Status::pass)},
            {"fail", count(Status::fail)},
            {"error", count(Status::error)}}},
          {"cases", cases},
          {"timing", timing}};
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

SplitClass parse_bundle_spec(const std::string& text, const RingDescriptor& ring) {
  return parse_split_class(text, ring);
}

RingDescriptor ambient_ring(const std::string& name) {
  if (name == "pt") return RingDescriptor::point();
  if (name == "p1") return RingDescriptor::projective(1);
  if (name == "p2") return RingDescriptor::projective(2);
  if (name == "p3") return RingDescriptor::projective(3);
  if (name == "p1xp1") return RingDescriptor::product(1, 1);
  throw InvalidArgument("unknown ambient '" + name + "' (pt, p1, p2, p3, p1xp1)");
}

VerificationReport run_case(const CaseDescriptor& c) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  try {
    validate_case(c);
    if (c.kind == "arr") {
      report = run_arr(c.params);
    } else if (c.kind == "arr-relative") {
      report = run_arr_relative(c.params);
    } else if (c.kind == "tau") {
      report = run_tau(c.params);
    } else if (c.kind == "frobenius") {
      report = run_frobenius(c.params);
    } else if (c.kind == "equivariant") {
      report = run_equivariant(c.params);
    } else {
      report = run_properties(c.params);
    }
  } catch (const Error& e) {
    report = VerificationReport{};
    report.status = Status::error;
    report.message = e.what();
  } catch (const nlohmann::json::exception& e) {
    report = VerificationReport{};
    report.status = Status::error;
    report.message = std::string("bad parameters: ") + e.what();
  }
  report.id = c.id;
  report.kind = c.kind;
  report.params = c.params;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  result.reports.resize(config.cases.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < config.cases.size(); i = next++) {
      result.reports[i] = run_case(config.cases[i]);
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, config.jobs));
  std::vector<std::jthread> threads;
  for (std::size_t t = 1; t < std::min(workers, config.cases.size()); ++t) {
    threads.emplace_back(worker);
  }
  worker();
  threads.clear();
  return result;
}

}  // namespace kfrob
