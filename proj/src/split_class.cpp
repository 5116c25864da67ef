#include "kfrob/split_class.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "kfrob/errors.hpp"

namespace kfrob {

SplitClass::SplitClass(RingDescriptor ring) : ring_(std::move(ring)) {
  ring_.validate();
}

SplitClass SplitClass::line(const RingDescriptor& ring,
                            std::vector<int> exponents, int chi,
                            long multiplicity) {
  SplitClass out(ring);
  out.add(std::move(exponents), chi, multiplicity);
  return out;
}

SplitClass SplitClass::trivial(const RingDescriptor& ring, long rank) {
  return line(ring, std::vector<int>(ring.factors.size(), 0), 0, rank);
}

SplitClass& SplitClass::add(std::vector<int> exponents, int chi,
                            long multiplicity) {
  if (exponents.size() != ring_.factors.size()) {
    throw InvalidArgument("line needs " + std::to_string(ring_.factors.size()) +
                          " exponents, got " +
                          std::to_string(exponents.size()));
  }
  if (!ring_.equivariant() && chi != 0) {
    throw InvalidArgument("character on a non-equivariant ring");
  }
  const int l = ring_.characters();
  chi = ((chi % l) + l) % l;
  if (multiplicity == 0) return *this;
  auto [it, inserted] =
      terms_.try_emplace(LineIndex{std::move(exponents), chi}, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

SplitClass& SplitClass::operator+=(const SplitClass& other) {
  if (ring_ != other.ring_) {
    throw DescriptorMismatch("split class sum: " + ring_.describe() + " vs " +
                             other.ring_.describe());
  }
  for (const auto& [line, m] : other.terms_) add(line.exponents, line.chi, m);
  return *this;
}

SplitClass SplitClass::operator-() const {
  SplitClass out = *this;
  for (auto& [line, m] : out.terms_) m = -m;
  return out;
}

bool SplitClass::effective() const noexcept {
  for (const auto& [line, m] : terms_) {
    if (m < 0) return false;
  }
  return true;
}

long SplitClass::rank() const noexcept {
  long total = 0;
  for (const auto& [line, m] : terms_) total += m;
  return total;
}

KElement SplitClass::evaluate() const {
  KElement out(ring_);
  for (const auto& [line, m] : terms_) {
    out += line_class(ring_, line.exponents, line.chi) * Rational(m);
  }
  return out;
}

SplitClass SplitClass::rebase(const RingDescriptor& ring) const {
  SplitClass out(ring);
  for (const auto& [line, m] : terms_) out.add(line.exponents, line.chi, m);
  return out;
}

std::string SplitClass::to_string() const {
  if (terms_.empty()) return "0*h(" + [&] {
    std::string zeros;
    for (std::size_t j = 0; j < ring_.factors.size(); ++j) {
      zeros += j ? ",0" : "0";
    }
    return zeros;
  }() + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [line, m] : terms_) {
    if (first) {
      if (m < 0) os << "-";
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    first = false;
    os << (m < 0 ? -m : m) << "*h(";
    for (std::size_t j = 0; j < line.exponents.size(); ++j) {
      if (j) os << ",";
      os << line.exponents[j];
    }
    os << ")";
    if (ring_.equivariant()) os << "@" << line.chi;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingDescriptor& ring)
      : text_(text), ring_(ring) {}

  SplitClass parse() {
    SplitClass out(ring_);
    skip_space();
    if (at_end()) throw ParseError("empty bundle specification", pos_);
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      long sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      parse_term(out, sign);
    }
    return out;
  }

 private:
  void parse_term(SplitClass& out, long sign) {
    long multiplicity = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      multiplicity = parse_int();
      skip_space();
      expect('*');
      skip_space();
    }
    const std::size_t line_pos = pos_;
    expect('h');
    skip_space();
    expect('(');
    std::vector<int> exps;
    skip_space();
    const bool no_exponents = !at_end() && peek() == ')';
    if (no_exponents) get();
    while (!no_exponents) {
      skip_space();
      exps.push_back(static_cast<int>(parse_int()));
      skip_space();
      if (!at_end() && peek() == ',') {
        get();
        continue;
      }
      expect(')');
      break;
    }
    if (exps.size() != ring_.factors.size()) {
      throw ParseError("expected " + std::to_string(ring_.factors.size()) +
                           " exponent(s), got " + std::to_string(exps.size()),
                       line_pos);
    }
    int chi = 0;
    skip_space();
    if (!at_end() && peek() == '@') {
      const std::size_t at_pos = pos_;
      get();
      skip_space();
      chi = static_cast<int>(parse_int());
      if (!ring_.equivariant() && chi != 0) {
        throw ParseError("character given but ring is not equivariant", at_pos);
      }
    }
    out.add(std::move(exps), chi, sign * multiplicity);
  }

  long parse_int() {
    const std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) negative = get() == '-';
    long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      throw ParseError("expected integer", start);
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  void expect(char c) {
    if (at_end() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  const RingDescriptor& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

SplitClass parse_split_class(std::string_view text, const RingDescriptor& ring) {
  return Parser(text, ring).parse();
}

}  // namespace kfrob
