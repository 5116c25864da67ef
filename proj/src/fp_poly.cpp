#include "kfrob/fp_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "kfrob/errors.hpp"

namespace kfrob {

bool DegRevLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

long inverse_mod(long a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw InvalidArgument("zero has no inverse mod p");
  long result = 1;
  long base = a;
  long e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FpPoly::FpPoly(int p, int nvars) : p_(p), nvars_(nvars) {}

FpPoly FpPoly::constant(int p, int nvars, long c) {
  return monomial(p, nvars, Monomial(static_cast<std::size_t>(nvars), 0), c);
}

FpPoly FpPoly::variable(int p, int nvars, int i) {
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(i)] = 1;
  return monomial(p, nvars, std::move(m), 1);
}

FpPoly FpPoly::monomial(int p, int nvars, Monomial m, long c) {
  FpPoly out(p, nvars);
  out.add_term(m, c);
  return out;
}

long FpPoly::reduce(long c) const {
  c %= p_;
  return c < 0 ? c + p_ : c;
}

void FpPoly::add_term(const Monomial& m, long c) {
  c = reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = reduce(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

const Monomial& FpPoly::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.begin()->first;
}

long FpPoly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.begin()->second;
}

int FpPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

FpPoly& FpPoly::operator+=(const FpPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

FpPoly FpPoly::operator-() const { return scaled(-1); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p_, a.nvars_);
  Monomial m(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

FpPoly FpPoly::scaled(long c) const {
  FpPoly out(p_, nvars_);
  c = reduce(c);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c % p_);
  return out;
}

FpPoly FpPoly::times_monomial(const Monomial& shift, long c) const {
  FpPoly out(p_, nvars_);
  c = reduce(c);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) {
    Monomial shifted = m;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += shift[i];
    // Multiplication by a monomial preserves a monomial order.
    out.terms_.emplace_hint(out.terms_.end(), std::move(shifted), v * c % p_);
  }
  return out;
}

FpPoly FpPoly::pow(unsigned e) const {
  FpPoly out = constant(p_, nvars_, 1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

FpPoly FpPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(inverse_mod(leading_coefficient(), p_));
}

FpPoly FpPoly::derivative(int i) const {
  FpPoly out(p_, nvars_);
  const auto idx = static_cast<std::size_t>(i);
  for (const auto& [m, c] : terms_) {
    if (m[idx] == 0) continue;
    Monomial d = m;
    --d[idx];
    out.add_term(d, c * reduce(m[idx]));
  }
  return out;
}

long FpPoly::evaluate(std::span<const long> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) {
    throw InvalidArgument("evaluation point has wrong dimension");
  }
  long total = 0;
  for (const auto& [m, c] : terms_) {
    long v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const long x = reduce(point[i]);
      for (int e = 0; e < m[i]; ++e) v = v * x % p_;
    }
    total = (total + v) % p_;
  }
  return total;
}

FpPoly FpPoly::remap(int nvars, std::span<const int> slot) const {
  FpPoly out(p_, nvars);
  for (const auto& [m, c] : terms_) {
    Monomial target(static_cast<std::size_t>(nvars), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      target[static_cast<std::size_t>(slot[i])] += m[i];
    }
    out.add_term(target, c);
  }
  return out;
}

bool FpPoly::operator==(const FpPoly& other) const {
  return p_ == other.p_ && nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::string FpPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (mono.tellp() > 0) mono << "*";
      if (i < names.size()) {
        mono << names[i];
      } else {
        mono << "x" << (i + 1);
      }
      if (m[i] > 1) mono << "^" << m[i];
    }
    const std::string ms = mono.str();
    if (ms.empty()) {
      os << c;
    } else if (c == 1) {
      os << ms;
    } else {
      os << c << "*" << ms;
    }
  }
  return os.str();
}

namespace {

struct Token {
  enum Kind { number, ident, op, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                              s[i] == '_')) {
        ++i;
      }
      out.push_back({Token::ident, std::string(s.substr(start, i - start)), start});
    } else if (c == '+' || c == '-' || c == '*' || c == '^') {
      out.push_back({Token::op, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

}  // namespace

FpPoly parse_fp_poly(std::string_view text, int p,
                     std::vector<std::string>& names) {
  const std::vector<Token> tokens = tokenize(text);
  if (names.empty()) {
    std::set<std::string> seen;
    for (const auto& t : tokens) {
      if (t.kind == Token::ident) seen.insert(t.text);
    }
    names.assign(seen.begin(), seen.end());
  }
  const int nvars = static_cast<int>(names.size());
  const auto var_index = [&](const Token& t) {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end()) throw ParseError("unknown variable '" + t.text + "'", t.pos);
    return static_cast<std::size_t>(it - names.begin());
  };

  std::size_t k = 0;
  const auto parse_exponent = [&]() -> int {
    if (tokens[k].kind == Token::op && tokens[k].text == "^") {
      ++k;
      if (tokens[k].kind != Token::number) {
        throw ParseError("expected exponent", tokens[k].pos);
      }
      return std::stoi(tokens[k++].text);
    }
    return 1;
  };

  FpPoly out(p, nvars);
  if (tokens[0].kind == Token::end) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (tokens[k].kind != Token::end) {
    long sign = 1;
    if (tokens[k].kind == Token::op &&
        (tokens[k].text == "+" || tokens[k].text == "-")) {
      sign = tokens[k].text == "-" ? -1 : 1;
      ++k;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", tokens[k].pos);
    }
    first = false;
    long coefficient = sign;
    Monomial m(static_cast<std::size_t>(nvars), 0);
    while (true) {
      const Token& t = tokens[k];
      if (t.kind == Token::number) {
        ++k;
        const long base = std::stol(t.text) % p;
        long v = 1;
        for (int e = parse_exponent(); e > 0; --e) v = v * base % p;
        coefficient = coefficient * v % p;
      } else if (t.kind == Token::ident) {
        ++k;
        m[var_index(t)] += parse_exponent();
      } else {
        throw ParseError("expected number or variable", t.pos);
      }
      if (tokens[k].kind == Token::op && tokens[k].text == "*") {
        ++k;
        continue;
      }
      break;
    }
    out.add_term(m, coefficient);
  }
  return out;
}

}  // namespace kfrob
