#include "kpasep/laurent_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace kpasep {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "alpha", "beta", "q", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8", "y9"};

bool laurent_allowed(std::size_t idx) {
  return idx == static_cast<std::size_t>(Var::alpha) || idx == static_cast<std::size_t>(Var::beta);
}

}  // namespace

Var species_marker(int s) {
  if (s < 1 || s > kMaxSpeciesMarkers) throw std::out_of_range("species marker index out of range");
  return static_cast<Var>(static_cast<int>(Var::y1) + s - 1);
}

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Monomial::Monomial(const Exponents& e) : exps_(e) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] < 0 && !laurent_allowed(i)) {
      throw std::domain_error("negative exponent on " + std::string(kVarNames[i]));
    }
  }
}

Monomial Monomial::of(Var v, int power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(power);
  return Monomial(e);
}

bool Monomial::is_one() const {
  for (auto x : exps_) {
    if (x != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Exponents e;
  for (std::size_t i = 0; i < kNumVars; ++i) e[i] = static_cast<std::int16_t>(exps_[i] + other.exps_[i]);
  return Monomial(e);
}

Monomial Monomial::with(Var v, int power) const {
  Exponents e = exps_;
  e[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(power);
  return Monomial(e);
}

Assignment& Assignment::set(Var v, Rational value) {
  vals_[static_cast<std::size_t>(v)] = std::move(value);
  return *this;
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(Monomial{}, constant); }

LaurentPoly LaurentPoly::variable(Var v, int power) { return term(Monomial::of(v, power), 1); }

LaurentPoly LaurentPoly::term(const Monomial& m, const Rational& c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

Rational LaurentPoly::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational cc = c;
  cc.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, std::move(cc));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational cc = c;
  cc.canonicalize();
  for (auto& [m, coef] : terms_) coef *= cc;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational LaurentPoly::eval(const Assignment& assign) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const int e = m.exponents()[i];
      if (e == 0) continue;
      const auto& val = assign.get(static_cast<Var>(i));
      if (!val) throw std::invalid_argument("no value assigned to " + std::string(kVarNames[i]));
      v *= rational_pow(*val, e);
    }
    total += v;
  }
  return total;
}

LaurentPoly LaurentPoly::specialize(Var v, const Rational& value) const {
  LaurentPoly out;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponents()[idx];
    out.add_term(m.with(v, 0), c * rational_pow(value, e));
  }
  return out;
}

LaurentPoly LaurentPoly::coeff_extract(Var v, int power) const {
  LaurentPoly out;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    if (m.exponents()[idx] == power) out.add_term(m.with(v, 0), c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const int e = m.exponents()[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kVarNames[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += kpasep::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += kpasep::to_string(c) + "*" + mono;
    }
  }
  return out;
}

LaurentPoly qint(int j) {
  if (j < 0) throw std::invalid_argument("qint of a negative integer");
  LaurentPoly r;
  for (int e = 0; e < j; ++e) r.add_term(Monomial::of(Var::q, e), 1);
  return r;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    LaurentPoly total;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      LaurentPoly t = parse_term();
      if (negate) t = -t;
      total += t;
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        negate = false;
      } else if (peek() == '-') {
        negate = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
      skip_ws();
      // "a + -b" is the canonical rendering of a negative term
      if (!at_end() && peek() == '-') {
        negate = !negate;
        ++pos_;
      }
    }
    return total;
  }

 private:
  LaurentPoly parse_term() {
    LaurentPoly t = parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      t *= parse_factor();
      skip_ws();
    }
    return t;
  }

  LaurentPoly parse_factor() {
    skip_ws();
    if (at_end()) fail("expected a factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      return LaurentPoly(parse_rational(s_.substr(start, pos_ - start)));
    }
    std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    auto v = var_from_name(s_.substr(start, pos_ - start));
    if (!v) fail("unknown variable '" + std::string(s_.substr(start, pos_ - start)) + "'");
    int power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      bool neg = false;
      if (!at_end() && peek() == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) fail("expected exponent");
      power = std::stoi(std::string(s_.substr(ds, pos_ - ds)));
      if (neg) power = -power;
    }
    return LaurentPoly::variable(*v, power);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace kpasep
