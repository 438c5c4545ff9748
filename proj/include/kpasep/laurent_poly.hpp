#pragma once

#include "kpasep/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace kpasep {

// Variables in canonical order: alpha < beta < q < y1 < ... < y9.
enum class Var : std::uint8_t { alpha = 0, beta, q, y1, y2, y3, y4, y5, y6, y7, y8, y9 };

inline constexpr std::size_t kNumVars = 12;
inline constexpr int kMaxSpeciesMarkers = 9;

Var species_marker(int s);  // y_s, 1 <= s <= 9
std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over the fixed variable set. Only alpha and beta may carry
/// negative exponents; the constructor-style helpers enforce this.
class Monomial {
 public:
  using Exponents = std::array<std::int16_t, kNumVars>;

  Monomial() { exps_.fill(0); }
  static Monomial of(Var v, int power = 1);

  int exponent(Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  const Exponents& exponents() const { return exps_; }
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  /// Copy with the exponent of v replaced.
  Monomial with(Var v, int power) const;
  bool operator==(const Monomial& other) const = default;
  auto operator<=>(const Monomial& other) const = default;

 private:
  explicit Monomial(const Exponents& e);
  Exponents exps_;
};

/// Values for evaluation; unassigned variables are std::nullopt.
class Assignment {
 public:
  Assignment& set(Var v, Rational value);
  const std::optional<Rational>& get(Var v) const { return vals_[static_cast<std::size_t>(v)]; }

 private:
  std::array<std::optional<Rational>, kNumVars> vals_;
};

/// Sparse multivariate Laurent polynomial with rational coefficients.
/// Terms are kept in descending lexicographic order of exponent vectors, which
/// fixes the canonical string form. No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly variable(Var v, int power = 1);
  static LaurentPoly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient_of(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

  /// Exact value. Throws std::invalid_argument if a variable that occurs is
  /// unassigned, std::domain_error on a negative power of zero.
  Rational eval(const Assignment& assign) const;

  /// Substitutes a value for one variable, keeping the others symbolic.
  LaurentPoly specialize(Var v, const Rational& value) const;

  /// Coefficient of v^power, as a polynomial free of v.
  LaurentPoly coeff_extract(Var v, int power) const;

  LaurentPoly pow(unsigned e) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// 1 + q + ... + q^(j-1); qint(0) = 0.
LaurentPoly qint(int j);

/// Parses the canonical string form (and the looser grammar
/// expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := rational | var ['^' ['-'] int]).
LaurentPoly parse_poly(std::string_view text);

inline LaurentPoly alpha() { return LaurentPoly::variable(Var::alpha); }
inline LaurentPoly beta() { return LaurentPoly::variable(Var::beta); }
inline LaurentPoly qvar() { return LaurentPoly::variable(Var::q); }

}  // namespace kpasep
