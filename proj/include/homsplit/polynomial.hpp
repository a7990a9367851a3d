#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homsplit/rational.hpp"

namespace homsplit {

/// Raised by the polynomial grammar; carries the byte offset of the failure.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Power product of named parameters. Names are kept sorted and exponents
/// are strictly positive, so the empty monomial is the constant 1.
class Monomial {
public:
  using Factor = std::pair<std::string, int>;

  Monomial() = default;
  static Monomial variable(std::string name, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(std::string_view name) const;

  /// Lexicographic order with alphabetically earlier names dominating:
  /// a > b, a^2 > a*b > a > b > 1.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  std::string str() const;

private:
  std::vector<Factor> factors_;
};

/// Multivariate polynomial over Q in named parameters, in canonical form:
/// terms strictly decreasing in monomial order, no zero coefficients.
class Polynomial {
public:
  struct Term {
    Rational coeff;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c);
  static Polynomial variable(const std::string& name);
  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant value when the polynomial has no parameters.
  std::optional<Rational> constant() const;
  int total_degree() const;
  std::set<std::string> parameters() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Total order used for deterministic sorting of reports and solutions.
  friend std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

  Polynomial specialize(const std::map<std::string, Rational>& bindings) const;
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
  static Polynomial from_terms(std::vector<Term> terms);
  std::vector<Term> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

// Free-function spellings of the kernel operations.
inline Polynomial poly_parse(std::string_view text) { return Polynomial::parse(text); }
inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline bool poly_is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial poly_specialize(const Polynomial& p, const std::map<std::string, Rational>& b) {
  return p.specialize(b);
}

bool is_valid_parameter_name(std::string_view name);

} // namespace homsplit
