#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homsplit {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator, so equality is structural.
class Rational {
public:
  Rational() = default;
  Rational(int value) : q_(value) {}
  Rational(long value) : q_(value) {}
  Rational(long long value) : q_(static_cast<long>(value)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  const mpq_class& value() const { return q_; }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  std::string str() const { return q_.get_str(); }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace homsplit

template <>
struct std::hash<homsplit::Rational> {
  std::size_t operator()(const homsplit::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
