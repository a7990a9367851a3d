#include "homsplit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace homsplit {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  const std::size_t num_end = digits(pos);
  if (num_end == pos) throw std::invalid_argument("expected digits in rational '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(pos, num_end - pos)));
  mpz_class den(1);
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    const std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1) throw std::invalid_argument("expected denominator in '" + std::string(text) + "'");
    den = mpz_class(std::string(text.substr(pos + 1, den_end - pos - 1)));
    if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    pos = den_end;
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in rational '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

} // namespace homsplit
