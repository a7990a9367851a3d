#include "homsplit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace homsplit {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string name, int exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent_of(std::string_view name) const {
  for (const auto& f : factors_)
    if (f.first == name) return f.second;
  return 0;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The side holding the alphabetically earlier variable has the larger
      // exponent in that variable.
      return fa[i].first < fb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa[i].second != fb[i].second) return fa[i].second <=> fb[i].second;
  }
  return fa.size() <=> fb.size();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      f.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      f.push_back(*ib++);
    } else {
      f.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [name, e] : factors_) {
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({c, Monomial{}});
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.terms_.push_back({Rational(1), Monomial::variable(name)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::optional<Rational> Polynomial::constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::set<std::string> Polynomial::parameters() const {
  std::set<std::string> names;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) names.insert(f.first);
  return names;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two canonical term lists, with the second scaled by `sign`.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->mono > ib->mono)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->mono > ia->mono) {
      out.push_back(sign > 0 ? *ib : Polynomial::Term{-ib->coeff, ib->mono});
      ++ib;
    } else {
      Rational c = sign > 0 ? ia->coeff + ib->coeff : ia->coeff - ib->coeff;
      if (!c.is_zero()) out.push_back({std::move(c), ia->mono});
      ++ia;
      ++ib;
    }
  }
  return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial p = a;
  return p += b;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial p = a;
  return p -= b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return a.terms_[0].coeff * b;
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return b.terms_[0].coeff * a;
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.coeff * y.coeff, x.mono * y.mono});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return {};
  Polynomial out = p;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (auto c = ta[i].mono <=> tb[i].mono; c != 0) return c;
    if (auto c = ta[i].coeff <=> tb[i].coeff; c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

Polynomial Polynomial::specialize(const std::map<std::string, Rational>& bindings) const {
  if (bindings.empty()) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    Monomial rest;
    for (const auto& [name, e] : t.mono.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest = rest * Monomial::variable(name, e);
      } else {
        for (int k = 0; k < e; ++k) c *= it->second;
      }
    }
    terms.push_back({std::move(c), std::move(rest)});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  if (bindings.empty()) return *this;
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial term(t.coeff);
    Monomial rest;
    for (const auto& [name, e] : t.mono.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest = rest * Monomial::variable(name, e);
      } else {
        for (int k = 0; k < e; ++k) term *= it->second;
      }
    }
    Polynomial r;
    r.terms_.push_back({Rational(1), rest});
    out += term * r;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = t.coeff.abs();
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << t.mono.str();
    }
    first = false;
  }
  return os.str();
}

bool is_valid_parameter_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ------------------------------------------------------------------ parser

namespace {

// Recursive descent over:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek('*')) {
      ++pos_;
      acc *= unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError(at, "expected integer exponent");
      if (negative || digits.find_first_not_of('0') == std::string::npos)
        throw ParseError(at, "exponent must be a positive integer");
      if (digits.size() > 6) throw ParseError(at, "exponent too large");
      const int e = std::stoi(digits);
      Polynomial out(1);
      for (int k = 0; k < e; ++k) out *= base;
      return out;
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const std::string num = read_digits();
      std::string literal = num;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        const std::string den = read_digits();
        if (den.empty()) throw ParseError(den_at, "expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError(den_at, "zero denominator");
        literal += "/" + den;
      }
      try {
        return Polynomial(Rational::parse(literal));
      } catch (const std::exception& e) {
        throw ParseError(at, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace homsplit
