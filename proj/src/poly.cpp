#include "tmono/poly.hpp"

#include <cctype>
#include <sstream>

#include "tmono/errors.hpp"

namespace tmono {

IntPoly derivative(const IntPoly& p, unsigned long m) {
  if (m == 0) return p;
  const auto& c = p.coeffs();
  if (c.size() <= m) return {};
  std::vector<BigInt> out(c.size() - m);
  for (std::size_t k = m; k < c.size(); ++k) {
    // k! / (k-m)!
    BigInt falling = 1;
    for (unsigned long j = 0; j < m; ++j) falling *= static_cast<unsigned long>(k - j);
    out[k - m] = c[k] * falling;
  }
  return IntPoly(std::move(out));
}

IntPoly reflect_shift(const IntPoly& p) {
  // Horner in the substituted variable w = -z - 1.
  const IntPoly w = IntPoly::linear(-1, -1);
  IntPoly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + IntPoly::constant(*it);
  return acc;
}

RatPoly affine_substitute_rational(const RatPoly& p, const Rational& a, const Rational& b) {
  const RatPoly w = RatPoly::linear(a, b);
  RatPoly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + RatPoly::constant(*it);
  return acc;
}

IntPoly affine_substitute(const IntPoly& p, const BigInt& a, const BigInt& b, const BigInt& d,
                          const Rational& c) {
  if (d < 1) throw PreconditionError("affine_substitute: denominator d must be >= 1");
  RatPoly r = affine_substitute_rational(to_rational(p), make_rational(a, d), make_rational(b, d));
  r *= c;
  return to_integral(r);
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

IntPoly to_integral(const RatPoly& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c.get_den() != 1) {
      throw IntegralityError("coefficient of z^" + std::to_string(k) + " is " + to_string(c) +
                             ", not an integer");
    }
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

IntPoly exact_divide(const IntPoly& p, const BigInt& divisor) {
  if (divisor == 0) throw PreconditionError("exact_divide: division by zero");
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (!mpz_divisible_p(p.coeffs()[k].get_mpz_t(), divisor.get_mpz_t())) {
      throw IntegralityError("coefficient of z^" + std::to_string(k) + " is not divisible by " +
                             to_string(divisor));
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), p.coeffs()[k].get_mpz_t(), divisor.get_mpz_t());
    v.push_back(std::move(q));
  }
  return IntPoly(std::move(v));
}

namespace {

template <class R>
std::string format_human_impl(const Poly<R>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    R mag = negative ? R(-c[i]) : c[i];
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || i == 0) os << to_string(mag);
    if (i >= 1) os << 'z';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string format_human(const IntPoly& p) { return format_human_impl(p); }
std::string format_human(const RatPoly& p) { return format_human_impl(p); }

std::string format_machine(const IntPoly& p) {
  std::string out = "[";
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ',';
    out += c[i].get_str();
  }
  if (c.empty()) out += '0';
  out += ']';
  return out;
}

IntPoly parse_machine(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("polynomial must start with '['");
  ++pos;
  std::vector<BigInt> v;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') return {};
  while (true) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string digits = text.substr(start, pos - start);
    if (digits.empty() || digits == "-" || digits == "+") {
      throw ParseError("expected integer coefficient at offset " + std::to_string(start));
    }
    if (digits[0] == '+') digits.erase(0, 1);
    v.emplace_back(digits, 10);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') break;
    throw ParseError("expected ',' or ']' at offset " + std::to_string(pos));
  }
  return IntPoly(std::move(v));
}

}  // namespace tmono
