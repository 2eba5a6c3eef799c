#include "vgt/rational.hpp"

#include <charconv>
#include <numeric>

#include "vgt/arith.hpp"
#include "vgt/errors.hpp"

namespace vgt {

namespace {

int64_t clamp128(__int128 v, const char* who) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(std::string(who) + ": rational overflow");
  }
  return static_cast<int64_t>(v);
}

int64_t parse_int(std::string_view s) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw BadParameter("cannot parse integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::normalized(__int128 num, __int128 den, const char* who) {
  if (den == 0) throw BadDenominator("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  Rational r;
  r.num_ = clamp128(num / a, who);
  r.den_ = clamp128(den / a, who);
  return r;
}

Rational::Rational(int64_t num, int64_t den) {
  Rational r = normalized(num, den, "Rational");
  num_ = r.num_;
  den_ = r.den_;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  int64_t n = parse_int(text.substr(0, slash));
  int64_t d = parse_int(text.substr(slash + 1));
  return Rational(n, d);
}

Rational Rational::operator+(const Rational& o) const {
  return normalized(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_, "operator+");
}

Rational Rational::operator-(const Rational& o) const {
  return normalized(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_, "operator-");
}

Rational Rational::operator*(const Rational& o) const {
  return normalized(static_cast<__int128>(num_) * o.num_,
              static_cast<__int128>(den_) * o.den_, "operator*");
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw BadDenominator("rational division by zero");
  return normalized(static_cast<__int128>(num_) * o.den_,
              static_cast<__int128>(den_) * o.num_, "operator/");
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

uint64_t Rational::mod(uint64_t p) const {
  if (den_ % static_cast<int64_t>(p) == 0) {
    throw BadDenominator("denominator of " + str() + " vanishes mod " + std::to_string(p));
  }
  uint64_t n = num_ >= 0 ? static_cast<uint64_t>(num_) % p
                         : p - (static_cast<uint64_t>(-(num_ + 1)) + 1) % p;
  n %= p;
  uint64_t d = static_cast<uint64_t>(den_) % p;
  // Fermat inverse; p is prime by contract.
  uint64_t dinv = powmod(d, p - 2, p);
  return mulmod(n, dinv, p);
}

bool Rational::is_square() const {
  if (num_ == 0) return true;
  if (num_ < 0) return false;
  __int128 prod = static_cast<__int128>(num_) * den_;
  if (prod > INT64_MAX) throw Error("is_square: rational overflow");
  return is_perfect_square(static_cast<int64_t>(prod));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace vgt
