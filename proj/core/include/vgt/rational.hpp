#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace vgt {

// A rational number in lowest terms with positive denominator, on int64
// coordinates.  Arithmetic goes through 128-bit intermediates and throws
// Error on overflow rather than wrapping; inputs in this library are small
// surface parameters, so hitting that guard means a caller bug.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t num, int64_t den);
  explicit Rational(int64_t n) : num_(n), den_(1) {}

  // Accepts "n" or "n/d", optional leading minus on either part.
  static Rational parse(std::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;
  bool operator==(const Rational& o) const = default;

  // Residue num * den^-1 mod p.  Throws BadDenominator when p divides the
  // denominator.  p must be prime.
  uint64_t mod(uint64_t p) const;

  // True when this is the square of a rational: nonnegative and num * den a
  // perfect square.  Zero counts as a square.
  bool is_square() const;

  // "n" when integral, "n/d" otherwise.
  std::string str() const;

 private:
  static Rational normalized(__int128 num, __int128 den, const char* who);

  int64_t num_;
  int64_t den_;
};

}  // namespace vgt
