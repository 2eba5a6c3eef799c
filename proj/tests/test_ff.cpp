#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "vgt/arith.hpp"
#include "vgt/errors.hpp"
#include "vgt/ff.hpp"

using vgt::Field;
using vgt::Fq;
using vgt::PrimeModulus;

TEST_CASE("prime modulus validates its argument") {
  CHECK(PrimeModulus(3).value() == 3);
  CHECK(PrimeModulus(2147483647).value() == 2147483647);
  CHECK_THROWS_AS(PrimeModulus(1), vgt::BadPrime);
  CHECK_THROWS_AS(PrimeModulus(2), vgt::BadPrime);
  CHECK_THROWS_AS(PrimeModulus(9), vgt::BadPrime);
  CHECK_THROWS_AS(PrimeModulus(2147483648ULL), vgt::BadPrime);
  CHECK_THROWS_AS(PrimeModulus(0), vgt::BadPrime);
}

TEST_CASE("field construction fixes the expected sizes and nonresidues") {
  Field f5 = Field::prime(PrimeModulus(5));
  CHECK(f5.p() == 5);
  CHECK(f5.r() == 1);
  CHECK(f5.q() == 5);
  CHECK(f5.nonresidue() == 0);

  Field f25 = Field::quadratic(PrimeModulus(5));
  CHECK(f25.q() == 25);
  CHECK(f25.nonresidue() == 2);
  Field f49 = Field::quadratic(PrimeModulus(7));
  CHECK(f49.nonresidue() == 3);
  CHECK(vgt::find_nonresidue(PrimeModulus(7)) == 3);
  CHECK(vgt::find_nonresidue(PrimeModulus(73)) == 5);
}

TEST_CASE("from_int and from_rational reduce into the field") {
  Field f = Field::prime(PrimeModulus(7));
  CHECK(f.from_int(10) == f.make(3, 0));
  CHECK(f.from_int(-1) == f.make(6, 0));
  CHECK(f.from_rational(vgt::Rational(1, 3)) == f.make(5, 0));
  CHECK_THROWS_AS(f.from_rational(vgt::Rational(1, 7)), vgt::BadDenominator);
  CHECK_THROWS_AS(f.make(7, 0), vgt::FieldMismatch);
  CHECK_THROWS_AS(f.make(0, 1), vgt::FieldMismatch);
}

TEST_CASE("every nonzero element has a multiplicative inverse") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{13, 1}, {7, 2}, {11, 2}}) {
    Field f = r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
    for (uint64_t i = 1; i < f.q(); ++i) {
      Fq x = f.from_index(i);
      Fq y = f.inv(x);
      CHECK(f.mul(x, y) == f.one());
      CHECK(f.div(x, x) == f.one());
    }
    CHECK_THROWS_AS(f.inv(f.zero()), vgt::DivisionByZero);
    CHECK_THROWS_AS(f.div(f.one(), f.zero()), vgt::DivisionByZero);
  }
}

TEST_CASE("field arithmetic matches the schoolbook oracle element by element") {
  Field f = Field::quadratic(PrimeModulus(11));
  vgt_test::OracleField F = vgt_test::OracleField::with_d(11, f.nonresidue());
  for (uint64_t i = 0; i < f.q(); i += 3) {
    for (uint64_t k = 0; k < f.q(); k += 5) {
      Fq x = f.from_index(i), y = f.from_index(k);
      vgt_test::OFq ox{x.c0, x.c1}, oy{y.c0, y.c1};
      auto sum = f.add(x, y);
      auto prod = f.mul(x, y);
      auto osum = o_add(F, ox, oy);
      auto oprod = o_mul(F, ox, oy);
      CHECK(sum.c0 == osum.a);
      CHECK(sum.c1 == osum.b);
      CHECK(prod.c0 == oprod.a);
      CHECK(prod.c1 == oprod.b);
    }
  }
}

TEST_CASE("pow matches repeated multiplication") {
  Field f = Field::quadratic(PrimeModulus(5));
  Fq x = f.make(2, 3);
  Fq acc = f.one();
  for (uint64_t e = 0; e <= 30; ++e) {
    CHECK(f.pow(x, e) == acc);
    acc = f.mul(acc, x);
  }
  CHECK(f.pow(x, f.q() - 1) == f.one());
}

TEST_CASE("norm is multiplicative and lands in the prime field") {
  Field f = Field::quadratic(PrimeModulus(13));
  for (uint64_t i = 0; i < f.q(); i += 7) {
    for (uint64_t k = 1; k < f.q(); k += 11) {
      Fq x = f.from_index(i), y = f.from_index(k);
      CHECK(f.norm(f.mul(x, y)) == f.norm(x) * f.norm(y) % 13);
    }
  }
  Fq w = f.make(0, 1);
  CHECK(f.norm(w) == (13 - f.nonresidue()) % 13);
}

TEST_CASE("quad_char equals the Euler criterion over whole small fields") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{5, 1}, {13, 1}, {5, 2}, {11, 2}}) {
    Field f = r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
    vgt_test::OracleField F = r == 1 ? vgt_test::OracleField::make(p, 1)
                                     : vgt_test::OracleField::with_d(p, f.nonresidue());
    for (uint64_t i = 0; i < f.q(); ++i) {
      Fq x = f.from_index(i);
      CHECK(f.quad_char(x) == vgt_test::o_chi(F, vgt_test::OFq{x.c0, x.c1}));
    }
  }
}

TEST_CASE("prime field elements are always squares upstairs") {
  Field f = Field::quadratic(PrimeModulus(7));
  for (uint64_t c = 1; c < 7; ++c) CHECK(f.quad_char(f.make(c, 0)) == 1);
}

TEST_CASE("sqrt returns the canonical root and rejects nonsquares") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{13, 1}, {17, 1}, {7, 2}, {13, 2}}) {
    Field f = r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
    int squares = 0;
    for (uint64_t i = 0; i < f.q(); ++i) {
      Fq x = f.from_index(i);
      if (f.quad_char(x) == -1) {
        CHECK_THROWS_AS(f.sqrt(x), vgt::NotASquare);
        continue;
      }
      Fq y = f.sqrt(x);
      squares += 1;
      CHECK(f.mul(y, y) == x);
      Fq other = f.neg(y);
      bool canonical = y.c1 < other.c1 || (y.c1 == other.c1 && y.c0 <= other.c0);
      CHECK(canonical);
    }
    CHECK(squares == static_cast<int>(f.q() + 1) / 2);
  }
}

TEST_CASE("sqrt covers both Tonelli-Shanks branches") {
  Field easy = Field::prime(PrimeModulus(7));
  CHECK(easy.mul(easy.sqrt(easy.from_int(2)), easy.sqrt(easy.from_int(2))) == easy.from_int(2));
  Field hard = Field::prime(PrimeModulus(17));
  Fq two = hard.from_int(2);
  CHECK(hard.mul(hard.sqrt(two), hard.sqrt(two)) == two);
}

TEST_CASE("index and from_index are inverse bijections") {
  Field f = Field::quadratic(PrimeModulus(5));
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < f.q(); ++i) {
    Fq x = f.from_index(i);
    CHECK(f.index(x) == i);
    seen.insert(f.index(x));
  }
  CHECK(seen.size() == f.q());
  CHECK_THROWS_AS(f.from_index(25), vgt::FieldMismatch);
}

TEST_CASE("str renders prime and extension elements") {
  Field f5 = Field::prime(PrimeModulus(5));
  CHECK(f5.str(f5.from_int(3)) == "3");
  Field f25 = Field::quadratic(PrimeModulus(5));
  CHECK(f25.str(f25.make(3, 2)) == "3+2*w");
  CHECK(f25.str(f25.make(0, 1)) == "w");
  CHECK(f25.str(f25.zero()) == "0");
}

TEST_CASE("legendre wrappers match jacobi and handle rationals") {
  PrimeModulus p(11);
  for (int64_t n = -15; n <= 15; ++n) CHECK(vgt::legendre(n, p) == vgt::jacobi(n, 11));
  CHECK(vgt::legendre(vgt::Rational(2, 3), p) == vgt::jacobi(6, 11));
  CHECK(vgt::legendre(vgt::Rational(11, 3), p) == 0);
  CHECK(vgt::legendre(vgt::Rational(3, 11), p) == 0);
  CHECK(vgt::legendre(vgt::Rational(-1, 2), p) == vgt::jacobi(-2, 11));
}
