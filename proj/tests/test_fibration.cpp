#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "vgt/errors.hpp"
#include "vgt/fibration.hpp"

using vgt::Field;
using vgt::FiberClass;
using vgt::Fq;
using vgt::PrimeModulus;
using vgt::ProjPoint;
using vgt::Rational;
using vgt::SurfaceParam;

TEST_CASE("projective points compare and guard their value") {
  Field f = Field::prime(PrimeModulus(5));
  ProjPoint inf = ProjPoint::infinity();
  ProjPoint two = ProjPoint::finite(f.from_int(2));
  CHECK(inf.is_infinity());
  CHECK(!two.is_infinity());
  CHECK(two.value() == f.from_int(2));
  CHECK(inf == ProjPoint::infinity());
  CHECK(!(inf == two));
  CHECK_THROWS_AS(inf.value(), vgt::UndefinedAtZeroOrInfinity);
}

TEST_CASE("the family excludes a = 1 and a = -1") {
  CHECK_THROWS_AS(SurfaceParam{Rational(1)}, vgt::BadParameter);
  CHECK_THROWS_AS(SurfaceParam{Rational(-1)}, vgt::BadParameter);
  CHECK_THROWS_AS(SurfaceParam{Rational(3, 3)}, vgt::BadParameter);
  CHECK_NOTHROW(SurfaceParam{Rational(0)});
  CHECK_NOTHROW(SurfaceParam{Rational(1, 3)});
}

TEST_CASE("derived parameter quantities") {
  SurfaceParam param{Rational(2)};
  CHECK(param.two_times_one_plus_a() == Rational(6));
  CHECK(param.two_times_one_minus_a() == Rational(-2));
  CHECK(param.one_minus_a_squared() == Rational(-3));
  SurfaceParam third{Rational(1, 3)};
  CHECK(third.two_times_one_plus_a() == Rational(8, 3));
  CHECK(third.two_times_one_minus_a() == Rational(4, 3));
  CHECK(third.one_minus_a_squared() == Rational(8, 9));
}

TEST_CASE("ramified support and square classes are as computed by hand") {
  CHECK(SurfaceParam{Rational(2)}.ramified_support() == std::vector<int64_t>{2, 3});
  CHECK(SurfaceParam{Rational(3)}.ramified_support() == std::vector<int64_t>{2});
  CHECK(SurfaceParam{Rational(5)}.ramified_support() == std::vector<int64_t>{2, 3});
  CHECK(SurfaceParam{Rational(-2)}.ramified_support() == std::vector<int64_t>{2, 3});
  CHECK(SurfaceParam{Rational(1, 3)}.ramified_support() == std::vector<int64_t>{2, 3});

  CHECK(SurfaceParam{Rational(2)}.square_classes() == std::array<int64_t, 3>{6, -2, -3});
  CHECK(SurfaceParam{Rational(3)}.square_classes() == std::array<int64_t, 3>{2, -1, -2});
  CHECK(SurfaceParam{Rational(1, 3)}.square_classes() == std::array<int64_t, 3>{6, 3, 2});
}

TEST_CASE("good primes avoid the support and the excluded residues") {
  SurfaceParam param{Rational(2)};
  CHECK(!param.good_prime(2));
  CHECK(!param.good_prime(3));
  CHECK(param.good_prime(5));
  CHECK(param.good_prime(7));
  CHECK_THROWS_AS(param.require_good(PrimeModulus(3)), vgt::BadPrime);
  CHECK_NOTHROW(param.require_good(PrimeModulus(5)));

  SurfaceParam third{Rational(1, 3)};
  CHECK(!third.good_prime(3));
  CHECK(third.good_prime(5));
}

TEST_CASE("parameter reduction matches modular inversion") {
  Field f7 = Field::prime(PrimeModulus(7));
  CHECK(vgt::reduce_param(SurfaceParam{Rational(1, 3)}, f7) == f7.from_int(5));
  CHECK(vgt::reduce_param(SurfaceParam{Rational(-2)}, f7) == f7.from_int(5));
  Field f25 = Field::quadratic(PrimeModulus(5));
  Fq a = vgt::reduce_param(SurfaceParam{Rational(1, 3)}, f25);
  CHECK(f25.mul(a, f25.from_int(3)) == f25.one());
}

TEST_CASE("covering maps agree with the oracle across whole fields") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{13, 1}, {7, 2}}) {
    Field f = r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
    vgt_test::OracleField F = r == 1 ? vgt_test::OracleField::make(p, 1)
                                     : vgt_test::OracleField::with_d(p, f.nonresidue());
    auto lift = [&](const ProjPoint& t) {
      return t.is_infinity() ? vgt_test::OPoint{true, {}}
                             : vgt_test::OPoint{false, {t.value().c0, t.value().c1}};
    };
    auto same = [&](const ProjPoint& s, const vgt_test::OPoint& t) {
      if (s.is_infinity() || t.inf) return s.is_infinity() == t.inf;
      return s.value().c0 == t.v.a && s.value().c1 == t.v.b;
    };
    for (uint64_t i = 0; i <= f.q(); ++i) {
      ProjPoint t =
          i == f.q() ? ProjPoint::infinity() : ProjPoint::finite(f.from_index(i));
      CHECK(same(vgt::map_h(f, t), vgt_test::o_map_h(F, lift(t))));
      CHECK(same(vgt::map_j(f, t), vgt_test::o_map_j(F, lift(t))));
    }
  }
}

TEST_CASE("covering maps send the expected special points to infinity") {
  Field f = Field::prime(PrimeModulus(7));
  CHECK(vgt::map_h(f, ProjPoint::infinity()).is_infinity());
  CHECK(vgt::map_h(f, ProjPoint::finite(f.zero())).is_infinity());
  CHECK(vgt::map_j(f, ProjPoint::infinity()).is_infinity());
  CHECK(vgt::map_j(f, ProjPoint::finite(f.zero())).is_infinity());
  CHECK(vgt::map_h(f, ProjPoint::finite(f.from_int(2))) == ProjPoint::finite(f.zero()));
  CHECK(vgt::map_j(f, ProjPoint::finite(f.one())) == ProjPoint::finite(f.zero()));
}

TEST_CASE("multiplicity profile matches brute preimage counting") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{5, 1}, {13, 1}, {5, 2}, {11, 2}}) {
    Field f = r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
    vgt_test::OracleField F = r == 1 ? vgt_test::OracleField::make(p, 1)
                                     : vgt_test::OracleField::with_d(p, f.nonresidue());
    auto prof = vgt::MultiplicityProfile::compute(f);
    for (uint64_t i = 0; i < f.q(); ++i) {
      Fq t = f.from_index(i);
      CHECK(prof.at(ProjPoint::finite(t)) ==
            vgt_test::o_multiplicity(F, vgt_test::OPoint{false, {t.c0, t.c1}}));
    }
    CHECK(prof.at(ProjPoint::infinity()) ==
          vgt_test::o_multiplicity(F, vgt_test::OPoint{true, {}}));
  }
}

TEST_CASE("multiplicity profile invariants hold exhaustively") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{5, 1},  {7, 1}, {11, 1},
                                                           {13, 1}, {3, 2}, {7, 2}}) {
    Field f = r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
    auto prof = vgt::MultiplicityProfile::compute(f);
    CHECK(prof.sum() == 0);
    CHECK(prof.at(ProjPoint::infinity()) == 2);
    for (uint64_t i = 0; i < f.q(); ++i) {
      Fq t = f.from_index(i);
      int m = prof.at(ProjPoint::finite(t));
      CHECK(m % 2 == 0);
      CHECK(m == prof.at(ProjPoint::finite(f.neg(t))));
      CHECK(prof.at_index(i) == m);
    }
    CHECK(prof.at_index(f.q()) == 2);
  }
}

TEST_CASE("profile cache shares one profile per field") {
  vgt::ProfileCache cache;
  Field f = Field::quadratic(PrimeModulus(7));
  auto p1 = cache.get(f);
  auto p2 = cache.get(Field::quadratic(PrimeModulus(7)));
  CHECK(p1.get() == p2.get());
  auto p3 = cache.get(Field::prime(PrimeModulus(7)));
  CHECK(p1.get() != p3.get());
}

TEST_CASE("discriminant vanishes exactly on the singular loci") {
  Field f = Field::prime(PrimeModulus(13));
  SurfaceParam param{Rational(2)};
  Fq a = vgt::reduce_param(param, f);
  for (uint64_t c = 1; c < 13; ++c) {
    Fq t = f.from_int(static_cast<int64_t>(c));
    Fq t2 = f.mul(t, t);
    bool ramified = f.is_zero(f.add(t2, f.one()));
    bool node = f.mul(f.sub(f.one(), a), t2) == f.add(f.one(), a);
    Fq disc = vgt::discriminant(f, a, t);
    CHECK(f.is_zero(disc) == (ramified || node));
  }
  CHECK_THROWS_AS(vgt::discriminant(f, a, f.zero()), vgt::UndefinedAtZeroOrInfinity);
}

TEST_CASE("fiber classification hits every class over F_13") {
  Field f = Field::prime(PrimeModulus(13));
  Fq a = f.from_int(2);
  std::map<FiberClass, int> seen;
  for (uint64_t i = 0; i < 13; ++i) {
    seen[vgt::classify_fiber(f, a, ProjPoint::finite(f.from_index(i)))] += 1;
  }
  seen[vgt::classify_fiber(f, a, ProjPoint::infinity())] += 1;
  CHECK(seen[FiberClass::SpecialZero] == 1);
  CHECK(seen[FiberClass::SpecialInfinity] == 1);
  CHECK(seen[FiberClass::SpecialI] == 2);
  CHECK(seen[FiberClass::SpecialNode] == 2);
  CHECK(seen[FiberClass::General] == 13 + 1 - 6);
  CHECK(vgt::classify_fiber(f, a, ProjPoint::finite(f.from_int(5))) == FiberClass::SpecialI);
  CHECK(vgt::classify_fiber(f, a, ProjPoint::finite(f.from_int(6))) == FiberClass::SpecialNode);
}

TEST_CASE("classification refuses overlapping special loci") {
  Field f = Field::prime(PrimeModulus(3));
  Fq a = f.from_int(5);
  CHECK_THROWS_AS(vgt::classify_fiber(f, a, ProjPoint::finite(f.zero())), vgt::Error);
}

TEST_CASE("fiber class names are stable") {
  CHECK(std::string(vgt::fiber_class_name(FiberClass::General)) == "general");
  CHECK(std::string(vgt::fiber_class_name(FiberClass::SpecialZero)) == "zero");
  CHECK(std::string(vgt::fiber_class_name(FiberClass::SpecialInfinity)) == "infinity");
  CHECK(std::string(vgt::fiber_class_name(FiberClass::SpecialNode)) == "node");
  CHECK(std::string(vgt::fiber_class_name(FiberClass::SpecialI)) == "i");
}
