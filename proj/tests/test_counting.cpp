#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "vgt/counting.hpp"
#include "vgt/errors.hpp"

using vgt::Field;
using vgt::FiberClass;
using vgt::Fq;
using vgt::PrimeModulus;
using vgt::ProjPoint;
using vgt::QuadCharTable;
using vgt::Rational;
using vgt::SurfaceParam;

namespace {

Field make_field(uint64_t p, int r) {
  return r == 1 ? Field::prime(PrimeModulus(p)) : Field::quadratic(PrimeModulus(p));
}

Fq reduce(const Field& f, const Rational& a) {
  return vgt::reduce_param(SurfaceParam{a}, f);
}

}  // namespace

TEST_CASE("fiber cubic coefficients match the model") {
  Field f = Field::prime(PrimeModulus(11));
  Fq a = f.from_int(2);
  auto at_inf = vgt::fiber_cubic(f, a, ProjPoint::infinity());
  CHECK(at_inf.c2 == f.from_int(4));
  CHECK(at_inf.c1 == f.one());
  CHECK(f.is_zero(at_inf.c0));

  Fq t = f.from_int(3);
  auto at_t = vgt::fiber_cubic(f, a, ProjPoint::finite(t));
  CHECK(at_t.c2 == f.from_int(2 * (2 + 1 + 2 * 9)));
  CHECK(at_t.c1 == f.from_int(81));
  CHECK(f.is_zero(at_t.c0));

  auto at_zero = vgt::fiber_cubic(f, a, ProjPoint::finite(f.zero()));
  CHECK(at_zero.c2 == f.from_int(6));
  CHECK(f.is_zero(at_zero.c1));
}

TEST_CASE("quadratic character table matches the character pointwise") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{13, 1}, {5, 2}, {11, 2}}) {
    Field f = make_field(p, r);
    QuadCharTable chi(f);
    for (uint64_t i = 0; i < f.q(); ++i) {
      CHECK(chi.at_index(i) == f.quad_char(f.from_index(i)));
    }
  }
}

TEST_CASE("golden fiber counts over F_5 at a = 2 and a = 3") {
  Field f = Field::prime(PrimeModulus(5));
  CHECK(vgt::fiber_count_charsum(f, reduce(f, Rational(2)), ProjPoint::infinity()).n == 8);
  CHECK(vgt::fiber_count_charsum(f, reduce(f, Rational(2)), ProjPoint::finite(f.zero())).n == 5);
  CHECK(vgt::fiber_count_charsum(f, reduce(f, Rational(3)), ProjPoint::finite(f.zero())).n == 7);
  CHECK(vgt::fiber_count_naive(f, reduce(f, Rational(2)), ProjPoint::infinity()).n == 8);
}

TEST_CASE("character-sum and naive counters agree on sampled fields") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{5, 1}, {11, 1}, {5, 2}, {7, 2}}) {
    Field f = make_field(p, r);
    QuadCharTable chi(f);
    for (auto av : {Rational(2), Rational(3), Rational(-2)}) {
      SurfaceParam param{av};
      if (!param.good_prime(p)) continue;
      Fq a = vgt::reduce_param(param, f);
      for (uint64_t i = 0; i <= f.q(); ++i) {
        ProjPoint t = i == f.q() ? ProjPoint::infinity() : ProjPoint::finite(f.from_index(i));
        auto fast = vgt::fiber_count_charsum(f, a, t, &chi);
        auto slow = vgt::fiber_count_naive(f, a, t);
        CHECK(fast.n == slow.n);
        CHECK(fast.cls == slow.cls);
        CHECK(fast.smooth == slow.smooth);
      }
    }
  }
}

TEST_CASE("counts agree with the independent enumeration oracle") {
  for (auto [p, r] : std::vector<std::pair<uint64_t, int>>{{13, 1}, {7, 2}}) {
    Field f = make_field(p, r);
    vgt_test::OracleField F = r == 1 ? vgt_test::OracleField::make(p, 1)
                                     : vgt_test::OracleField::with_d(p, f.nonresidue());
    Fq a = reduce(f, Rational(2));
    vgt_test::OFq oa{a.c0, a.c1};
    for (uint64_t i = 0; i <= f.q(); ++i) {
      ProjPoint t = i == f.q() ? ProjPoint::infinity() : ProjPoint::finite(f.from_index(i));
      vgt_test::OPoint ot = t.is_infinity()
                                ? vgt_test::OPoint{true, {}}
                                : vgt_test::OPoint{false, {t.value().c0, t.value().c1}};
      CHECK(vgt::fiber_count_charsum(f, a, t).n == vgt_test::o_fiber_count(F, oa, ot));
    }
  }
}

TEST_CASE("rescaling the model does not change fiber counts") {
  Field f = Field::prime(PrimeModulus(13));
  vgt_test::OracleField F = vgt_test::OracleField::make(13, 1);
  Fq a = reduce(f, Rational(2));
  for (uint64_t c = 1; c < 13; ++c) {
    Fq t = f.from_int(static_cast<int64_t>(c));
    long long raw = vgt_test::o_fiber_count_unrescaled(F, {a.c0, a.c1}, {t.c0, t.c1});
    CHECK(vgt::fiber_count_charsum(f, a, ProjPoint::finite(t)).n == raw);
  }
}

TEST_CASE("fiber counts carry class and smoothness") {
  Field f = Field::prime(PrimeModulus(13));
  Fq a = f.from_int(2);
  auto at_inf = vgt::fiber_count_charsum(f, a, ProjPoint::infinity());
  CHECK(at_inf.cls == FiberClass::SpecialInfinity);
  CHECK(at_inf.smooth);
  auto at_zero = vgt::fiber_count_charsum(f, a, ProjPoint::finite(f.zero()));
  CHECK(at_zero.cls == FiberClass::SpecialZero);
  CHECK(!at_zero.smooth);
  auto at_i = vgt::fiber_count_charsum(f, a, ProjPoint::finite(f.from_int(5)));
  CHECK(at_i.cls == FiberClass::SpecialI);
  CHECK(!at_i.smooth);
  auto at_node = vgt::fiber_count_charsum(f, a, ProjPoint::finite(f.from_int(6)));
  CHECK(at_node.cls == FiberClass::SpecialNode);
  CHECK(!at_node.smooth);
  auto general = vgt::fiber_count_charsum(f, a, ProjPoint::finite(f.one()));
  CHECK(general.cls == FiberClass::General);
  CHECK(general.smooth);
}

TEST_CASE("nodal fiber count is q + 1 - chi(-1)") {
  for (uint64_t p : {11ULL, 13ULL, 17ULL, 19ULL}) {
    Field f = Field::prime(PrimeModulus(p));
    SurfaceParam param{Rational(2)};
    if (!param.good_prime(p)) continue;
    Fq a = vgt::reduce_param(param, f);
    Fq ratio = f.div(f.add(f.one(), a), f.sub(f.one(), a));
    if (f.quad_char(ratio) != 1) continue;
    Fq t = f.sqrt(ratio);
    auto n = vgt::fiber_count_charsum(f, a, ProjPoint::finite(t));
    CHECK(n.cls == FiberClass::SpecialNode);
    CHECK(n.n == static_cast<int64_t>(p) + 1 - f.quad_char(f.from_int(-1)));
  }
}

TEST_CASE("counter guards") {
  Field big = Field::quadratic(PrimeModulus(211));
  Fq a = big.from_int(2);
  CHECK_THROWS_AS(vgt::fiber_count_naive(big, a, ProjPoint::infinity(), 20000),
                  vgt::OracleBoundExceeded);
  Field f5 = Field::prime(PrimeModulus(5));
  QuadCharTable wrong(f5);
  Field f7 = Field::prime(PrimeModulus(7));
  CHECK_THROWS_AS(vgt::fiber_count_charsum(f7, f7.from_int(2), ProjPoint::infinity(), &wrong),
                  vgt::FieldMismatch);
}
