#include "vgt/fibration.hpp"

#include <algorithm>

#include "vgt/arith.hpp"
#include "vgt/errors.hpp"

namespace vgt {

const Fq& ProjPoint::value() const {
  if (inf_) throw UndefinedAtZeroOrInfinity("value() of the point at infinity");
  return v_;
}

const char* fiber_class_name(FiberClass c) {
  switch (c) {
    case FiberClass::General: return "general";
    case FiberClass::SpecialZero: return "zero";
    case FiberClass::SpecialInfinity: return "infinity";
    case FiberClass::SpecialNode: return "node";
    case FiberClass::SpecialI: return "i";
  }
  return "?";
}

SurfaceParam::SurfaceParam(const Rational& a) : a_(a) {
  if (a == Rational(1) || a == Rational(-1)) {
    throw BadParameter("parameter a = " + a.str() + " is outside the family");
  }
  // Primes of 2 (1+a) (1-a) and of the denominator.  With a = n/d in
  // lowest terms these are 2, the primes of n+d, of d-n, and of d.
  std::vector<int64_t> s{2};
  for (int64_t v : {a.num() + a.den(), a.den() - a.num(), a.den()}) {
    if (v == 1 || v == -1) continue;
    for (int64_t p : prime_factors(v)) s.push_back(p);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  support_ = std::move(s);
}

Rational SurfaceParam::two_times_one_plus_a() const {
  return Rational(2) * (Rational(1) + a_);
}

Rational SurfaceParam::two_times_one_minus_a() const {
  return Rational(2) * (Rational(1) - a_);
}

Rational SurfaceParam::one_minus_a_squared() const {
  return (Rational(1) - a_) * (Rational(1) + a_);
}

namespace {

int64_t rational_square_class(const Rational& x) {
  __int128 prod = static_cast<__int128>(x.num()) * x.den();
  if (prod > INT64_MAX || prod < INT64_MIN) {
    throw Error("square class: rational overflow");
  }
  return squarefree_part(static_cast<int64_t>(prod));
}

}  // namespace

std::array<int64_t, 3> SurfaceParam::square_classes() const {
  return {rational_square_class(two_times_one_plus_a()),
          rational_square_class(two_times_one_minus_a()),
          rational_square_class(one_minus_a_squared())};
}

bool SurfaceParam::good_prime(uint64_t p) const {
  if (p > static_cast<uint64_t>(INT64_MAX)) return true;
  return !std::binary_search(support_.begin(), support_.end(), static_cast<int64_t>(p));
}

void SurfaceParam::require_good(const PrimeModulus& p) const {
  if (!good_prime(p.value())) {
    throw BadPrime("prime " + std::to_string(p.value()) + " is ramified for a = " + a_.str());
  }
}

Fq reduce_param(const SurfaceParam& param, const Field& f) {
  param.require_good(PrimeModulus(f.p()));
  return f.from_rational(param.a());
}

ProjPoint map_h(const Field& f, const ProjPoint& u) {
  if (u.is_infinity()) return ProjPoint::infinity();
  const Fq& v = u.value();
  Fq den = f.mul(f.from_int(4), v);
  if (f.is_zero(den)) return ProjPoint::infinity();
  Fq num = f.sub(f.mul(v, v), f.from_int(4));
  return ProjPoint::finite(f.div(num, den));
}

ProjPoint map_j(const Field& f, const ProjPoint& z) {
  if (z.is_infinity()) return ProjPoint::infinity();
  const Fq& v = z.value();
  if (f.is_zero(v)) return ProjPoint::infinity();
  Fq num = f.sub(f.mul(v, v), f.one());
  return ProjPoint::finite(f.div(num, v));
}

MultiplicityProfile MultiplicityProfile::compute(const Field& f) {
  MultiplicityProfile out(f);
  uint64_t q = f.q();
  out.m_.assign(q + 1, 0);
  auto slot = [&](const ProjPoint& t) -> int16_t& {
    return out.m_[t.is_infinity() ? q : f.index(t.value())];
  };
  for (uint64_t i = 0; i < q; ++i) {
    ProjPoint z = ProjPoint::finite(f.from_index(i));
    slot(map_h(f, map_j(f, z)))++;
    ProjPoint u = z;
    slot(map_h(f, u))--;
  }
  slot(map_h(f, map_j(f, ProjPoint::infinity())))++;
  slot(map_h(f, ProjPoint::infinity()))--;
  return out;
}

int MultiplicityProfile::at(const ProjPoint& t) const {
  return at_index(t.is_infinity() ? f_.q() : f_.index(t.value()));
}

int MultiplicityProfile::at_index(uint64_t i) const {
  if (i >= m_.size()) {
    throw FieldMismatch("profile index " + std::to_string(i) + " out of range");
  }
  return m_[i];
}

int64_t MultiplicityProfile::sum() const {
  int64_t s = 0;
  for (int16_t v : m_) s += v;
  return s;
}

std::shared_ptr<const MultiplicityProfile> ProfileCache::get(const Field& f) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(f.p(), f.r());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto prof = std::make_shared<const MultiplicityProfile>(MultiplicityProfile::compute(f));
  cache_.emplace(key, prof);
  return prof;
}

Fq discriminant(const Field& f, const Fq& a, const Fq& t) {
  if (f.is_zero(t)) throw UndefinedAtZeroOrInfinity("discriminant at t = 0");
  Fq t2 = f.mul(t, t);
  Fq t2p1 = f.add(t2, f.one());
  Fq inner = f.add(f.mul(f.sub(a, f.one()), t2), f.add(a, f.one()));
  Fq num = f.mul(f.from_int(64), f.mul(f.add(a, f.one()), f.mul(t2p1, inner)));
  return f.div(num, f.mul(t2, t2));
}

FiberClass classify_fiber(const Field& f, const Fq& a, const ProjPoint& t) {
  if (t.is_infinity()) return FiberClass::SpecialInfinity;
  const Fq& v = t.value();
  bool zero = f.is_zero(v);
  Fq v2 = f.mul(v, v);
  bool ramified = f.add(v2, f.one()) == f.zero();
  bool node = f.mul(f.sub(f.one(), a), v2) == f.add(f.one(), a);
  int hits = int(zero) + int(ramified) + int(node);
  if (hits > 1) {
    throw Error("special loci overlap at t = " + f.str(v) +
                "; the characteristic is not good for this parameter");
  }
  if (zero) return FiberClass::SpecialZero;
  if (ramified) return FiberClass::SpecialI;
  if (node) return FiberClass::SpecialNode;
  return FiberClass::General;
}

}  // namespace vgt
