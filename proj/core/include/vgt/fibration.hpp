#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "vgt/ff.hpp"
#include "vgt/rational.hpp"

namespace vgt {

// Geometry of the elliptic fibration over the base line: the surface
// parameter with its ramification data, the two rational covering maps of
// the t-line, the multiplicity profile their fiber counts weight, and the
// classification of base points into general and special fibers.

// A point of the projective t-line over a finite field: either a field
// element or the point at infinity.
class ProjPoint {
 public:
  static ProjPoint infinity() { return ProjPoint(true, Fq{}); }
  static ProjPoint finite(const Fq& v) { return ProjPoint(false, v); }

  bool is_infinity() const { return inf_; }
  // The underlying element; throws UndefinedAtZeroOrInfinity at infinity.
  const Fq& value() const;

  bool operator==(const ProjPoint& o) const = default;

 private:
  ProjPoint(bool inf, const Fq& v) : inf_(inf), v_(v) {}
  bool inf_;
  Fq v_;
};

enum class FiberClass {
  General,
  SpecialZero,      // t = 0
  SpecialInfinity,  // t = infinity
  SpecialNode,      // (1 - a) t^2 = 1 + a, the nodal fibers
  SpecialI,         // t^2 = -1, where the covering data degenerates
};

const char* fiber_class_name(FiberClass c);

// The rational surface parameter a together with the primes where the
// family degenerates.  Construction rejects a = 1 and a = -1, which fall
// outside the family.
class SurfaceParam {
 public:
  explicit SurfaceParam(const Rational& a);

  const Rational& a() const { return a_; }

  Rational two_times_one_plus_a() const;
  Rational two_times_one_minus_a() const;
  Rational one_minus_a_squared() const;

  // Squarefree parts of 2(1+a), 2(1-a), 1-a^2 as classes in Q*/Q*^2.
  std::array<int64_t, 3> square_classes() const;

  // Sorted distinct primes dividing 2(1+a)(1-a) or the denominator of a;
  // always contains 2.
  const std::vector<int64_t>& ramified_support() const { return support_; }

  // True when reduction mod p keeps the surface in the family: p odd, the
  // denominator of a is a unit, and a is not 1 or -1 mod p.
  bool good_prime(uint64_t p) const;
  void require_good(const PrimeModulus& p) const;

 private:
  Rational a_;
  std::vector<int64_t> support_;
};

// Reduction of the parameter into a field of good characteristic.
Fq reduce_param(const SurfaceParam& param, const Field& f);

// The degree-2 covering maps of the t-line: h(u) = (u^2 - 4) / (4u) and
// j(z) = (z^2 - 1) / z, extended to the projective line.
ProjPoint map_h(const Field& f, const ProjPoint& u);
ProjPoint map_j(const Field& f, const ProjPoint& z);

// m'(t) = #(h o j)^-1(t) - #h^-1(t), the signed weight each fiber count
// carries in the trace formula.  Computed once per field by walking both
// covers; O(q) time and memory.
class MultiplicityProfile {
 public:
  static MultiplicityProfile compute(const Field& f);

  const Field& field() const { return f_; }
  int at(const ProjPoint& t) const;
  // Positions 0..q-1 are element indices, position q is infinity.
  int at_index(uint64_t i) const;

  // Sum over the whole line; zero, since both covers have degree 2.
  int64_t sum() const;

 private:
  explicit MultiplicityProfile(const Field& f) : f_(f) {}
  Field f_;
  std::vector<int16_t> m_;
};

// Process-wide cache of profiles keyed by (p, r); computing one is O(q),
// so sweeps and the sieve share them.
class ProfileCache {
 public:
  std::shared_ptr<const MultiplicityProfile> get(const Field& f);

 private:
  std::mutex mu_;
  std::map<std::pair<uint64_t, int>, std::shared_ptr<const MultiplicityProfile>> cache_;
};

// Discriminant of the fiber cubic at finite nonzero t, up to the square
// factors dropped in the closed form: 64 (a+1) (t^2+1) ((a-1) t^2 + (a+1))
// divided by t^4.  Throws UndefinedAtZeroOrInfinity at t = 0 and infinity.
Fq discriminant(const Field& f, const Fq& a, const Fq& t);

// Classification of a base point against the special loci.  The loci are
// pairwise disjoint in good characteristic; that is asserted, so feeding
// this a bad prime's reduction throws rather than misclassifying.
FiberClass classify_fiber(const Field& f, const Fq& a, const ProjPoint& t);

}  // namespace vgt
