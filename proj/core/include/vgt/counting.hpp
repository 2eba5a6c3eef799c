#pragma once

#include <cstdint>
#include <vector>

#include "vgt/fibration.hpp"

namespace vgt {

// Point counts of individual fibers.  The production counter sums the
// quadratic character of the fiber cubic; the naive counter enumerates Y
// against a square table and exists to cross-check the fast path on small
// fields.

// Monic cubic X^3 + c2 X^2 + c1 X + c0 whose character sum counts the
// fiber, after rescaling (X, Y) by (t^2, t^3) to clear denominators.  The
// rescale is a square in each coordinate pattern, so it moves points
// around without changing their number.  c0 is identically zero for this
// family; it is kept so the shape of the curve stays visible.
struct FiberCubic {
  Fq c2;
  Fq c1;
  Fq c0;
};

FiberCubic fiber_cubic(const Field& f, const Fq& a, const ProjPoint& t);

struct FiberCount {
  int64_t n = 0;  // points on the fiber over F_q, point at infinity included
  ProjPoint t = ProjPoint::infinity();
  FiberClass cls = FiberClass::General;
  bool smooth = true;
};

// Table of the quadratic character over a whole field, indexed by element
// index.  O(q) to build; fiber counting over many fibers shares one.
class QuadCharTable {
 public:
  explicit QuadCharTable(const Field& f);

  const Field& field() const { return f_; }
  int at_index(uint64_t i) const { return tab_[i]; }

 private:
  Field f_;
  std::vector<int8_t> tab_;
};

// #fiber(F_q) = q + 1 + sum_X chi(cubic(X)).  On singular fibers this
// counts the curve with the singular point once, which is the convention
// the trace formula wants.  Passing a table is optional; without one a
// local table is built for fields above a small cutoff, below it the
// character is evaluated directly.
FiberCount fiber_count_charsum(const Field& f, const Fq& a, const ProjPoint& t,
                               const QuadCharTable* chi = nullptr);

// Brute-force oracle: tabulates squares, then walks X summing the number
// of Y with Y^2 = cubic(X).  Refuses fields with q > oracle_bound.
FiberCount fiber_count_naive(const Field& f, const Fq& a, const ProjPoint& t,
                             uint64_t oracle_bound = 20000);

}  // namespace vgt
