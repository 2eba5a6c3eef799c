#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgt/fibration.hpp"
#include "vgt/trace.hpp"

namespace vgt {

// Elimination sieve for the determinant character of a two-dimensional
// piece of the transcendental representation.  The determinant is a
// quadratic character p -> (D | p) for some squarefree D supported on the
// ramified primes of the surface; for each nontrivial candidate D the
// sieve looks for a witness prime p with (D | p) = -1 where one of two
// trace conditions forces the determinant to be trivial at Frobenius,
// which rules D out.  When every candidate falls, the determinant must be
// the trivial class, and each elimination is recorded as a replayable
// certificate.

// A nonzero squarefree integer standing for a class in Q*/Q*^2; 1 is the
// trivial class.
using SquareClass = int64_t;

SquareClass square_class_of(const Rational& x);

// Nontrivial candidate classes supported on the ramified primes of the
// parameter, both signs, ordered by (|D|, positive first).
std::vector<SquareClass> candidate_classes(const SurfaceParam& param);

enum class EliminationRule { A, B };

enum class EliminationOutcome { ForcedOne, Unconstrained };

// Rule B: the trace at a good prime p avoids +-p.
bool rule_b_fires(int64_t trace_p, uint64_t p);
// Rule A: the trace over F_{p^2} avoids 3 p^2 mod 8.
bool rule_a_fires(int64_t trace_p2, uint64_t p);

// The dichotomy the witness search runs on: if either rule fires at p the
// determinant value at Frobenius is forced to 1, otherwise the witness
// says nothing.
EliminationOutcome elimination_rule(int64_t trace_p, std::optional<int64_t> trace_p2,
                                    uint64_t p);

struct EliminationCertificate {
  Rational param_a;
  SquareClass discriminant = 0;
  uint64_t witness_p = 0;
  EliminationRule rule = EliminationRule::B;
  int legendre_d_p = 0;  // always -1 on emitted certificates
  int sym_two_one_plus_a = 0;
  int sym_two_one_minus_a = 0;
  std::optional<int64_t> trace_p;
  std::optional<int64_t> trace_p2;
  uint64_t q = 0;  // p for rule B, p^2 for rule A
};

// Memoized traces for one parameter, shared across the candidate loop so
// each (p, r) is computed once.  Not thread-safe; the sieve is serial by
// design, its reports are ordering-sensitive.
class SieveContext {
 public:
  explicit SieveContext(const SurfaceParam& param) : param_(param) {}

  const SurfaceParam& param() const { return param_; }
  int64_t trace(uint64_t p, int r);

 private:
  SurfaceParam param_;
  ProfileCache profiles_;
  std::map<std::pair<uint64_t, int>, int64_t> memo_;
};

// Tries exactly one witness prime: checks p is good, coprime to D, and
// inert for D, then applies rule B and, failing that, rule A.  Returns
// the certificate when a rule fires.
std::optional<EliminationCertificate> eliminate_at(SieveContext& ctx, SquareClass d,
                                                   uint64_t p);

// Witness search over increasing primes p <= prime_bound; first hit wins,
// so certificates are as small as the bound allows.  Throws BadParameter
// on a candidate that is not a nontrivial squarefree class.
std::optional<EliminationCertificate> eliminate(SieveContext& ctx, SquareClass d,
                                                uint64_t prime_bound);

struct SieveReport {
  Rational param_a;
  uint64_t prime_bound = 0;
  std::vector<SquareClass> candidates;
  std::vector<EliminationCertificate> certificates;
  std::vector<SquareClass> survivors;
  bool all_eliminated = false;
  // The standing assumptions certificates are issued under, spelled out
  // so a replayer knows what they do and do not cover.
  std::vector<std::string> assumptions;
};

// Runs the sieve over every candidate class.  all_eliminated == true is
// the machine-checked statement that the determinant character is
// trivial; survivors are reported honestly when the bound is too small,
// never treated as counterexamples.
SieveReport verify_trivial_determinant(const SurfaceParam& param, uint64_t prime_bound);

struct ReplayResult {
  bool ok = false;
  std::string detail;
};

// Re-derives everything a certificate claims from scratch: parameter
// validity, witness primality and goodness, the Legendre value, the
// symbol pair, the traces, and the fired rule's premise.  Any mismatch is
// reported with the failing step.
ReplayResult replay_certificate(const EliminationCertificate& cert);

struct HypothesisReport {
  Rational param_a;
  bool mod5_ok = false;  // a = 2 or 3 mod 5, denominator a unit mod 5
  bool two_one_plus_nonsquare = false;
  bool two_one_minus_nonsquare = false;
  bool theorem_hypotheses = false;  // conjunction of the three above
  bool mod7_alternative = false;    // a = 3 or 4 mod 7, denominator a unit
};

// The unconditional hypotheses under which the sieve is guaranteed to
// succeed, plus the mod-7 alternative route.  The sieve itself never
// requires them; they only predict its outcome.
HypothesisReport check_hypotheses(const SurfaceParam& param);

}  // namespace vgt
