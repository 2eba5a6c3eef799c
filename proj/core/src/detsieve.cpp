#include "vgt/detsieve.hpp"

#include <algorithm>

#include "vgt/arith.hpp"
#include "vgt/errors.hpp"

namespace vgt {

SquareClass square_class_of(const Rational& x) {
  if (x.is_zero()) throw BadParameter("square class of zero");
  __int128 prod = static_cast<__int128>(x.num()) * x.den();
  if (prod > INT64_MAX || prod < INT64_MIN) throw Error("square class: rational overflow");
  return squarefree_part(static_cast<int64_t>(prod));
}

std::vector<SquareClass> candidate_classes(const SurfaceParam& param) {
  const auto& primes = param.ramified_support();
  if (primes.size() > 20) throw Error("candidate_classes: support too large to enumerate");
  std::vector<SquareClass> out;
  for (uint64_t mask = 0; mask < (1ull << primes.size()); ++mask) {
    __int128 prod = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1ull << i)) prod *= primes[i];
    }
    if (prod > INT64_MAX) throw Error("candidate_classes: product overflow");
    auto d = static_cast<int64_t>(prod);
    if (d != 1) out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end(), [](SquareClass x, SquareClass y) {
    int64_t ax = x < 0 ? -x : x;
    int64_t ay = y < 0 ? -y : y;
    if (ax != ay) return ax < ay;
    return x > y;
  });
  return out;
}

bool rule_b_fires(int64_t trace_p, uint64_t p) {
  auto v = static_cast<int64_t>(p);
  return trace_p != v && trace_p != -v;
}

bool rule_a_fires(int64_t trace_p2, uint64_t p) {
  int64_t lhs = ((trace_p2 % 8) + 8) % 8;
  auto r = static_cast<int64_t>(p % 8);
  int64_t rhs = (3 * r * r) % 8;
  return lhs != rhs;
}

EliminationOutcome elimination_rule(int64_t trace_p, std::optional<int64_t> trace_p2,
                                    uint64_t p) {
  if (rule_b_fires(trace_p, p)) return EliminationOutcome::ForcedOne;
  if (trace_p2 && rule_a_fires(*trace_p2, p)) return EliminationOutcome::ForcedOne;
  return EliminationOutcome::Unconstrained;
}

int64_t SieveContext::trace(uint64_t p, int r) {
  auto key = std::make_pair(p, r);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  PrimeModulus pm(p);
  Field f = r == 1 ? Field::prime(pm) : Field::quadratic(pm);
  auto prof = profiles_.get(f);
  TraceOptions opt;
  opt.with_breakdown = false;
  opt.profile = prof.get();
  int64_t t = frobenius_trace(param_, f, opt).trace;
  memo_.emplace(key, t);
  return t;
}

namespace {

void require_candidate(SquareClass d) {
  if (d == 0 || d == 1 || squarefree_part(d) != d) {
    throw BadParameter("candidate " + std::to_string(d) +
                       " is not a nontrivial squarefree class");
  }
}

}  // namespace

std::optional<EliminationCertificate> eliminate_at(SieveContext& ctx, SquareClass d,
                                                   uint64_t p) {
  require_candidate(d);
  const SurfaceParam& param = ctx.param();
  if (!param.good_prime(p) || !is_prime(p) || p == 2) return std::nullopt;
  int64_t ad = d < 0 ? -d : d;
  if (ad % static_cast<int64_t>(p) == 0) return std::nullopt;
  PrimeModulus pm(p);
  if (legendre(d, pm) != -1) return std::nullopt;

  EliminationCertificate cert;
  cert.param_a = param.a();
  cert.discriminant = d;
  cert.witness_p = p;
  cert.legendre_d_p = -1;
  cert.sym_two_one_plus_a = legendre(param.two_times_one_plus_a(), pm);
  cert.sym_two_one_minus_a = legendre(param.two_times_one_minus_a(), pm);

  int64_t t_p = ctx.trace(p, 1);
  cert.trace_p = t_p;
  if (rule_b_fires(t_p, p)) {
    cert.rule = EliminationRule::B;
    cert.q = p;
    return cert;
  }
  int64_t t_p2 = ctx.trace(p, 2);
  cert.trace_p2 = t_p2;
  if (rule_a_fires(t_p2, p)) {
    cert.rule = EliminationRule::A;
    cert.q = p * p;
    return cert;
  }
  return std::nullopt;
}

std::optional<EliminationCertificate> eliminate(SieveContext& ctx, SquareClass d,
                                                uint64_t prime_bound) {
  require_candidate(d);
  for (uint64_t p = 3; p <= prime_bound; p = next_prime(p)) {
    if (auto cert = eliminate_at(ctx, d, p)) return cert;
  }
  return std::nullopt;
}

SieveReport verify_trivial_determinant(const SurfaceParam& param, uint64_t prime_bound) {
  if (prime_bound < 3) throw BadParameter("prime bound must be at least 3");
  SieveReport report;
  report.param_a = param.a();
  report.prime_bound = prime_bound;
  report.candidates = candidate_classes(param);
  report.assumptions = {
      "the determinant character is unramified outside 2(1+a)(1-a) and the "
      "denominator of a, so candidates range over square classes supported "
      "on those primes",
      "each certificate holds for every coefficient prime coprime to twice "
      "its witness prime",
  };
  SieveContext ctx(param);
  for (SquareClass d : report.candidates) {
    if (auto cert = eliminate(ctx, d, prime_bound)) {
      report.certificates.push_back(*cert);
    } else {
      report.survivors.push_back(d);
    }
  }
  report.all_eliminated = report.survivors.empty();
  return report;
}

ReplayResult replay_certificate(const EliminationCertificate& cert) {
  auto fail = [](const std::string& why) { return ReplayResult{false, why}; };
  try {
    SurfaceParam param(cert.param_a);
    SquareClass d = cert.discriminant;
    require_candidate(d);
    if (cert.legendre_d_p != -1) return fail("certificate does not claim an inert witness");
    uint64_t p = cert.witness_p;
    if (!is_prime(p) || p == 2) return fail("witness is not an odd prime");
    if (!param.good_prime(p)) return fail("witness prime is ramified for the parameter");
    int64_t ad = d < 0 ? -d : d;
    if (ad % static_cast<int64_t>(p) == 0) return fail("witness divides the candidate");
    PrimeModulus pm(p);
    if (legendre(d, pm) != -1) return fail("Legendre symbol of the candidate is not -1");
    if (legendre(param.two_times_one_plus_a(), pm) != cert.sym_two_one_plus_a ||
        legendre(param.two_times_one_minus_a(), pm) != cert.sym_two_one_minus_a) {
      return fail("recorded symbol pair does not match recomputation");
    }
    SieveContext ctx(param);
    if (cert.trace_p) {
      if (ctx.trace(p, 1) != *cert.trace_p) return fail("recorded trace at p is wrong");
    }
    if (cert.trace_p2) {
      if (ctx.trace(p, 2) != *cert.trace_p2) return fail("recorded trace at p^2 is wrong");
    }
    if (cert.rule == EliminationRule::B) {
      if (!cert.trace_p) return fail("rule B certificate lacks the trace at p");
      if (cert.q != p) return fail("rule B certificate has q != p");
      if (!rule_b_fires(*cert.trace_p, p)) return fail("rule B premise does not hold");
    } else {
      if (!cert.trace_p2) return fail("rule A certificate lacks the trace at p^2");
      if (cert.q != p * p) return fail("rule A certificate has q != p^2");
      if (!rule_a_fires(*cert.trace_p2, p)) return fail("rule A premise does not hold");
    }
    return ReplayResult{true, ""};
  } catch (const Error& e) {
    return fail(e.what());
  }
}

HypothesisReport check_hypotheses(const SurfaceParam& param) {
  HypothesisReport rep;
  rep.param_a = param.a();
  const Rational& a = param.a();
  if (a.den() % 5 != 0) {
    uint64_t r5 = a.mod(5);
    rep.mod5_ok = r5 == 2 || r5 == 3;
  }
  rep.two_one_plus_nonsquare = !param.two_times_one_plus_a().is_square();
  rep.two_one_minus_nonsquare = !param.two_times_one_minus_a().is_square();
  rep.theorem_hypotheses =
      rep.mod5_ok && rep.two_one_plus_nonsquare && rep.two_one_minus_nonsquare;
  if (a.den() % 7 != 0) {
    uint64_t r7 = a.mod(7);
    rep.mod7_alternative = r7 == 3 || r7 == 4;
  }
  return rep;
}

}  // namespace vgt
