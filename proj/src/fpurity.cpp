#include "fsing/fpurity.hpp"

#include <stdexcept>

namespace fsing {

namespace {

std::int64_t powInt(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r >= (std::int64_t(1) << 31))
      throw ResourceLimitError("p^e exceeds exponent range");
  }
  return r;
}

// The walk down from the socle gives up after this many probes (or when
// pieces get wide) and the search bisects instead.
constexpr int kWalkSteps = 12;
constexpr std::int64_t kWalkWidth = 1500;

// M_e located between 0 and a degree known to have a nonzero colon space.
MeReport findMe(const Ideal& tau, int e, std::int64_t q,
                std::int64_t startHi, const Limits& limits) {
  MeReport report;
  report.e = e;
  const std::size_t nvars = tau.nvars();

  auto probe = [&](std::int64_t t) {
    return colonSpaceDim(e, tau, t, limits) > 0;
  };
  if (!probe(startHi)) throw std::logic_error("M_e upper bound probe failed");

  // The degrees with nonzero colon space form an interval ending at the
  // socle degree (the box quotient is Gorenstein, so every nonzero ideal
  // in it meets every degree up to the top). Walk down while cheap, then
  // bisect on the same interval property.
  std::int64_t hi = startHi;
  std::int64_t me = -1;
  for (int step = 0; step < kWalkSteps && hi > 0; ++step) {
    std::int64_t below = hi - 1;
    if (countMonomials(nvars, below, q - 1, limits) > kWalkWidth) break;
    if (!probe(below)) {
      me = hi;
      break;
    }
    hi = below;
  }
  if (me < 0) {
    if (hi == 0) {
      me = 0;
    } else {
      std::int64_t lo = -1;  // zero below degree 0
      while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (probe(mid))
          hi = mid;
        else
          lo = mid;
      }
      me = hi;
    }
  }

  report.Me = me;
  report.normalized = me - static_cast<std::int64_t>(nvars) * q;
  SubspaceBasis basis = colonSpace(e, tau, me, limits);
  if (basis.dim() == 0)
    throw std::logic_error("empty colon space at the located minimum");
  // Reduced basis vector with the graded-lex least leading monomial.
  report.witness = basis.rowPoly(tau.field(), basis.dim() - 1);
  return report;
}

}  // namespace

int e0LevelOf(const Ideal& tau) {
  for (int e = 0; e < 64; ++e)
    for (const auto& g : tau.gens())
      if (!g.inFrobeniusPowerOfMax(e)) return e;
  throw std::logic_error("no escape level found for test ideal");
}

int e0Level(const Poly& f, const Limits& limits) {
  return e0LevelOf(testIdeal(f, 1, limits));
}

MeReport computeMeAt(const Ideal& tau, int e, const Limits& limits) {
  if (e < e0LevelOf(tau))
    throw InvalidArgument("level below e0 for M_e");
  MeReport report;
  report.e = e;
  if (tau.isUnit()) return report;  // colon space is trivial: M_e infinite

  const std::int64_t q = powInt(tau.field().p(), e);
  const std::int64_t socle = static_cast<std::int64_t>(tau.nvars()) * (q - 1);
  // The socle class itself multiplies every proper ideal into m^[e].
  return findMe(tau, e, q, socle, limits);
}

MeReport computeMe(const Poly& f, int e, const Limits& limits) {
  return computeMeAt(testIdeal(f, 1, limits), e, limits);
}

OrInf ellMin(const Ideal& tau, int n, std::int64_t d, const Limits& limits) {
  std::int64_t bound =
      std::max<std::int64_t>(0, std::int64_t(n + 1) * (d - 1) - n);
  for (std::int64_t ell = 0; ell <= bound; ++ell)
    if (quotientDim(tau, ell, limits) == 0) return ell;
  return std::nullopt;
}

IsolatedVerdict isolatedPoint(const Poly& f, const Limits& limits) {
  if (f.isZero() || !f.isHomogeneous() || f.degree() < 1)
    throw InvalidArgument("verdict needs a homogeneous f of degree >= 1");
  IsolatedVerdict v;
  v.fPureAtM = !fedderNotFPure(f, limits);
  Ideal tau = testIdeal(f, 1, limits);
  v.ellMin = ellMin(tau, static_cast<int>(f.nvars()) - 1, f.degree(), limits);
  v.isolated = !v.fPureAtM && v.ellMin.has_value();
  return v;
}

bool colonFormulaMatchesDirect(PrimeField field, std::size_t nvars, int e,
                               std::int64_t c, const Limits& limits) {
  const std::int64_t q = powInt(field.p(), e);
  const std::int64_t socle = static_cast<std::int64_t>(nvars) * (q - 1);
  const std::int64_t start = socle + 1 - c;  // (n+1)p^e - n - c
  if (start < 0) throw InvalidArgument("colon formula exponent is negative");
  Ideal power = maxPowerIdeal(field, nvars, c, limits);
  // Zero below `start` and full from `start` on; the colon space degrees
  // form an interval and fullness propagates upward, so two probes decide.
  bool zeroBelow =
      start == 0 || colonSpaceDim(e, power, start - 1, limits) == 0;
  bool fullAt = start > socle ||
                colonSpaceDim(e, power, start, limits) ==
                    countMonomials(nvars, start, q - 1, limits);
  return zeroBelow && fullAt;
}

Ideal colonFormulaIdeal(PrimeField field, std::size_t nvars, int e,
                        std::int64_t c, const Limits& limits) {
  const std::int64_t q = powInt(field.p(), e);
  const std::int64_t start = static_cast<std::int64_t>(nvars) * (q - 1) + 1 - c;
  if (start < 0) throw InvalidArgument("colon formula exponent is negative");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < nvars; ++i) {
    Monomial m(nvars);
    m.exps[i] = static_cast<std::int32_t>(q);
    gens.push_back(Poly::monomial(field, m));
  }
  if (start == 0) {
    gens.push_back(Poly::constant(field, nvars, 1));
  } else {
    for (auto& m : monomialsOfDegree(nvars, start, {}, limits))
      gens.push_back(Poly::monomial(field, m));
  }
  return Ideal(field, nvars, std::move(gens));
}

DeltaReport computeDelta(const Poly& f, int eMax, const Limits& limits) {
  if (f.isZero() || !f.isHomogeneous())
    throw InvalidArgument("delta needs a nonzero homogeneous polynomial");
  DeltaReport report;
  const std::size_t nvars = f.nvars();
  const int n = static_cast<int>(nvars) - 1;
  const std::int64_t d = f.degree();
  const std::uint32_t p = f.field().p();

  Ideal tau = testIdeal(f, 1, limits);
  if (tau.isUnit()) {
    report.status = DeltaStatus::Inconclusive;
    report.ellMin = 0;
    report.note = "R/fR is F-pure at m: M_e is infinite, delta is undefined";
    return report;
  }
  try {
    report.ellMin = ellMin(tau, n, d, limits);
  } catch (const ResourceLimitError& err) {
    report.status = DeltaStatus::Inconclusive;
    report.note = std::string("resource limit: ") + err.what();
    return report;
  }
  const bool isolated = report.ellMin.has_value();

  const int e0 = e0LevelOf(tau);
  if (eMax < e0)
    throw InvalidArgument("eMax below e0 = " + std::to_string(e0));

  for (int e = e0; e <= eMax; ++e) {
    MeReport me;
    try {
      if (report.sequence.empty()) {
        me = computeMeAt(tau, e, limits);
      } else {
        // Monotonicity seeds the search: M_e <= norm_{e-1} + (n+1)p^e.
        const std::int64_t q = powInt(p, e);
        const std::int64_t hint =
            report.sequence.back().second + static_cast<std::int64_t>(nvars) * q;
        me = findMe(tau, e, q, hint, limits);
      }
    } catch (const ResourceLimitError& err) {
      report.status = DeltaStatus::Inconclusive;
      report.eUsed = e - 1;
      report.note = std::string("resource limit: ") + err.what();
      return report;
    }
    if (!me.Me)
      throw std::logic_error("M_e infinite although tau is proper");
    const std::int64_t norm = *me.normalized;
    if (!report.sequence.empty() && norm > report.sequence.back().second)
      throw std::logic_error("normalized M_e sequence increased");
    report.sequence.emplace_back(e, norm);
    report.eUsed = e;
    if (isolated) {
      const std::int64_t floor = -n - *report.ellMin;
      if (norm < floor)
        throw std::logic_error("normalized M_e fell below the proven floor");
      if (norm == floor && powInt(p, e) > *report.ellMin &&
          colonFormulaMatchesDirect(f.field(), nvars, e, *report.ellMin,
                                    limits)) {
        report.delta = floor;
        report.status = DeltaStatus::Certified;
        return report;
      }
    }
  }

  if (!isolated) {
    report.status = DeltaStatus::UnboundedDetected;
    report.note = "non-F-pure locus is not isolated: the normalized "
                  "sequence is unbounded below";
    return report;
  }
  const auto& seq = report.sequence;
  if (seq.size() >= 2 && seq[seq.size() - 1].second == seq[seq.size() - 2].second) {
    report.delta = seq.back().second;
    report.status = DeltaStatus::ProbableStable;
    report.note = "last two normalized values agree but the floor was not "
                  "attained";
  } else {
    report.status = DeltaStatus::Inconclusive;
    report.note = "floor not attained by eMax and no repeat observed";
  }
  return report;
}

std::int64_t injectivityBound(const Poly& f, int eMax, const Limits& limits) {
  DeltaReport report = computeDelta(f, eMax, limits);
  if (report.status != DeltaStatus::Certified &&
      report.status != DeltaStatus::ProbableStable)
    throw DeltaUndefinedError("delta undetermined: " + report.note,
                              report.status);
  return *report.delta + f.degree();
}

std::int64_t isolationThreshold(int n, std::int64_t d) {
  if (n < 1 || d < 1) throw InvalidArgument("threshold needs n >= 1, d >= 1");
  return -static_cast<std::int64_t>(n) * (d - 1);
}

std::vector<std::int64_t> completeIntersectionHilbert(
    const std::vector<std::int64_t>& degrees) {
  std::vector<std::int64_t> coeffs{1};
  for (auto d : degrees) {
    if (d < 1) throw InvalidArgument("complete intersection degrees must be >= 1");
    std::vector<std::int64_t> next(coeffs.size() + d - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::int64_t j = 0; j < d; ++j) next[i + j] += coeffs[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace fsing
