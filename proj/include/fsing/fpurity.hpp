#ifndef FSING_FPURITY_HPP
#define FSING_FPURITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsing/frobenius.hpp"

namespace fsing {

// "A natural number or infinity"; nullopt means infinite.
using OrInf = std::optional<std::int64_t>;

// Minimal degree of a homogeneous element of (m^[e] : tau) \ m^[e],
// together with the level-normalized value M_e - (n+1)p^e and a witness
// element realizing the minimum.
struct MeReport {
  int e = 0;
  OrInf Me;
  std::optional<std::int64_t> normalized;
  std::optional<Poly> witness;
};

enum class DeltaStatus { Certified, ProbableStable, UnboundedDetected,
                         Inconclusive };

struct DeltaReport {
  std::optional<std::int64_t> delta;
  DeltaStatus status = DeltaStatus::Inconclusive;
  int eUsed = 0;
  OrInf ellMin;
  // (e, M_e - (n+1)p^e) pairs; nonincreasing in the second coordinate.
  std::vector<std::pair<int, std::int64_t>> sequence;
  std::string note;
};

struct IsolatedVerdict {
  bool fPureAtM = false;
  bool isolated = false;
  OrInf ellMin;
};

// Least e >= 0 with some generator of tau(f^{1-1/p}) outside m^[e].
int e0Level(const Poly& f, const Limits& limits = Limits());
int e0LevelOf(const Ideal& tau);

// M_e for tau = tau(f^{1-1/p}); requires e >= e0Level(f). Scans for the
// least degree with a nonzero colon space (the nonzero degrees form an
// interval ending at the socle degree, so the scan can bisect).
MeReport computeMe(const Poly& f, int e, const Limits& limits = Limits());
MeReport computeMeAt(const Ideal& tau, int e, const Limits& limits = Limits());

// Least ell >= 0 with m^ell contained in tau, searched up to the bound
// (n+1)(d-1) - n that holds whenever the radical of tau is the maximal
// ideal; nullopt when no vanishing occurs by the bound.
OrInf ellMin(const Ideal& tau, int n, std::int64_t d,
             const Limits& limits = Limits());

IsolatedVerdict isolatedPoint(const Poly& f, const Limits& limits = Limits());

// The stable value of M_e - (n+1)p^e. Certified when the nonincreasing
// sequence attains the proven floor -n - ellMin (additionally requiring
// p^e > ellMin and an instance check of the colon closed form at the
// certifying level); ProbableStable when the last two values merely agree.
DeltaReport computeDelta(const Poly& f, int eMax,
                         const Limits& limits = Limits());

struct DeltaUndefinedError : Error {
  DeltaUndefinedError(const std::string& msg, DeltaStatus s)
      : Error(msg), status(s) {}
  DeltaStatus status;
};

// delta(f) + d: Frobenius acts injectively on every graded piece of
// H^n_m(R/fR) of degree strictly below this value. Throws
// DeltaUndefinedError unless computeDelta certifies or probable-stabilizes.
std::int64_t injectivityBound(const Poly& f, int eMax,
                              const Limits& limits = Limits());

// -n(d-1): injectivity of Frobenius in degrees <= this value is equivalent
// to the non-F-pure locus being isolated at the maximal ideal.
std::int64_t isolationThreshold(int n, std::int64_t d);

// Coefficients of prod_i (1 + t + ... + t^(d_i - 1)), the Hilbert series
// numerator of a complete intersection cut out in degrees d_i.
std::vector<std::int64_t> completeIntersectionHilbert(
    const std::vector<std::int64_t>& degrees);

// Closed form for the colon (m^[e] : m^c) as the ideal
// m^[e] + m^((n+1)p^e - n - c); requires the exponent to be nonnegative.
Ideal colonFormulaIdeal(PrimeField field, std::size_t nvars, int e,
                        std::int64_t c, const Limits& limits = Limits());

// Instance validation of the closed form against direct colon spaces at
// the two degrees that pin the whole degree-wise structure.
bool colonFormulaMatchesDirect(PrimeField field, std::size_t nvars, int e,
                               std::int64_t c,
                               const Limits& limits = Limits());

}  // namespace fsing

#endif
