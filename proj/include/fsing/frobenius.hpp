#ifndef FSING_FROBENIUS_HPP
#define FSING_FROBENIUS_HPP

#include <map>

#include "fsing/graded.hpp"

namespace fsing {

// Expansion of a polynomial over the p^e-th powers: g = sum over residues
// r (all entries in [0, p^e - 1]) of root(r)^{p^e} * x^r. Over F_p the
// coefficient roots are the coefficients themselves.
struct FrobeniusDecomposition {
  int e = 1;
  PrimeField field;
  std::size_t nvars = 0;
  std::map<Monomial, Poly, GrlexDesc> residues;

  Poly reconstruct() const;
};

// Splits each exponent vector a as p^e * q + r with r in the box and
// accumulates the quotient parts per residue.
FrobeniusDecomposition frobeniusRoots(const Poly& g, int e);

// tau(f^{1 - 1/p^e}): the ideal generated by the roots of f^{p^e - 1}.
// Generators come out monic, deduplicated and sorted; each has degree
// < deg f.
Ideal testIdeal(const Poly& f, int e, const Limits& limits = Limits());

// Checks f^{p^e - 1} in a^[e], the defining membership of the test ideal.
bool satisfiesTestIdealDefinition(const Poly& f, int e, const Ideal& a,
                                  const Limits& limits = Limits());

// True iff f^{p-1} lies in (x0^p, ..., xn^p), i.e. R/fR is NOT F-pure at
// the homogeneous maximal ideal.
bool fedderNotFPure(const Poly& f, const Limits& limits = Limits());

enum class SigmaStatus { Stabilized, Unstable };

struct SigmaEstimate {
  Ideal ideal;
  SigmaStatus status;
  int eReached;
};

// Estimates the stable test ideal by computing tau(f^{1-1/p^e}) for
// e = 1..eMax, stopping when two consecutive levels agree. Stabilization
// is reported, never assumed; a resource guard mid-way returns the last
// level computed.
SigmaEstimate nonFPureIdeal(const Poly& f, int eMax,
                            const Limits& limits = Limits());

}  // namespace fsing

#endif
