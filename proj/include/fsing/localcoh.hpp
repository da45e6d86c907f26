#ifndef FSING_LOCALCOH_HPP
#define FSING_LOCALCOH_HPP

#include <map>

#include "fsing/fpurity.hpp"

namespace fsing {

// Basis element of top local cohomology of the polynomial ring: an
// exponent vector with every entry <= -1. Realized via the standard
// inverse-monomial model where multiplication drops any term that reaches
// a nonnegative exponent.
struct InverseMonomial {
  std::vector<std::int32_t> exps;

  InverseMonomial() = default;
  explicit InverseMonomial(std::vector<std::int32_t> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }
  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  // The nonnegative vector b with exps = -1 - b, used for ordering.
  Monomial dual() const {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
      m.exps[i] = -1 - exps[i];
    return m;
  }
  bool operator==(const InverseMonomial& o) const { return exps == o.exps; }
};

struct InverseGrlexDesc {
  bool operator()(const InverseMonomial& a, const InverseMonomial& b) const {
    return grlexCompare(a.dual(), b.dual()) > 0;
  }
};

struct InverseMonomialHash {
  std::size_t operator()(const InverseMonomial& m) const {
    std::size_t h = 14695981039346656037ull;
    for (auto e : m.exps) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Homogeneous element of H^{n+1}_m(R).
class LocalCohElement {
 public:
  LocalCohElement(PrimeField field, std::size_t nvars)
      : field_(field), nvars_(nvars) {}

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<InverseMonomial, Coeff, InverseGrlexDesc>& terms() const {
    return terms_;
  }
  std::int64_t degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }
  void addTerm(const InverseMonomial& m, Coeff c);

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::map<InverseMonomial, Coeff, InverseGrlexDesc> terms_;
};

// Matrix of a degree-homogeneous map between graded pieces of
// H^{n+1}_m(R), columns indexed by the source basis.
struct GradedMapMatrix {
  std::int64_t sourceDegree = 0;
  std::int64_t targetDegree = 0;
  std::vector<InverseMonomial> sourceBasis;
  std::vector<InverseMonomial> targetBasis;
  la::MatF matrix;
};

// All inverse monomials of degree t (empty unless t <= -(n+1));
// count C(-t-1, n).
std::vector<InverseMonomial> inverseBasis(std::size_t nvars, std::int64_t t,
                                          const Limits& limits = Limits());

// Exponent-wise product, dropping terms that reach a nonnegative exponent.
LocalCohElement multiply(const LocalCohElement& alpha, const Poly& h);

// The Frobenius action: exponents scale by p, coefficients are fixed.
LocalCohElement frobeniusAction(const LocalCohElement& alpha);

// Matrix of multiplication by f from degree s to degree s + deg f.
GradedMapMatrix multiplicationMatrix(const Poly& f, std::int64_t s,
                                     const Limits& limits = Limits());

// Matrix of alpha -> f^{p-1} * F(alpha), from degree s to p*s + d(p-1).
GradedMapMatrix frobeniusTwistedMatrix(const Poly& f, std::int64_t s,
                                       const Limits& limits = Limits());

// dim H^n_m(R/fR)_t, the nullity of multiplication by f into degree t.
std::int64_t hnDim(const Poly& f, std::int64_t t,
                   const Limits& limits = Limits());

// dim ker(F : H^n_m(R/fR)_t -> H^n_m(R/fR)_{pt}) as the nullity of the
// twisted Frobenius matrix; valid because the plain Frobenius action on
// H^{n+1}_m(R) is injective.
std::int64_t frobeniusKernelDimDirect(const Poly& f, std::int64_t t,
                                      const Limits& limits = Limits());

// The same kernel dimension through the colon-space route: classes in
// degree s = t - d are written over the denominator (x0...xn)^{p^e} for
// the least e with p^e >= -s - n, and the kernel is the colon space of
// tau(f^{1-1/p}) in degree s + (n+1)p^e. Computed again at e+1 as a
// consistency check.
std::int64_t frobeniusKernelDimColon(const Poly& f, std::int64_t t,
                                     const Limits& limits = Limits());

struct NonInjectivityWitness {
  LocalCohElement alpha;
  std::int64_t t = 0;  // degree of H^n_m(R/fR) where injectivity fails
  Poly numerator;
  int e = 1;  // denominator is (x0...xn)^{p^e}
};

// Builds alpha = [r / (x0...xn)^{p^e}] from the M_e witness r; verifies
// alpha != 0 and f^{p-1} F(alpha) = 0 before returning.
NonInjectivityWitness witnessNonInjectivity(const Poly& f, int e,
                                            const Limits& limits = Limits());

}  // namespace fsing

#endif
