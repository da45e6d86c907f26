#ifndef FSING_POLY_HPP
#define FSING_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsing/fp.hpp"
#include "fsing/limits.hpp"
#include "fsing/monomial.hpp"

namespace fsing {

// Sparse multivariate polynomial over F_p. Terms are kept in graded-lex
// descending order (leading term first) with no zero coefficients, so
// iteration order, printing and pivoting are canonical.
class Poly {
 public:
  using TermMap = std::map<Monomial, Coeff, GrlexDesc>;

  Poly(PrimeField field, std::size_t nvars)
      : field_(field), nvars_(nvars) {}

  static Poly zero(PrimeField field, std::size_t nvars) {
    return Poly(field, nvars);
  }
  static Poly constant(PrimeField field, std::size_t nvars, std::int64_t c) {
    Poly r(field, nvars);
    r.addTerm(Monomial(nvars), field.reduce(c));
    return r;
  }
  static Poly monomial(PrimeField field, Monomial m, Coeff c = 1) {
    Poly r(field, m.nvars());
    r.addTerm(std::move(m), c);
    return r;
  }
  static Poly variable(PrimeField field, std::size_t nvars, std::size_t i);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  // Adds c * m, dropping the term if the sum cancels.
  void addTerm(const Monomial& m, Coeff c);

  bool isHomogeneous() const;
  // Degree of the leading term; -1 for the zero polynomial.
  std::int64_t degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
  }
  const Monomial& leadingMonomial() const;
  Coeff leadingCoeff() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Scaled so the leading coefficient is 1.
  Poly monic() const;

  // Term-wise multiplication by a single term (no term-count growth).
  Poly timesTerm(const Monomial& m, Coeff c) const;

  // The image under the e-fold Frobenius endomorphism: every exponent is
  // multiplied by p^e; coefficients are fixed since c^p = c in F_p.
  Poly frobenius(int e) const;

  // True when every term lies in (x0^q, ..., xn^q), q = p^e. Membership in
  // this monomial ideal is decidable term by term.
  bool inFrobeniusPowerOfMax(int e) const;

  std::string toString() const;

 private:
  PrimeField field_;
  std::size_t nvars_;
  TermMap terms_;

  friend Poly mul(const Poly& a, const Poly& b, const Limits& limits);
};

Poly mul(const Poly& a, const Poly& b, const Limits& limits = Limits());
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

// Exact k-th power; repeated p-th powers are taken by exponent scaling.
Poly pow(const Poly& f, std::int64_t k, const Limits& limits = Limits());

// Parses the grammar  poly ::= term (+- term)*, term ::= [coeff *] factor
// (* factor)*, factor ::= xK [^E], with insignificant whitespace. A bare
// coefficient is accepted as a constant term so canonical output of unit
// generators round-trips.
Poly parsePoly(const std::string& text, std::size_t nvars, PrimeField field);

}  // namespace fsing

#endif
