#ifndef FSING_GRADED_HPP
#define FSING_GRADED_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fsing/la.hpp"
#include "fsing/limits.hpp"
#include "fsing/poly.hpp"

namespace fsing {

// Row-reduced basis of a subspace of the degree-t piece of the ring (or of
// the box quotient R/m^[e]): ambient monomials in graded-lex descending
// order, rows in reduced echelon form.
struct SubspaceBasis {
  std::int64_t degree = 0;
  std::vector<Monomial> ambient;
  la::MatF rows;
  std::vector<Eigen::Index> pivots;

  Eigen::Index dim() const { return rows.rows(); }

  // Row i as a polynomial on the ambient basis.
  Poly rowPoly(PrimeField field, Eigen::Index i) const;
};

struct DegreePieceCache {
  std::mutex mu;
  std::map<std::int64_t, SubspaceBasis> pieces;
};

// Homogeneous ideal given by generators. Construction canonicalizes: zero
// generators are dropped, the rest are made monic, deduplicated and sorted
// by (degree, graded-lex). Degree pieces are cached per ideal and shared
// across copies.
class Ideal {
 public:
  Ideal(PrimeField field, std::size_t nvars, std::vector<Poly> generators);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& gens() const { return gens_; }

  bool isUnit() const { return gens_.front().degree() == 0; }
  std::int64_t minGenDegree() const { return gens_.front().degree(); }

  DegreePieceCache& cache() const { return *cache_; }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Poly> gens_;
  std::shared_ptr<DegreePieceCache> cache_;
};

// (x0, ..., xn)
Ideal maximalIdeal(PrimeField field, std::size_t nvars);
// m^k, generated by all monomials of degree k (the unit ideal for k = 0).
Ideal maxPowerIdeal(PrimeField field, std::size_t nvars, std::int64_t k,
                    const Limits& limits = Limits());
// I^[e]: generators raised to the p^e-th power; e = 0 returns I unchanged.
Ideal frobeniusPower(const Ideal& ideal, int e);

// Number of monomials of degree t in nvars variables, with an optional
// per-variable exponent cap. Guarded against the configured dimension cap.
std::int64_t countMonomials(std::size_t nvars, std::int64_t t,
                            std::optional<std::int64_t> cap,
                            const Limits& limits = Limits());

// All monomials of degree t, graded-lex descending.
std::vector<Monomial> monomialsOfDegree(std::size_t nvars, std::int64_t t,
                                        std::optional<std::int64_t> cap = {},
                                        const Limits& limits = Limits());

// Row-reduced basis of I_t = span{ g * m : g generator, deg m = t - deg g }.
SubspaceBasis degreePiece(const Ideal& ideal, std::int64_t t,
                          const Limits& limits = Limits());

// h in I, decided degree-wise; h must be homogeneous (zero counts as member).
bool contains(const Ideal& ideal, const Poly& h,
              const Limits& limits = Limits());

bool idealEquals(const Ideal& a, const Ideal& b,
                 const Limits& limits = Limits());

// dim (R/I)_t
std::int64_t quotientDim(const Ideal& ideal, std::int64_t t,
                         const Limits& limits = Limits());

// Basis of { v in (R/m^[e])_t : v * h = 0 in R/m^[e] for all generators h
// of J }, on the box-monomial basis (all exponents <= p^e - 1). Nonzero
// vectors are exactly the degree-t classes of (m^[e] : J) \ m^[e].
SubspaceBasis colonSpace(int e, const Ideal& colonAgainst, std::int64_t t,
                         const Limits& limits = Limits());

std::int64_t colonSpaceDim(int e, const Ideal& colonAgainst, std::int64_t t,
                           const Limits& limits = Limits());

}  // namespace fsing

#endif
