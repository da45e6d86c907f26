#include "fsing/graded.hpp"

#include <algorithm>
#include <unordered_map>

namespace fsing {

namespace {

using MonomialIndex = std::unordered_map<Monomial, Eigen::Index, MonomialHash>;

MonomialIndex indexOf(const std::vector<Monomial>& basis) {
  MonomialIndex idx;
  idx.reserve(basis.size() * 2);
  for (std::size_t i = 0; i < basis.size(); ++i)
    idx.emplace(basis[i], static_cast<Eigen::Index>(i));
  return idx;
}

// Total order on homogeneous polynomials: degree, then term sequences.
bool genLess(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    int c = grlexCompare(ia->first, ib->first);
    if (c != 0) return c > 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.termCount() < b.termCount();
}

std::int64_t powInt(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r >= (std::int64_t(1) << 31))
      throw ResourceLimitError("p^e exceeds exponent range");
  }
  return r;
}

void enumerate(std::size_t nvars, std::int64_t t, std::int64_t cap,
               std::size_t at, Monomial& current,
               std::vector<Monomial>& out) {
  if (at + 1 == nvars) {
    if (t <= cap) {
      current.exps[at] = static_cast<std::int32_t>(t);
      out.push_back(current);
      current.exps[at] = 0;
    }
    return;
  }
  // Later variables can absorb at most cap each.
  const std::int64_t rest = cap * static_cast<std::int64_t>(nvars - at - 1);
  for (std::int64_t e = std::min(t, cap); e >= 0 && t - e <= rest; --e) {
    current.exps[at] = static_cast<std::int32_t>(e);
    enumerate(nvars, t - e, cap, at + 1, current, out);
  }
  current.exps[at] = 0;
}

}  // namespace

Poly SubspaceBasis::rowPoly(PrimeField field, Eigen::Index i) const {
  Poly r(field, ambient.empty() ? 1 : ambient.front().nvars());
  for (Eigen::Index j = 0; j < rows.cols(); ++j)
    if (rows(i, j)) r.addTerm(ambient[j], static_cast<Coeff>(rows(i, j)));
  return r;
}

Ideal::Ideal(PrimeField field, std::size_t nvars, std::vector<Poly> generators)
    : field_(field), nvars_(nvars), cache_(std::make_shared<DegreePieceCache>()) {
  for (auto& g : generators) {
    if (g.nvars() != nvars || g.field() != field)
      throw InvalidArgument("generator ring mismatch");
    if (g.isZero()) continue;
    if (!g.isHomogeneous())
      throw InvalidArgument("ideal generators must be homogeneous");
    gens_.push_back(g.monic());
  }
  if (gens_.empty())
    throw InvalidArgument("ideal needs at least one nonzero generator");
  std::sort(gens_.begin(), gens_.end(), genLess);
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Ideal maximalIdeal(PrimeField field, std::size_t nvars) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < nvars; ++i)
    gens.push_back(Poly::variable(field, nvars, i));
  return Ideal(field, nvars, std::move(gens));
}

Ideal maxPowerIdeal(PrimeField field, std::size_t nvars, std::int64_t k,
                    const Limits& limits) {
  if (k < 0) throw InvalidArgument("negative power of the maximal ideal");
  if (k == 0)
    return Ideal(field, nvars, {Poly::constant(field, nvars, 1)});
  std::vector<Poly> gens;
  for (auto& m : monomialsOfDegree(nvars, k, {}, limits))
    gens.push_back(Poly::monomial(field, m));
  return Ideal(field, nvars, std::move(gens));
}

Ideal frobeniusPower(const Ideal& ideal, int e) {
  if (e < 0) throw InvalidArgument("negative Frobenius power");
  if (e == 0) return ideal;
  std::vector<Poly> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(g.frobenius(e));
  return Ideal(ideal.field(), ideal.nvars(), std::move(gens));
}

std::int64_t countMonomials(std::size_t nvars, std::int64_t t,
                            std::optional<std::int64_t> cap,
                            const Limits& limits) {
  if (t < 0) return 0;
  const std::int64_t clamp = limits.maxDim + 1;
  // C(tt + nvars - 1, nvars - 1), saturating at the guard.
  auto binom = [&](std::int64_t tt) -> std::int64_t {
    __int128 num = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
      num = num * (tt + static_cast<std::int64_t>(i)) /
            static_cast<std::int64_t>(i);
      if (num > clamp) return clamp;
    }
    return static_cast<std::int64_t>(num);
  };
  if (!cap) return binom(t);
  if (*cap < 0) return 0;
  const std::int64_t total = *cap * static_cast<std::int64_t>(nvars);
  if (t > total) return 0;
  if (nvars == 1) return 1;
  // Box pieces are symmetric about total/2 and unimodal.
  if (t > total - t) t = total - t;
  if (t <= *cap) return binom(t);  // the cap cannot bind
  if (binom(*cap) >= clamp) return clamp;
  std::vector<std::int64_t> dp(t + 1, 0);
  dp[0] = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<std::int64_t> next(t + 1, 0);
    for (std::int64_t s = 0; s <= t; ++s) {
      if (!dp[s]) continue;
      for (std::int64_t e = 0; e <= *cap && s + e <= t; ++e)
        next[s + e] = std::min<std::int64_t>(clamp, next[s + e] + dp[s]);
    }
    dp = std::move(next);
  }
  return dp[t];
}

std::vector<Monomial> monomialsOfDegree(std::size_t nvars, std::int64_t t,
                                        std::optional<std::int64_t> cap,
                                        const Limits& limits) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  std::int64_t n = countMonomials(nvars, t, cap, limits);
  if (n > limits.maxDim)
    throw ResourceLimitError("monomial basis of dimension " +
                             std::to_string(n) + " exceeds limit");
  out.reserve(n);
  Monomial current(nvars);
  enumerate(nvars, t, cap ? *cap : t, 0, current, out);
  return out;
}

namespace {

SubspaceBasis computePiece(const Ideal& ideal, std::int64_t t,
                           const Limits& limits) {
  SubspaceBasis piece;
  piece.degree = t;
  if (t < 0) return piece;
  piece.ambient = monomialsOfDegree(ideal.nvars(), t, {}, limits);
  const Eigen::Index cols = static_cast<Eigen::Index>(piece.ambient.size());
  std::int64_t rows = 0;
  for (const auto& g : ideal.gens())
    if (g.degree() <= t)
      rows += countMonomials(ideal.nvars(), t - g.degree(), {}, limits);
  if (rows * cols > limits.maxMatrixEntries)
    throw ResourceLimitError("degree-piece matrix exceeds entry limit");
  MonomialIndex idx = indexOf(piece.ambient);
  la::MatF m = la::MatF::Zero(rows, cols);
  const std::uint32_t p = ideal.field().p();
  Eigen::Index r = 0;
  for (const auto& g : ideal.gens()) {
    if (g.degree() > t) continue;
    for (const auto& shift :
         monomialsOfDegree(ideal.nvars(), t - g.degree(), {}, limits)) {
      for (const auto& [mono, c] : g.terms()) {
        Eigen::Index j = idx.at(mono * shift);
        m(r, j) = (m(r, j) + c) % p;
      }
      ++r;
    }
  }
  piece.pivots = la::rowReduce(m, p);
  piece.rows = m.topRows(static_cast<Eigen::Index>(piece.pivots.size()));
  return piece;
}

}  // namespace

SubspaceBasis degreePiece(const Ideal& ideal, std::int64_t t,
                          const Limits& limits) {
  auto& cache = ideal.cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.pieces.find(t);
  if (it != cache.pieces.end()) return it->second;
  SubspaceBasis piece = computePiece(ideal, t, limits);
  cache.pieces.emplace(t, piece);
  return piece;
}

bool contains(const Ideal& ideal, const Poly& h, const Limits& limits) {
  if (h.isZero()) return true;
  if (h.nvars() != ideal.nvars() || h.field() != ideal.field())
    throw InvalidArgument("ring mismatch in ideal membership");
  if (!h.isHomogeneous())
    throw InvalidArgument("membership requires a homogeneous polynomial");
  SubspaceBasis piece = degreePiece(ideal, h.degree(), limits);
  if (piece.dim() == 0) return false;
  MonomialIndex idx = indexOf(piece.ambient);
  la::RowVecF v = la::RowVecF::Zero(piece.ambient.size());
  for (const auto& [m, c] : h.terms()) v(idx.at(m)) = c;
  return la::reduceAgainst(piece.rows, piece.pivots, v, ideal.field().p());
}

bool idealEquals(const Ideal& a, const Ideal& b, const Limits& limits) {
  for (const auto& g : a.gens())
    if (!contains(b, g, limits)) return false;
  for (const auto& g : b.gens())
    if (!contains(a, g, limits)) return false;
  return true;
}

std::int64_t quotientDim(const Ideal& ideal, std::int64_t t,
                         const Limits& limits) {
  if (t < 0) return 0;
  std::int64_t full = countMonomials(ideal.nvars(), t, {}, limits);
  if (full > limits.maxDim)
    throw ResourceLimitError("ambient dimension exceeds limit");
  return full - degreePiece(ideal, t, limits).dim();
}

SubspaceBasis colonSpace(int e, const Ideal& colonAgainst, std::int64_t t,
                         const Limits& limits) {
  if (e < 0) throw InvalidArgument("negative Frobenius level");
  const auto& field = colonAgainst.field();
  const std::uint32_t p = field.p();
  const std::size_t nvars = colonAgainst.nvars();
  const std::int64_t q = powInt(p, e);
  const std::int64_t socle = static_cast<std::int64_t>(nvars) * (q - 1);

  SubspaceBasis space;
  space.degree = t;
  if (t < 0 || t > socle) return space;
  space.ambient = monomialsOfDegree(nvars, t, q - 1, limits);
  const Eigen::Index cols = static_cast<Eigen::Index>(space.ambient.size());
  if (cols == 0) return space;

  // Kernel intersection one generator at a time: cheaper than one stacked
  // elimination because the space collapses quickly.
  bool unconstrained = true;
  la::MatF basis;  // rows = current kernel basis on the box monomials
  for (const auto& g : colonAgainst.gens()) {
    const std::int64_t th = t + g.degree();
    if (th > socle) continue;  // products all land in m^[e]
    auto target = monomialsOfDegree(nvars, th, q - 1, limits);
    if (target.empty()) continue;
    const Eigen::Index trows = static_cast<Eigen::Index>(target.size());
    if (trows * cols > limits.maxMatrixEntries)
      throw ResourceLimitError("colon constraint matrix exceeds entry limit");
    MonomialIndex idx = indexOf(target);
    la::MatF m = la::MatF::Zero(trows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (const auto& [mono, c] : g.terms()) {
        Monomial prod = mono * space.ambient[j];
        bool reduced = false;
        for (auto x : prod.exps)
          if (x >= q) {
            reduced = true;
            break;
          }
        if (reduced) continue;
        Eigen::Index i = idx.at(prod);
        m(i, j) = (m(i, j) + c) % p;
      }
    }
    if (unconstrained) {
      basis = la::nullspaceRows(m, p);
      unconstrained = false;
    } else {
      la::MatF restricted = la::mulMod(m, la::MatF(basis.transpose()), p);
      la::MatF inner = la::nullspaceRows(restricted, p);
      basis = la::mulMod(inner, basis, p);
    }
    if (basis.rows() == 0) return space;
  }
  if (unconstrained) basis = la::MatF::Identity(cols, cols);
  space.pivots = la::rowReduce(basis, p);
  space.rows = basis.topRows(static_cast<Eigen::Index>(space.pivots.size()));
  return space;
}

std::int64_t colonSpaceDim(int e, const Ideal& colonAgainst, std::int64_t t,
                           const Limits& limits) {
  return colonSpace(e, colonAgainst, t, limits).dim();
}

}  // namespace fsing
