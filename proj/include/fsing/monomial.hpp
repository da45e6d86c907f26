#ifndef FSING_MONOMIAL_HPP
#define FSING_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "fsing/errors.hpp"

namespace fsing {

// Exponent vector in x0..xn, all entries >= 0. Exponents are guarded
// against wrap at 2^31 since Frobenius powers scale them by p^e.
struct Monomial {
  std::vector<std::int32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return exps != o.exps; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::int64_t e = std::int64_t(r.exps[i]) + o.exps[i];
      if (e >= (std::int64_t(1) << 31))
        throw ResourceLimitError("monomial exponent exceeds 2^31");
      r.exps[i] = static_cast<std::int32_t>(e);
    }
    return r;
  }

  // x^(p^e * this), used by the Frobenius endomorphism.
  Monomial scaled(std::int64_t factor) const {
    Monomial r(*this);
    for (auto& e : r.exps) {
      std::int64_t v = std::int64_t(e) * factor;
      if (v >= (std::int64_t(1) << 31))
        throw ResourceLimitError("monomial exponent exceeds 2^31");
      e = static_cast<std::int32_t>(v);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }
};

// Graded lexicographic order with x0 > x1 > ... > xn.
// Returns <0, 0, >0 like strcmp; positive means a > b.
inline int grlexCompare(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

// Comparator placing graded-lex greatest first (leading term first).
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlexCompare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exps) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace fsing

#endif
