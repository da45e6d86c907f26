#include "fsing/frobenius.hpp"

namespace fsing {

Poly FrobeniusDecomposition::reconstruct() const {
  Poly sum(field, nvars);
  for (const auto& [r, root] : residues) {
    Poly part = root.frobenius(e);
    for (const auto& [m, c] : part.terms()) sum.addTerm(m * r, c);
  }
  return sum;
}

FrobeniusDecomposition frobeniusRoots(const Poly& g, int e) {
  if (e < 1) throw InvalidArgument("decomposition level must be >= 1");
  const auto& field = g.field();
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= field.p();
    if (q >= (std::int64_t(1) << 31))
      throw ResourceLimitError("p^e exceeds exponent range");
  }
  FrobeniusDecomposition dec{e, field, g.nvars(), {}};
  for (const auto& [m, c] : g.terms()) {
    Monomial residue(g.nvars()), quotient(g.nvars());
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      residue.exps[i] = static_cast<std::int32_t>(m.exps[i] % q);
      quotient.exps[i] = static_cast<std::int32_t>(m.exps[i] / q);
    }
    auto it = dec.residues.find(residue);
    if (it == dec.residues.end())
      it = dec.residues.emplace(residue, Poly(field, g.nvars())).first;
    // c^{1/p^e} = c over the prime field.
    it->second.addTerm(quotient, c);
  }
  for (auto it = dec.residues.begin(); it != dec.residues.end();)
    it = it->second.isZero() ? dec.residues.erase(it) : std::next(it);
  return dec;
}

Ideal testIdeal(const Poly& f, int e, const Limits& limits) {
  if (f.isZero() || !f.isHomogeneous())
    throw InvalidArgument("test ideal needs a nonzero homogeneous polynomial");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= f.field().p();
  Poly power = pow(f, q - 1, limits);
  FrobeniusDecomposition dec = frobeniusRoots(power, e);
  std::vector<Poly> gens;
  gens.reserve(dec.residues.size());
  for (const auto& [r, root] : dec.residues) gens.push_back(root);
  return Ideal(f.field(), f.nvars(), std::move(gens));
}

bool satisfiesTestIdealDefinition(const Poly& f, int e, const Ideal& a,
                                  const Limits& limits) {
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= f.field().p();
  return contains(frobeniusPower(a, e), pow(f, q - 1, limits), limits);
}

bool fedderNotFPure(const Poly& f, const Limits& limits) {
  if (f.isZero() || !f.isHomogeneous())
    throw InvalidArgument("Fedder test needs a nonzero homogeneous polynomial");
  Poly power = pow(f, f.field().p() - 1, limits);
  Ideal bracket = frobeniusPower(maximalIdeal(f.field(), f.nvars()), 1);
  return contains(bracket, power, limits);
}

SigmaEstimate nonFPureIdeal(const Poly& f, int eMax, const Limits& limits) {
  if (eMax < 2) throw InvalidArgument("sigma estimate needs eMax >= 2");
  std::optional<Ideal> prev;
  int eReached = 0;
  for (int e = 1; e <= eMax; ++e) {
    std::optional<Ideal> tau;
    try {
      tau = testIdeal(f, e, limits);
    } catch (const ResourceLimitError&) {
      if (!prev) throw;
      break;  // report the levels that did fit
    }
    if (prev && idealEquals(*prev, *tau, limits))
      return SigmaEstimate{*tau, SigmaStatus::Stabilized, e};
    prev = std::move(tau);
    eReached = e;
  }
  return SigmaEstimate{*prev, SigmaStatus::Unstable, eReached};
}

}  // namespace fsing
