#include "fsing/poly.hpp"

#include <cctype>
#include <sstream>

namespace fsing {

Poly Poly::variable(PrimeField field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidArgument("variable index out of range");
  Monomial m(nvars);
  m.exps[i] = 1;
  return Poly::monomial(field, m);
}

void Poly::addTerm(const Monomial& m, Coeff c) {
  c %= field_.p();
  if (c == 0) return;
  if (m.nvars() != nvars_) throw InvalidArgument("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  Coeff s = field_.add(it->second, c);
  if (s == 0)
    terms_.erase(it);
  else
    it->second = s;
}

bool Poly::isHomogeneous() const {
  if (terms_.empty()) return true;
  // Graded order: first and last terms bracket all degrees.
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

const Monomial& Poly::leadingMonomial() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no terms");
  return terms_.begin()->first;
}

Coeff Poly::leadingCoeff() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no terms");
  return terms_.begin()->second;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_ || field_ != o.field_)
    throw InvalidArgument("ring mismatch in polynomial addition");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_ || field_ != o.field_)
    throw InvalidArgument("ring mismatch in polynomial subtraction");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.addTerm(m, field_.neg(c));
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Coeff s = field_.inv(leadingCoeff());
  if (s == 1) return *this;
  Poly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.mul(c, s));
  return r;
}

Poly Poly::timesTerm(const Monomial& m, Coeff c) const {
  Poly r(field_, nvars_);
  c %= field_.p();
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_)
    r.terms_.emplace(mm * m, field_.mul(cc, c));
  return r;
}

Poly Poly::frobenius(int e) const {
  if (e < 0) throw InvalidArgument("negative Frobenius level");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= field_.p();
    if (q >= (std::int64_t(1) << 31))
      throw ResourceLimitError("p^e exceeds exponent range");
  }
  Poly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.scaled(q), c);
  return r;
}

bool Poly::inFrobeniusPowerOfMax(int e) const {
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= field_.p();
  for (const auto& [m, c] : terms_) {
    bool hit = false;
    for (auto x : m.exps)
      if (x >= q) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

Poly mul(const Poly& a, const Poly& b, const Limits& limits) {
  if (a.nvars_ != b.nvars_ || a.field_ != b.field_)
    throw InvalidArgument("ring mismatch in polynomial multiplication");
  std::int64_t work = std::int64_t(a.termCount()) * b.termCount();
  if (work > limits.maxProducts)
    throw ResourceLimitError("product term-pair count exceeds limit");
  Poly r(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.addTerm(ma * mb, a.field_.mul(ca, cb));
      if (std::int64_t(r.terms_.size()) > limits.maxTerms)
        throw ResourceLimitError("product term count exceeds limit");
    }
  }
  return r;
}

Poly pow(const Poly& f, std::int64_t k, const Limits& limits) {
  if (k < 0) throw InvalidArgument("negative exponent");
  if (k == 0) return Poly::constant(f.field(), f.nvars(), 1);
  if (k == 1) return f;
  std::uint32_t p = f.field().p();
  if (k % p == 0) return pow(f, k / p, limits).frobenius(1);
  return mul(f, pow(f, k - 1, limits), limits);
}

std::string Poly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool hasVar = m.degree() > 0;
    if (c != 1 || !hasVar) out << c;
    bool needStar = c != 1 || !hasVar;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (needStar) out << "*";
      needStar = true;
      out << "x" << i;
      if (m.exps[i] > 1) out << "^" << m.exps[i];
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t nvars, PrimeField field)
      : s_(text), nvars_(nvars), field_(field), poly_(field, nvars) {}

  Poly run() {
    skipWs();
    // Optional leading sign.
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sign = -1;
      skipWs();
    }
    parseTerm(sign);
    skipWs();
    while (pos_ < s_.size()) {
      char op = get();
      if (op != '+' && op != '-')
        throw ParseError("expected '+' or '-'", pos_ - 1);
      skipWs();
      parseTerm(op == '-' ? -1 : 1);
      skipWs();
    }
    return poly_;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::int64_t parseNatural() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v >= (std::int64_t(1) << 31))
        throw ParseError("number too large", pos_);
    }
    return v;
  }

  // factor ::= xK [^E]
  void parseFactor(Monomial& m) {
    if (peek() != 'x') throw ParseError("expected a variable 'xK'", pos_);
    ++pos_;
    std::size_t at = pos_;
    std::int64_t idx = parseNatural();
    if (idx >= std::int64_t(nvars_))
      throw ParseError("variable index out of range", at);
    std::int64_t e = 1;
    skipWs();
    if (peek() == '^') {
      ++pos_;
      skipWs();
      e = parseNatural();
    }
    std::int64_t total = std::int64_t(m.exps[idx]) + e;
    if (total >= (std::int64_t(1) << 31))
      throw ParseError("exponent too large", at);
    m.exps[idx] = static_cast<std::int32_t>(total);
  }

  void parseTerm(int sign) {
    Coeff c = 1;
    Monomial m(nvars_);
    bool sawFactor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = field_.reduce(parseNatural());
      skipWs();
      if (peek() == '*') {
        ++pos_;
        skipWs();
        parseFactor(m);
        sawFactor = true;
      }
    } else {
      parseFactor(m);
      sawFactor = true;
    }
    if (sawFactor) {
      skipWs();
      while (peek() == '*') {
        ++pos_;
        skipWs();
        parseFactor(m);
        skipWs();
      }
    }
    poly_.addTerm(m, sign < 0 ? field_.neg(c) : c);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  PrimeField field_;
  Poly poly_;
};

}  // namespace

Poly parsePoly(const std::string& text, std::size_t nvars, PrimeField field) {
  if (nvars == 0) throw InvalidArgument("ring needs at least one variable");
  return Parser(text, nvars, field).run();
}

}  // namespace fsing
