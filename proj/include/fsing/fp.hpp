#ifndef FSING_FP_HPP
#define FSING_FP_HPP

#include <cstdint>

#include "fsing/errors.hpp"

namespace fsing {

using Coeff = std::uint32_t;

// The prime field F_p. Scalars are canonical representatives in [0, p-1].
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2) throw InvalidArgument("modulus must be at least 2");
    if (p >= (1u << 20))
      throw InvalidArgument("modulus too large (limit 2^20)");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t p() const { return p_; }

  Coeff reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t k) const {
    Coeff r = 1 % p_, base = a % p_;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }
  Coeff inv(Coeff a) const {
    if (a % p_ == 0) throw InvalidArgument("division by zero in F_p");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace fsing

#endif
