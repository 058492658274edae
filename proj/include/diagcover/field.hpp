#pragma once

#include <cstdint>
#include <vector>

namespace diagcover {

// GF(r^f) with elements encoded as integers whose base-r digits are the
// polynomial coefficients (constant term least significant). The modulus is
// the lexicographically least monic irreducible of degree f, i.e. the one
// whose lower coefficients encode to the smallest integer.
class FiniteField {
public:
  FiniteField(std::uint32_t characteristic, std::uint32_t degree);

  std::uint32_t characteristic() const noexcept { return r_; }
  std::uint32_t degree() const noexcept { return f_; }
  std::uint32_t size() const noexcept { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; } // a != 0
  std::uint32_t frobenius(std::uint32_t a) const; // a -> a^r

  // Least encoding generating the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return primitive_; }

  // Modulus coefficients c_0..c_{f-1} of x^f + sum c_i x^i.
  std::vector<std::uint32_t> const &modulus() const noexcept { return modulus_; }

private:
  std::uint32_t r_, f_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t primitive_ = 1;
};

// Splits q = r^f with r prime; returns {0, 0} when q is not a prime power.
struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
};
PrimePower factor_prime_power(std::uint64_t q);

} // namespace diagcover
