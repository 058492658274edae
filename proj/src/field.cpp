#include "diagcover/field.hpp"

#include <string>

#include "diagcover/errors.hpp"
#include "diagcover/group.hpp"

namespace diagcover {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficients, constant first

void trim(Poly &p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

// Remainder of a modulo monic b over GF(r).
Poly poly_mod(Poly a, Poly const &b, std::uint32_t r)
{
  trim(a);
  while (a.size() >= b.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + (r - lead) * b[i]) % r;
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t code, std::uint32_t r, std::uint32_t len)
{
  Poly p(len);
  for (auto &c : p) {
    c = code % r;
    code /= r;
  }
  return p;
}

bool irreducible(Poly const &monic, std::uint32_t r)
{
  std::uint32_t const f = static_cast<std::uint32_t>(monic.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= f; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i)
      count *= r;
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly divisor = decode(code, r, d);
      divisor.push_back(1);
      if (poly_mod(monic, divisor, r).empty())
        return false;
    }
  }
  return true;
}

} // namespace

PrimePower factor_prime_power(std::uint64_t q)
{
  if (q < 2)
    return {};
  std::uint64_t r = 2;
  while (q % r != 0)
    ++r;
  std::uint32_t f = 0;
  while (q % r == 0) {
    q /= r;
    ++f;
  }
  if (q != 1)
    return {};
  return {static_cast<std::uint32_t>(r), f};
}

FiniteField::FiniteField(std::uint32_t characteristic, std::uint32_t degree)
: r_(characteristic), f_(degree), q_(1)
{
  if (!is_prime(r_) || f_ < 1)
    throw ValidationError("field characteristic must be prime and degree positive");
  for (std::uint32_t i = 0; i < f_; ++i)
    q_ *= r_;
  if (q_ > 4096)
    throw CapExceeded("field order " + std::to_string(q_) + " exceeds 4096");

  if (f_ == 1) {
    modulus_ = {0};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly candidate = decode(code, r_, f_);
      candidate.push_back(1);
      if (irreducible(candidate, r_)) {
        modulus_ = decode(code, r_, f_);
        break;
      }
    }
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  Poly modpoly = modulus_;
  modpoly.push_back(1);
  auto encode = [&](Poly const &p) {
    std::uint32_t code = 0;
    for (std::size_t i = p.size(); i-- > 0;)
      code = code * r_ + p[i];
    return code;
  };
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = decode(a, r_, f_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = decode(b, r_, f_);
      Poly sum(f_);
      for (std::uint32_t i = 0; i < f_; ++i)
        sum[i] = (pa[i] + pb[i]) % r_;
      add_[a * q_ + b] = encode(sum);
      Poly prod(2 * f_, 0);
      for (std::uint32_t i = 0; i < f_; ++i)
        for (std::uint32_t j = 0; j < f_; ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % r_;
      mul_[a * q_ + b] = encode(f_ == 1 ? Poly{prod[0]} : poly_mod(prod, modpoly, r_));
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a)
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add(a, b) == 0)
        neg_[a] = b;
      if (mul(a, b) == 1)
        inv_[a] = b;
    }
  for (std::uint32_t g = 2; g < q_; ++g) {
    std::uint32_t order = 1;
    for (std::uint32_t x = g; x != 1; x = mul(x, g))
      ++order;
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  if (q_ == 2)
    primitive_ = 1;
}

std::uint32_t FiniteField::frobenius(std::uint32_t a) const
{
  std::uint32_t result = 1;
  for (std::uint32_t i = 0; i < r_; ++i)
    result = mul(result, a);
  return result;
}

} // namespace diagcover
