#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

// GF(p^k) with the lexicographically smallest monic irreducible modulus
// (coefficients compared constant term first) and the smallest generator of
// the multiplicative group; both choices make every run reproducible.
//
// Elements are encoded as u64 values: sum of c_i * p^i over the coefficient
// tuple (c_0,...,c_{k-1}) of the residue polynomial.
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> make(u64 p, u32 k);

  u64 p() const { return p_; }
  u32 k() const { return k_; }
  u64 q() const { return q_; }
  const std::vector<u64>& modulus() const { return modulus_; }  // degree k, monic, low-to-high
  u64 generator() const { return generator_; }

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  u64 frobenius(u64 a) const { return pow(a, p_); }

  u64 from_coeffs(const std::vector<u64>& c) const;
  std::vector<u64> coeffs(u64 a) const;
  std::string to_string(u64 a) const;   // "3" or "1+2*t" style
  u64 parse(const std::string& text) const;

  bool same_as(const FieldSpec& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

 private:
  u64 p_ = 0;
  u32 k_ = 0;
  u64 q_ = 0;
  std::vector<u64> modulus_;
  u64 generator_ = 0;
  std::vector<u32> log_;   // log_[a] for a != 0
  std::vector<u64> exp_;   // exp_[e] = generator^e, e in [0, q-1)

  u64 mul_slow(u64 a, u64 b) const;
};

using Field = std::shared_ptr<const FieldSpec>;

bool is_prime_u64(u64 n);

}  // namespace cgt
