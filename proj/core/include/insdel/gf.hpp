#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace insdel {

/// Field elements are integers in [0, q): the base-p digits of the integer
/// are the coefficients (lowest first) of the residue polynomial.
using FieldElement = std::uint32_t;

/// GF(p^e) with a verified irreducible modulus. Immutable after construction.
class Field {
 public:
  /// Uses the default modulus: the monic degree-e irreducible polynomial whose
  /// lower coefficients, read as base-p digits, form the smallest integer.
  Field(std::uint32_t p, unsigned e);

  /// `modulus` lists coefficients lowest first and must be monic of degree e.
  Field(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);

  static Field of_order(std::uint64_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  bool contains(FieldElement a) const noexcept { return a < q_; }
  void check(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t k) const;
  /// Image of an integer under Z -> GF(p).
  FieldElement from_integer(std::uint64_t n) const { return static_cast<FieldElement>(n % p_); }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  void init();
  FieldElement slow_mul(FieldElement a, FieldElement b) const;

  std::uint32_t p_;
  unsigned e_;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  // log/exp tables, present when q is small enough.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

/// Rabin's irreducibility test over GF(p). Coefficients lowest first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e);

}  // namespace insdel
