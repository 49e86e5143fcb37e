#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "insdel/gf.hpp"

namespace insdel {

/// Univariate polynomial over a Field, coefficients lowest degree first.
/// Canonical form has no trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);

  static Poly constant(FieldElement c) { return Poly(std::vector<FieldElement>{c}); }
  static Poly monomial(FieldElement c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  FieldElement coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) { return a.coeffs_ <=> b.coeffs_; }

 private:
  void normalize();
  std::vector<FieldElement> coeffs_;
};

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, FieldElement c);
/// Quotient and remainder; throws ArithmeticError on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);

FieldElement poly_eval(const Field& f, const Poly& p, FieldElement x);

/// The unique polynomial of degree < d through the given points, or nullopt
/// when no such polynomial exists. Requires distinct x and at least d points.
std::optional<Poly> poly_interpolate(const Field& f,
                                     const std::vector<std::pair<FieldElement, FieldElement>>& points,
                                     std::size_t d);

/// Polynomial with coefficients given by the base-|F| digits of `index`,
/// lowest first, padded to `d` coefficients. Enumerates all degree-<d polys.
Poly poly_from_index(const Field& f, std::uint64_t index, std::size_t d);

}  // namespace insdel
