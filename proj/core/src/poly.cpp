#include "insdel/poly.hpp"

#include <algorithm>
#include <set>

#include "insdel/error.hpp"

namespace insdel {

Poly::Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(FieldElement c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return Poly(std::move(out));
}

Poly poly_scale(const Field& f, const Poly& a, FieldElement c) {
  std::vector<FieldElement> out(a.coeffs());
  for (auto& x : out) x = f.mul(x, c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<FieldElement> rem(a.coeffs());
  const std::size_t db = b.size() - 1;
  std::vector<FieldElement> quot(rem.size() - db, 0);
  const FieldElement lead_inv = f.inv(b.coeffs().back());
  for (std::size_t i = quot.size(); i-- > 0;) {
    FieldElement factor = f.mul(rem[i + db], lead_inv);
    quot[i] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i + j] = f.sub(rem[i + j], f.mul(factor, b.coeff(j)));
    }
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

FieldElement poly_eval(const Field& f, const Poly& p, FieldElement x) {
  FieldElement acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeff(i));
  return acc;
}

std::optional<Poly> poly_interpolate(const Field& f,
                                     const std::vector<std::pair<FieldElement, FieldElement>>& points,
                                     std::size_t d) {
  std::set<FieldElement> xs;
  for (const auto& [x, y] : points) {
    f.check(x);
    f.check(y);
    if (!xs.insert(x).second) throw InvalidInput("duplicate interpolation point x=" + std::to_string(x));
  }
  if (points.size() < d) throw InvalidInput("interpolation needs at least d points");
  if (d == 0) {
    for (const auto& pt : points) {
      if (pt.second != 0) return std::nullopt;
    }
    return Poly{};
  }
  // Lagrange through the first d points, then check the rest.
  Poly result;
  for (std::size_t i = 0; i < d; ++i) {
    Poly basis = Poly::constant(1);
    FieldElement denom = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      basis = poly_mul(f, basis, Poly({f.neg(points[j].first), 1}));
      denom = f.mul(denom, f.sub(points[i].first, points[j].first));
    }
    result = poly_add(f, result, poly_scale(f, basis, f.div(points[i].second, denom)));
  }
  for (std::size_t i = d; i < points.size(); ++i) {
    if (poly_eval(f, result, points[i].first) != points[i].second) return std::nullopt;
  }
  return result;
}

Poly poly_from_index(const Field& f, std::uint64_t index, std::size_t d) {
  std::vector<FieldElement> coeffs(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    coeffs[i] = static_cast<FieldElement>(index % f.order());
    index /= f.order();
  }
  if (index != 0) throw InvalidInput("polynomial index out of range");
  return Poly(std::move(coeffs));
}

}  // namespace insdel
