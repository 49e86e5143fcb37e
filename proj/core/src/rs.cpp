#include "insdel/rs.hpp"

#include "insdel/error.hpp"
#include "linalg.hpp"

namespace insdel {

RSCodeSpec RSCodeSpec::make(std::shared_ptr<const Field> field, std::size_t d, std::size_t n) {
  RSCodeSpec spec;
  if (!field) throw InvalidInput("RS code needs a field");
  spec.n = n == 0 ? static_cast<std::size_t>(field->order()) : n;
  spec.field = std::move(field);
  spec.d = d;
  spec.validate();
  return spec;
}

void RSCodeSpec::validate() const {
  if (!field) throw InvalidInput("RS code needs a field");
  if (n == 0 || n > field->order()) throw InvalidInput("RS block length must lie in [1, q]");
  if (d < 1 || d > n) throw InvalidInput("RS dimension must lie in [1, n]");
}

std::vector<FieldElement> rs_encode(const RSCodeSpec& spec, const Poly& message) {
  if (message.degree() >= static_cast<long>(spec.d)) {
    throw InvalidInput("message degree " + std::to_string(message.degree()) + " not below d=" +
                       std::to_string(spec.d));
  }
  for (auto c : message.coeffs()) spec.field->check(c);
  std::vector<FieldElement> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) out[i] = poly_eval(*spec.field, message, spec.point(i));
  return out;
}

std::optional<Poly> rs_decode_ee(const RSCodeSpec& spec, const ReceivedWord& received) {
  if (received.size() != spec.n) throw InvalidInput("received word has wrong length");
  const Field& f = *spec.field;
  std::vector<std::pair<FieldElement, FieldElement>> pts;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (received[i]) {
      f.check(*received[i]);
      pts.emplace_back(spec.point(i), *received[i]);
    }
  }
  const std::size_t d = spec.d;
  if (pts.size() < d) return std::nullopt;
  const std::size_t e = (pts.size() - d) / 2;
  // Q(x) = y·E(x) with E monic of degree e and deg Q < e + d.
  const std::size_t q_terms = e + d;
  const std::size_t cols = q_terms + e;
  detail::Matrix a;
  std::vector<FieldElement> b;
  a.reserve(pts.size());
  for (const auto& [x, y] : pts) {
    std::vector<FieldElement> row(cols, 0);
    FieldElement xp = 1;
    for (std::size_t j = 0; j < q_terms; ++j) {
      row[j] = xp;
      if (j < e) row[q_terms + j] = f.neg(f.mul(y, xp));
      xp = f.mul(xp, x);
    }
    a.push_back(std::move(row));
    b.push_back(f.mul(y, f.pow(x, e)));
  }
  auto sol = detail::solve(f, std::move(a), b, cols);
  if (!sol) return std::nullopt;
  Poly q_poly(std::vector<FieldElement>(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(q_terms)));
  std::vector<FieldElement> e_coeffs(sol->begin() + static_cast<std::ptrdiff_t>(q_terms), sol->end());
  e_coeffs.push_back(1);
  auto [message, rem] = poly_divmod(f, q_poly, Poly(std::move(e_coeffs)));
  if (!rem.is_zero() || message.degree() >= static_cast<long>(d)) return std::nullopt;
  std::size_t disagreements = 0;
  for (const auto& [x, y] : pts) {
    if (poly_eval(f, message, x) != y) ++disagreements;
  }
  if (disagreements > e) return std::nullopt;
  return message;
}

std::size_t CandidateSet::agreement(const Field& f, const Poly& p) const {
  std::size_t count = 0;
  FieldElement last_alpha = 0;
  bool have_last = false;
  FieldElement value = 0;
  for (const auto& [alpha, beta] : pairs_) {
    if (!have_last || alpha != last_alpha) {
      value = poly_eval(f, p, alpha);
      last_alpha = alpha;
      have_last = true;
    }
    if (beta == value) ++count;
  }
  return count;
}

bool sudan_threshold_sound(std::size_t d, std::size_t j_size, std::size_t threshold) {
  return static_cast<unsigned long long>(threshold) * threshold >
         2ULL * static_cast<unsigned long long>(d) * j_size;
}

}  // namespace insdel
