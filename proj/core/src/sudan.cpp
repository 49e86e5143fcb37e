#include <algorithm>

#include "insdel/error.hpp"
#include "insdel/rs.hpp"
#include "linalg.hpp"

namespace insdel {

namespace {

// Bivariate polynomial: coefficient of x^a y^b stored at [b][a].
using Bivariate = std::vector<std::vector<FieldElement>>;

std::size_t monomial_count(std::size_t degree, std::size_t weight) {
  std::size_t total = 0;
  for (std::size_t b = 0; b * weight <= degree; ++b) total += degree - b * weight + 1;
  return total;
}

bool is_zero(const Bivariate& q) {
  for (const auto& row : q) {
    for (auto c : row) {
      if (c != 0) return false;
    }
  }
  return true;
}

class RootFinder {
 public:
  RootFinder(const Field& f, std::size_t d) : f_(f), d_(d), prefix_(d, 0) {}

  std::vector<Poly> run(Bivariate q) {
    std::size_t max_b = q.size();
    binom_.assign(max_b + 1, std::vector<FieldElement>(max_b + 1, 0));
    for (std::size_t n = 0; n <= max_b; ++n) {
      binom_[n][0] = f_.from_integer(1);
      for (std::size_t k = 1; k <= n; ++k) {
        binom_[n][k] = f_.add(binom_[n - 1][k - 1], k <= n - 1 ? binom_[n - 1][k] : 0);
      }
    }
    recurse(std::move(q), 0);
    return std::move(found_);
  }

 private:
  void recurse(Bivariate q, std::size_t depth) {
    strip_x_power(q);
    if (is_zero(q)) return;
    for (std::uint64_t beta = 0; beta < f_.order(); ++beta) {
      const auto b = static_cast<FieldElement>(beta);
      if (!is_root_at_zero(q, b)) continue;
      prefix_[depth] = b;
      if (depth + 1 == d_) {
        found_.push_back(Poly(prefix_));
      } else {
        recurse(shift(q, b), depth + 1);
      }
    }
  }

  void strip_x_power(Bivariate& q) const {
    std::size_t r = SIZE_MAX;
    for (const auto& row : q) {
      for (std::size_t a = 0; a < row.size(); ++a) {
        if (row[a] != 0) {
          r = std::min(r, a);
          break;
        }
      }
    }
    if (r == SIZE_MAX || r == 0) return;
    for (auto& row : q) {
      if (row.size() <= r) {
        row.clear();
      } else {
        row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  bool is_root_at_zero(const Bivariate& q, FieldElement y) const {
    FieldElement acc = 0;
    for (std::size_t b = q.size(); b-- > 0;) {
      acc = f_.add(f_.mul(acc, y), q[b].empty() ? 0 : q[b][0]);
    }
    return acc == 0;
  }

  // Q(x, x·y + beta)
  Bivariate shift(const Bivariate& q, FieldElement beta) const {
    std::size_t width = 0;
    for (const auto& row : q) width = std::max(width, row.size());
    Bivariate out(q.size(), std::vector<FieldElement>(width + q.size(), 0));
    std::vector<FieldElement> beta_pow(q.size() + 1, 1);
    for (std::size_t i = 1; i < beta_pow.size(); ++i) beta_pow[i] = f_.mul(beta_pow[i - 1], beta);
    for (std::size_t b = 0; b < q.size(); ++b) {
      for (std::size_t a = 0; a < q[b].size(); ++a) {
        if (q[b][a] == 0) continue;
        for (std::size_t j = 0; j <= b; ++j) {
          FieldElement c = f_.mul(q[b][a], f_.mul(binom_[b][j], beta_pow[b - j]));
          if (c != 0) out[j][a + j] = f_.add(out[j][a + j], c);
        }
      }
    }
    return out;
  }

  const Field& f_;
  std::size_t d_;
  std::vector<FieldElement> prefix_;
  std::vector<std::vector<FieldElement>> binom_;
  std::vector<Poly> found_;
};

}  // namespace

std::vector<Poly> sudan_list_decode(const RSCodeSpec& spec, const CandidateSet& j,
                                    std::size_t threshold) {
  spec.validate();
  const Field& f = *spec.field;
  for (const auto& [alpha, beta] : j) {
    f.check(alpha);
    f.check(beta);
  }
  if (!sudan_threshold_sound(spec.d, j.size(), threshold)) {
    throw InvalidInput("agreement threshold " + std::to_string(threshold) +
                       " does not exceed sqrt(2·d·|J|) for d=" + std::to_string(spec.d) +
                       ", |J|=" + std::to_string(j.size()));
  }
  if (j.empty()) return {};

  const std::size_t weight = std::max<std::size_t>(spec.d - 1, 1);
  std::size_t degree = 0;
  while (monomial_count(degree, weight) <= j.size()) ++degree;
  if (degree >= threshold) {
    throw InvalidInput("agreement threshold too small for interpolation degree " + std::to_string(degree));
  }

  std::vector<std::pair<std::size_t, std::size_t>> monomials;  // (a, b)
  for (std::size_t b = 0; b * weight <= degree; ++b) {
    for (std::size_t a = 0; a + b * weight <= degree; ++a) monomials.emplace_back(a, b);
  }
  const std::size_t max_b = degree / weight;
  detail::Matrix rows;
  rows.reserve(j.size());
  for (const auto& [alpha, beta] : j) {
    std::vector<FieldElement> row(monomials.size());
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      row[c] = f.mul(f.pow(alpha, monomials[c].first), f.pow(beta, monomials[c].second));
    }
    rows.push_back(std::move(row));
  }
  auto kernel = detail::kernel_vector(f, std::move(rows), monomials.size());
  if (!kernel) throw ArithmeticError("interpolation system has a trivial kernel");

  Bivariate q(max_b + 1, std::vector<FieldElement>(degree + 1, 0));
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    q[monomials[c].second][monomials[c].first] = (*kernel)[c];
  }
  while (q.size() > 1 && std::all_of(q.back().begin(), q.back().end(), [](auto v) { return v == 0; })) {
    q.pop_back();
  }

  auto candidates = RootFinder(f, spec.d).run(std::move(q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Poly> out;
  for (auto& p : candidates) {
    if (j.agreement(f, p) >= threshold) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace insdel
