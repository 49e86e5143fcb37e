#include "insdel/gf.hpp"

#include <algorithm>
#include <limits>

#include "insdel/error.hpp"

namespace insdel {

namespace {

using Coeffs = std::vector<std::uint64_t>;

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t factor = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - factor) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(out), m, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t k, const Coeffs& m, std::uint64_t p) {
  Coeffs result{1};
  base = poly_mod(std::move(base), m, p);
  for (; k > 0; k >>= 1) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Coeffs to_digits(std::uint64_t value, std::uint64_t p) {
  Coeffs out;
  while (value > 0) {
    out.push_back(value % p);
    value /= p;
  }
  return out;
}

std::uint64_t from_digits(const Coeffs& digits, std::uint64_t p) {
  std::uint64_t value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
  return value;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Coeffs f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  const Coeffs x{0, 1};
  // x^(p^i) mod f for i = 0..e
  std::vector<Coeffs> frob{poly_mod(x, f, p)};
  for (std::size_t i = 1; i <= e; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
  auto minus_x = [&](Coeffs a) {
    a.resize(std::max<std::size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[e]).empty()) return false;
  for (std::uint64_t r : prime_factors(e)) {
    Coeffs g = poly_gcd(f, minus_x(frob[e / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw InvalidInput("extension degree must be at least 1");
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (limit > std::numeric_limits<std::uint32_t>::max() / p) {
      throw InvalidInput("field order exceeds 2^32");
    }
    limit *= p;
  }
  for (std::uint64_t lower = 0; lower < limit; ++lower) {
    Coeffs digits = to_digits(lower, p);
    std::vector<std::uint32_t> candidate(e + 1, 0);
    for (std::size_t i = 0; i < digits.size(); ++i) candidate[i] = static_cast<std::uint32_t>(digits[i]);
    candidate[e] = 1;
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw ConstructionFailure("no irreducible polynomial found");
}

Field::Field(std::uint32_t p, unsigned e) : Field(p, e, default_modulus(p, e)) {}

Field::Field(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw InvalidInput("field characteristic " + std::to_string(p_) + " is not prime");
  if (e_ == 0) throw InvalidInput("extension degree must be at least 1");
  if (modulus_.size() != e_ + 1 || modulus_.back() != 1) {
    throw InvalidInput("modulus must be monic of degree " + std::to_string(e_));
  }
  for (auto c : modulus_) {
    if (c >= p_) throw InvalidInput("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, p_)) throw InvalidInput("modulus is reducible");
  q_ = 1;
  for (unsigned i = 0; i < e_; ++i) {
    q_ *= p_;
    if (q_ > std::numeric_limits<std::uint32_t>::max()) throw InvalidInput("field order exceeds 2^32");
  }
  init();
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw InvalidInput("field order must be at least 2");
  auto factors = prime_factors(q);
  if (factors.size() != 1) throw InvalidInput("field order " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = factors.front();
  unsigned e = 0;
  for (std::uint64_t v = q; v > 1; v /= p) ++e;
  return Field(static_cast<std::uint32_t>(p), e);
}

void Field::init() {
  if (q_ > kTableLimit) return;
  // Find a generator of the multiplicative group.
  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  FieldElement gen = 1;
  if (q_ > 2) {
    for (FieldElement g = 2; g < q_; ++g) {
      bool primitive = true;
      for (auto f : factors) {
        FieldElement r = 1;
        FieldElement base = g;
        for (std::uint64_t k = group / f; k > 0; k >>= 1) {
          if (k & 1) r = slow_mul(r, base);
          base = slow_mul(base, base);
        }
        if (r == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = g;
        break;
      }
    }
  }
  exp_.assign(2 * group, 0);
  log_.assign(q_, 0);
  FieldElement v = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = v;
    exp_[i + group] = v;
    log_[v] = static_cast<std::uint32_t>(i);
    v = slow_mul(v, gen);
  }
}

void Field::check(FieldElement a) const {
  if (a >= q_) {
    throw InvalidInput("element " + std::to_string(a) + " outside " + describe());
  }
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return a ^ b;
  FieldElement out = 0;
  FieldElement place = 1;
  while (a > 0 || b > 0) {
    out += place * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

FieldElement Field::neg(FieldElement a) const {
  if (p_ == 2) return a;
  FieldElement out = 0;
  FieldElement place = 1;
  while (a > 0) {
    out += place * ((p_ - a % p_) % p_);
    a /= p_;
    place *= p_;
  }
  return out;
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::slow_mul(FieldElement a, FieldElement b) const {
  Coeffs m(modulus_.begin(), modulus_.end());
  Coeffs prod = poly_mulmod(to_digits(a, p_), to_digits(b, p_), m, p_);
  return static_cast<FieldElement>(from_digits(prod, p_));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a == 0 || b == 0) return 0;
  if (exp_.empty()) return slow_mul(a, b);
  return exp_[log_[a] + log_[b]];
}

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in " + describe());
  if (exp_.empty()) return pow(a, q_ - 2);
  const std::uint64_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  if (b == 0) throw ArithmeticError("division by zero in " + describe());
  return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
  FieldElement result = 1;
  FieldElement base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string Field::describe() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

}  // namespace insdel
