// Polynomials over F_p for word-size primes p, with complete factorization
// (squarefree decomposition, distinct-degree and equal-degree splitting).
#pragma once

#include "monoquartic/numtheory.hpp"
#include "monoquartic/polyint.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monoquartic {

class ModPoly {
 public:
  using Residue = std::uint64_t;

  ModPoly() = default;
  ModPoly(Residue modulus, std::vector<Residue> ascending) : p_(modulus), c_(std::move(ascending)) {
    if (p_ < 2) throw std::domain_error("ModPoly: modulus must be at least 2");
    for (auto& v : c_) v %= p_;
    normalize();
  }

  static ModPoly zero(Residue modulus) { return ModPoly(modulus, {}); }
  static ModPoly one(Residue modulus) { return ModPoly(modulus, {1}); }
  static ModPoly x(Residue modulus) { return ModPoly(modulus, {0, 1}); }

  Residue modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<Residue>& coeffs() const { return c_; }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Residue leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Residue eval(Residue t) const {
    Residue acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(numtheory::mul_mod(acc, t, p_), *it);
    return acc;
  }

  ModPoly derivative() const {
    if (c_.size() <= 1) return zero(p_);
    std::vector<Residue> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = numtheory::mul_mod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(d));
  }

  ModPoly scaled(Residue k) const {
    std::vector<Residue> c = c_;
    for (auto& v : c) v = numtheory::mul_mod(v, k % p_, p_);
    return ModPoly(p_, std::move(c));
  }

  ModPoly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(leading()));
  }

  Residue inverse(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("ModPoly: inverse of zero residue");
    return numtheory::pow_mod(a, p_ - 2, p_);
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.add_mod(a.coeff(i), b.coeff(i));
    return ModPoly(a.p_, std::move(c));
  }

  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.add_mod(a.coeff(i), a.p_ - b.coeff(i));
    return ModPoly(a.p_, std::move(c));
  }

  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return zero(a.p_);
    std::vector<Residue> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = a.add_mod(c[i + j], numtheory::mul_mod(a.c_[i], b.c_[j], a.p_));
    return ModPoly(a.p_, std::move(c));
  }

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// Degree, then coefficients lexicographically from the constant term up.
  friend bool canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
  }

  void check_same(const ModPoly& other) const {
    if (p_ != other.p_) throw std::domain_error("ModPoly: modulus mismatch");
  }

 private:
  Residue add_mod(Residue a, Residue b) const {
    Residue s = a + b;
    if (s < a || s >= p_) s -= p_;
    return s;
  }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Residue p_ = 2;
  std::vector<Residue> c_;
};

/// Quotient and remainder of a by nonzero b.
inline std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  a.check_same(b);
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  const auto p = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly::zero(p), a};
  std::vector<ModPoly::Residue> rem = a.coeffs();
  std::vector<ModPoly::Residue> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto inv = b.inverse(b.leading());
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    const auto t = numtheory::mul_mod(top, inv, p);
    quot[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      const auto sub = numtheory::mul_mod(t, b.coeffs()[static_cast<std::size_t>(j)], p);
      r = r >= sub ? r - sub : r + (p - sub);
    }
  }
  return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

inline ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

/// Exact quotient; throws std::domain_error if b does not divide a.
inline ModPoly exact_div(const ModPoly& a, const ModPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: divisor does not divide dividend over F_p");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline ModPoly gcd(ModPoly a, ModPoly b) {
  a.check_same(b);
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^exp mod m.
inline ModPoly pow_mod(const ModPoly& base, const Int& exp, const ModPoly& m) {
  ModPoly result = ModPoly::one(m.modulus()) % m;
  ModPoly b = base % m;
  const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = (result * b) % m;
  }
  return result;
}

/// Coefficientwise reduction into [0, p). The modulus must be prime.
inline ModPoly reduce(const IntPoly& f, std::uint64_t p) {
  if (!numtheory::is_prime_u64(p)) throw std::domain_error("reduce: modulus " + std::to_string(p) + " is not prime");
  const Int mod = from_uint64(p);
  std::vector<ModPoly::Residue> c;
  c.reserve(f.coeffs().size());
  for (const Int& v : f.coeffs()) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    c.push_back(to_uint64(r));
  }
  return ModPoly(p, std::move(c));
}

/// The lift with coefficients in [0, p).
inline IntPoly lift(const ModPoly& f) {
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (auto v : f.coeffs()) c.push_back(from_uint64(v));
  return IntPoly(std::move(c));
}

inline std::string to_string(const ModPoly& f, char var = 'x') { return to_string(lift(f), var); }

struct ModFactor {
  ModPoly factor;  // monic irreducible
  unsigned exponent = 0;

  friend bool operator==(const ModFactor& a, const ModFactor& b) {
    return a.exponent == b.exponent && a.factor == b.factor;
  }
};

namespace detail {

inline ModPoly pth_root(const ModPoly& f) {
  const auto p = f.modulus();
  std::vector<ModPoly::Residue> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(c));
}

// Yun-style decomposition adapted to characteristic p: returns squarefree parts with multiplicities.
inline void squarefree_parts(const ModPoly& f, unsigned mult, std::vector<std::pair<ModPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const ModPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_parts(pth_root(f), mult * static_cast<unsigned>(f.modulus()), out);
    return;
  }
  ModPoly c = gcd(f, df);
  ModPoly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i * mult);
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), mult * static_cast<unsigned>(f.modulus()), out);
}

// Splits a squarefree monic f into (product of all degree-d factors, d).
inline std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const auto p = f.modulus();
  const Int pz = from_uint64(p);
  const ModPoly x = ModPoly::x(p);
  ModPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = pow_mod(h, pz, f);
    ModPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

inline std::uint64_t split_seed(const ModPoly& f) {
  std::uint64_t seed = f.modulus() * 0x9E3779B97F4A7C15ULL;
  for (auto c : f.coeffs()) seed = (seed ^ (c + 0x9E3779B97F4A7C15ULL + (seed << 6U) + (seed >> 2U))) * 0xBF58476D1CE4E5B9ULL;
  return seed;
}

// Cantor-Zassenhaus splitting of a squarefree monic product of degree-d irreducibles.
inline void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const auto p = f.modulus();
  Int exp;
  if (p != 2) {
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), from_uint64(p).get_mpz_t(), static_cast<unsigned long>(d));
    exp = (pd - 1) / 2;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    std::vector<ModPoly::Residue> c(static_cast<std::size_t>(f.degree()));
    for (auto& v : c) v = coeff(rng);
    const ModPoly a(p, std::move(c));
    if (a.degree() <= 0) continue;
    ModPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      ModPoly term = a % f;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      b = pow_mod(a, exp, f) - ModPoly::one(p);
    }
    ModPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Complete factorization into monic irreducibles with multiplicities, canonically ordered.
/// The leading coefficient of a is discarded. Equal-degree splitting is seeded from the input
/// so the result is reproducible.
inline std::vector<ModFactor> factorize(const ModPoly& a) {
  if (a.is_zero()) throw std::domain_error("factorize: zero polynomial");
  std::vector<std::pair<ModPoly, unsigned>> parts;
  detail::squarefree_parts(a.monic(), 1, parts);
  std::mt19937_64 rng(detail::split_seed(a));
  std::vector<ModFactor> out;
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : detail::distinct_degree(part)) {
      std::vector<ModPoly> pieces;
      detail::equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& x, const ModFactor& y) {
    if (x.factor == y.factor) return x.exponent < y.exponent;
    return canonical_less(x.factor, y.factor);
  });
  std::vector<ModFactor> merged;
  for (auto& f : out) {
    if (!merged.empty() && merged.back().factor == f.factor) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(std::move(f));
    }
  }
  return merged;
}

/// Degrees of the irreducible factors of f mod p, descending, each listed once per multiplicity.
inline std::vector<int> frobenius_pattern(const IntPoly& f, std::uint64_t p) {
  std::vector<int> degrees;
  for (const auto& [factor, e] : factorize(reduce(f, p))) {
    for (unsigned i = 0; i < e; ++i) degrees.push_back(factor.degree());
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace monoquartic
