// Exact integer kernels: primality, factorization, squarefree and square tests.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoquartic {

using Int = mpz_class;

inline bool fits_int64(const Int& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Int& n) {
  if (!fits_int64(n)) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  return static_cast<std::int64_t>(n.get_si());
}

inline bool fits_uint64(const Int& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_uint64(const Int& n) {
  if (!fits_uint64(n)) throw std::overflow_error("integer does not fit in 64 unsigned bits: " + n.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

inline Int from_uint64(std::uint64_t v) {
  Int out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline Int from_int64(std::int64_t v) {
  Int out = from_uint64(v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v));
  if (v < 0) out = -out;
  return out;
}

namespace numtheory {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Exact below 2^64; above that GMP's BPSW-based test with extra Miller-Rabin rounds.
inline bool is_prime(const Int& n) {
  if (sgn(n) <= 0) return false;
  if (fits_uint64(n)) return is_prime_u64(to_uint64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline constexpr std::uint32_t kTrialDivisionBound = 1000000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Brent's variant of Pollard rho. n must be odd and composite.
inline std::uint64_t brent_rho_u64(std::uint64_t n) {
  constexpr std::uint64_t kBatch = 128;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    auto step = [&](std::uint64_t v) {
      std::uint64_t next = mul_mod(v, v, n) + c;
      if (next < c || next >= n) next -= n;
      return next;
    };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
      r <<= 1U;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline Int brent_rho(const Int& n) {
  if (fits_uint64(n)) return from_uint64(brent_rho_u64(to_uint64(n)));
  constexpr unsigned kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    unsigned long r = 1;
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (unsigned long i = 0; i < std::min<unsigned long>(kBatch, r - k); ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
      }
      r <<= 1U;
    }
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Int value() const {
    Int out = sign;
    for (const auto& f : factors) {
      Int pk;
      mpz_pow_ui(pk.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
      out *= pk;
    }
    return out;
  }
};

namespace detail {

inline void split_cofactor(const Int& m, std::map<Int, unsigned>& acc) {
  if (m == 1) return;
  // every prime <= kTrialDivisionBound has already been removed
  if (m <= Int(kTrialDivisionBound) * kTrialDivisionBound || is_prime(m)) {
    ++acc[m];
    return;
  }
  // rho is hopeless on p^k with large p, so take exact roots first
  for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2); k >= 2; --k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
      for (unsigned long i = 0; i < k; ++i) split_cofactor(root, acc);
      return;
    }
  }
  Int d = brent_rho(m);
  split_cofactor(d, acc);
  split_cofactor(m / d, acc);
}

}  // namespace detail

/// Trial division up to 10^6, then Brent rho on the cofactor. Throws std::domain_error on 0.
inline Factorization factor(const Int& n) {
  if (n == 0) throw std::domain_error("factor: zero has no factorization");
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, unsigned> acc;

  if (fits_uint64(m)) {
    std::uint64_t v = to_uint64(m);
    for (std::uint32_t p : small_primes()) {
      if (static_cast<std::uint64_t>(p) * p > v) break;
      if (v % p != 0) continue;
      unsigned e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      acc.emplace(Int(p), e);
    }
    m = from_uint64(v);
  } else {
    for (std::uint32_t p : small_primes()) {
      if (Int(p) * p > m) break;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      acc.emplace(Int(p), e);
    }
  }
  detail::split_cofactor(m, acc);
  for (auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

inline Factorization factor(std::int64_t n) { return factor(from_int64(n)); }

/// Sign is ignored; 0 is not squarefree, +-1 is.
inline bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  const auto f = factor(n);
  return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

inline bool is_squarefree(std::int64_t n) { return is_squarefree(from_int64(n)); }

inline Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// True iff n = m^2 for an integer m; negatives are never squares.
inline bool is_perfect_square(const Int& n) {
  if (sgn(n) < 0) return false;
  const Int r = isqrt(n);
  return r * r == n;
}

inline bool is_perfect_square(std::int64_t n) { return is_perfect_square(from_int64(n)); }

/// Smallest prime whose square divides n, or 0 if n is squarefree. n must be nonzero.
inline Int smallest_square_prime(const Int& n) {
  for (const auto& pp : factor(n).factors) {
    if (pp.exponent >= 2) return pp.prime;
  }
  return 0;
}

/// All positive divisors of |n|, ascending. n must be nonzero.
inline std::vector<Int> positive_divisors(const Int& n) {
  std::vector<Int> divs{1};
  for (const auto& pp : factor(n).factors) {
    const std::size_t count = divs.size();
    Int pk = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace numtheory
}  // namespace monoquartic
