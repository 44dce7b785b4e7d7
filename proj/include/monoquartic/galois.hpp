// Galois groups of irreducible monic integer quartics: resolvent cubic plus the
// Kappe-Warren test separating C4 from D4.
#pragma once

#include "monoquartic/numtheory.hpp"
#include "monoquartic/polyint.hpp"
#include "monoquartic/polymod.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoquartic {

enum class GaloisClass { S4, A4, D4, C4, V4 };

inline const char* to_string(GaloisClass g) {
  switch (g) {
    case GaloisClass::S4: return "S4";
    case GaloisClass::A4: return "A4";
    case GaloisClass::D4: return "D4";
    case GaloisClass::C4: return "C4";
    case GaloisClass::V4: return "V4";
  }
  return "?";
}

/// y^3 - c y^2 + (bd - 4e) y - (b^2 e - 4ce + d^2) for x^4 + b x^3 + c x^2 + d x + e.
inline IntPoly resolvent_cubic(const IntPoly& q) {
  if (q.degree() != 4 || !q.is_monic()) throw std::domain_error("resolvent_cubic: expected a monic quartic");
  const Int b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
  return IntPoly(std::vector<Int>{-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, 1});
}

/// Distinct integer roots of a monic polynomial, allowing a zero constant term.
inline std::vector<Int> integer_roots(IntPoly p) {
  std::vector<Int> roots;
  if (p.coeff(0) == 0) {
    roots.push_back(0);
    while (!p.is_zero() && p.coeff(0) == 0) p = IntPoly(std::vector<Int>(p.coeffs().begin() + 1, p.coeffs().end()));
  }
  if (p.degree() >= 1) {
    for (auto& r : rational_roots_monic(p)) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// x^2 + p x + r splits over Q(sqrt(D)).
inline bool quadratic_splits_over(const Int& p, const Int& r, const Int& D) {
  const Int delta = p * p - 4 * r;
  if (delta == 0 || numtheory::is_perfect_square(delta)) return true;
  return !numtheory::is_perfect_square(D) && numtheory::is_perfect_square(Int(D * delta));
}

struct GaloisTrace {
  IntPoly resolvent;
  Int disc;
  std::vector<Int> resolvent_roots;
  GaloisClass group = GaloisClass::S4;
};

inline GaloisTrace galois_trace(const IntPoly& q) {
  if (q.degree() != 4 || !q.is_monic()) throw std::domain_error("galois_group: expected a monic quartic");
  if (q.coeff(0) == 0 || !quartic_irreducible(q).irreducible())
    throw std::domain_error("galois_group: " + to_string(q) + " is reducible");
  GaloisTrace t;
  t.resolvent = resolvent_cubic(q);
  t.disc = discriminant(q);
  t.resolvent_roots = integer_roots(t.resolvent);
  const bool disc_square = numtheory::is_perfect_square(t.disc);
  switch (t.resolvent_roots.size()) {
    case 0:
      t.group = disc_square ? GaloisClass::A4 : GaloisClass::S4;
      break;
    case 3:
      t.group = GaloisClass::V4;
      break;
    case 1: {
      const Int& beta = t.resolvent_roots.front();
      const Int b = q.coeff(3), c = q.coeff(2), e = q.coeff(0);
      const bool cyclic = quadratic_splits_over(-beta, e, t.disc) && quadratic_splits_over(b, c - beta, t.disc);
      t.group = cyclic ? GaloisClass::C4 : GaloisClass::D4;
      break;
    }
    default:
      // a separable cubic cannot have exactly two rational roots
      throw std::logic_error("galois_group: resolvent cubic of " + to_string(q) + " has a repeated root");
  }
  return t;
}

/// Requires q irreducible over Q; throws std::domain_error otherwise.
inline GaloisClass galois_group(const IntPoly& q) { return galois_trace(q).group; }

/// Factor-degree multisets (descending) realised by elements of each transitive quartic group.
inline std::set<std::vector<int>> cycle_patterns(GaloisClass g) {
  const std::vector<int> id{1, 1, 1, 1}, dbl{2, 2}, four{4}, trans{2, 1, 1}, three{3, 1};
  switch (g) {
    case GaloisClass::V4: return {id, dbl};
    case GaloisClass::C4: return {id, dbl, four};
    case GaloisClass::D4: return {id, dbl, four, trans};
    case GaloisClass::A4: return {id, dbl, three};
    case GaloisClass::S4: return {id, dbl, four, trans, three};
  }
  return {};
}

struct FrobeniusAudit {
  GaloisClass group = GaloisClass::S4;
  std::vector<std::uint64_t> primes;
  std::map<std::vector<int>, unsigned> pattern_counts;
  std::vector<std::vector<int>> contradictions;  // observed patterns the claimed group cannot produce

  bool contradiction() const { return !contradictions.empty(); }
};

/// Factors q modulo the first `sample` primes not dividing disc(q). Advisory only.
inline FrobeniusAudit frobenius_audit(const IntPoly& q, unsigned sample) {
  FrobeniusAudit out;
  const GaloisTrace trace = galois_trace(q);
  out.group = trace.group;
  const auto allowed = cycle_patterns(out.group);
  for (std::uint64_t p = 2; out.primes.size() < sample; ++p) {
    if (!numtheory::is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(trace.disc.get_mpz_t(), p) != 0) continue;
    out.primes.push_back(p);
    auto pattern = frobenius_pattern(q, p);
    if (++out.pattern_counts[pattern] == 1 && allowed.count(pattern) == 0) out.contradictions.push_back(pattern);
  }
  return out;
}

inline std::string pattern_string(const std::vector<int>& pattern) {
  std::string s = "{";
  for (std::size_t i = 0; i < pattern.size(); ++i) s += (i ? "," : "") + std::to_string(pattern[i]);
  return s + "}";
}

}  // namespace monoquartic
