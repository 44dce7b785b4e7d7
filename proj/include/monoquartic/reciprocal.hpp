// Reciprocal quartics f(x) = x^4 + A x^3 + B x^2 + A x + 1 and their closed-form classification.
//
//   W1 = B + 2 - 2A,  W2 = B + 2 + 2A,  W3 = A^2 - 4B + 8,  W = W1 W2 W3,  disc(f) = W1 W2 W3^2
//
// Irreducibility:
//   A = 0, B = 0   x^4 + 1, irreducible
//   A = 0, B != 0  reducible iff one of -B-2, -B+2, B^2-4 is a square
//   A != 0, B = 0  reducible iff A = +-1
//   AB != 0        reducible iff W3 is a square; then f = (x^2+ax+1)(x^2+bx+1), a,b = (A +- sqrt W3)/2
//
// Monogenicity (A != 0):
//   B = 0   monogenic iff 2 | A and A-1, A+1, (A/2)^2+2 are squarefree
//   AB != 0 monogenic iff W1, W2 squarefree and, by parity of (A, B), W3/4 or W3 squarefree with
//           (A mod 4, B mod 4) in the listed residue set
//
// Galois group of irreducible f: C4 iff W is a square, V4 iff W1 W2 is a square, D4 otherwise.
#pragma once

#include "monoquartic/dedekind.hpp"
#include "monoquartic/galois.hpp"
#include "monoquartic/numtheory.hpp"
#include "monoquartic/polyint.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace monoquartic {

struct ReciprocalQuartic {
  std::int64_t A = 0;
  std::int64_t B = 0;

  IntPoly expand() const {
    const Int a = from_int64(A), b = from_int64(B);
    return IntPoly(std::vector<Int>{1, a, b, a, 1});
  }

  friend auto operator<=>(const ReciprocalQuartic&, const ReciprocalQuartic&) = default;
  friend bool operator==(const ReciprocalQuartic&, const ReciprocalQuartic&) = default;
};

inline std::string to_string(const ReciprocalQuartic& q) {
  return "(" + std::to_string(q.A) + "," + std::to_string(q.B) + ")";
}

/// Recognises x^4 + A x^3 + B x^2 + A x + 1; nullopt for anything else.
inline std::optional<ReciprocalQuartic> as_reciprocal(const IntPoly& p) {
  if (p.degree() != 4 || !p.is_monic() || p.coeff(0) != 1 || p.coeff(1) != p.coeff(3)) return std::nullopt;
  if (!fits_int64(p.coeff(3)) || !fits_int64(p.coeff(2))) return std::nullopt;
  return ReciprocalQuartic{to_int64(p.coeff(3)), to_int64(p.coeff(2))};
}

struct WSet {
  Int W1, W2, W3, W, disc;
};

inline WSet invariants(const ReciprocalQuartic& q) {
  const Int A = from_int64(q.A), B = from_int64(q.B);
  WSet w;
  w.W1 = B + 2 - 2 * A;
  w.W2 = B + 2 + 2 * A;
  w.W3 = A * A - 4 * B + 8;
  w.W = w.W1 * w.W2 * w.W3;
  w.disc = w.W * w.W3;
  return w;
}

inline IrreducibilityVerdict irreducible_closed_form(const ReciprocalQuartic& q) {
  const Int A = from_int64(q.A), B = from_int64(q.B);
  if (q.A == 0 && q.B == 0) return {};
  if (q.A == 0) {
    using numtheory::is_perfect_square;
    using numtheory::isqrt;
    if (const Int m = 2 - B; is_perfect_square(m)) {
      const Int s = isqrt(m);  // x^4 + Bx^2 + 1 = (x^2+1)^2 - s^2 x^2
      return IrreducibilityVerdict::split(IntPoly(std::vector<Int>{1, -s, 1}), IntPoly(std::vector<Int>{1, s, 1}));
    }
    if (const Int m = -B - 2; is_perfect_square(m)) {
      const Int s = isqrt(m);  // (x^2-1)^2 - s^2 x^2
      return IrreducibilityVerdict::split(IntPoly(std::vector<Int>{-1, -s, 1}), IntPoly(std::vector<Int>{-1, s, 1}));
    }
    if (const Int m = B * B - 4; is_perfect_square(m)) {
      const Int t = isqrt(m);
      return IrreducibilityVerdict::split(IntPoly(std::vector<Int>{(B + t) / 2, 0, 1}),
                                          IntPoly(std::vector<Int>{(B - t) / 2, 0, 1}));
    }
    return {};
  }
  if (q.B == 0) {
    if (q.A == 1) return IrreducibilityVerdict::linear(-1);
    if (q.A == -1) return IrreducibilityVerdict::linear(1);
    return {};
  }
  const Int W3 = invariants(q).W3;
  if (!numtheory::is_perfect_square(W3)) return {};
  const Int r = numtheory::isqrt(W3);
  // A and sqrt(W3) have equal parity since W3 = A^2 (mod 4)
  const Int a = (A + r) / 2, b = (A - r) / 2;
  return IrreducibilityVerdict::split(IntPoly(std::vector<Int>{1, a, 1}), IntPoly(std::vector<Int>{1, b, 1}));
}

/// Raised for A = 0, where the monogenicity criterion is not covered.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline int mod4(std::int64_t v) { return static_cast<int>(((v % 4) + 4) % 4); }

// Tracks the smallest prime among failed conditions.
struct Failures {
  std::optional<Int> prime;

  void add(const Int& p) {
    if (!prime || p < *prime) prime = p;
  }
  void require_squarefree(const Int& n) {
    if (n == 0) {
      add(2);
      return;
    }
    if (const Int p = numtheory::smallest_square_prime(n); p != 0) add(p);
  }
};

}  // namespace detail

/// Closed-form monogenicity for A != 0. NotMonogenic verdicts carry the smallest prime among
/// the failed conditions (2 for a parity or residue-class failure).
inline MonogenicityVerdict monogenic_closed_form(const ReciprocalQuartic& q) {
  if (q.A == 0) throw UnsupportedError("monogenic_closed_form: A = 0 is not covered by the closed form");
  if (!irreducible_closed_form(q).irreducible()) return MonogenicityVerdict::reducible();
  detail::Failures fail;
  const Int A = from_int64(q.A);

  if (q.B == 0) {
    if (q.A % 2 != 0) return MonogenicityVerdict::not_monogenic(2);
    const Int half = A / 2;
    fail.require_squarefree(A - 1);
    fail.require_squarefree(A + 1);
    fail.require_squarefree(half * half + 2);
  } else {
    const WSet w = invariants(q);
    fail.require_squarefree(w.W1);
    fail.require_squarefree(w.W2);
    const bool a_even = q.A % 2 == 0, b_even = q.B % 2 == 0;
    const std::pair<int, int> residues{detail::mod4(q.A), detail::mod4(q.B)};
    std::set<std::pair<int, int>> allowed;
    if (a_even) {
      // 4 | W3 whenever A is even
      fail.require_squarefree(Int(w.W3 / 4));
      allowed = b_even ? std::set<std::pair<int, int>>{{0, 0}, {2, 0}} : std::set<std::pair<int, int>>{{0, 3}, {2, 1}};
    } else {
      fail.require_squarefree(w.W3);
      allowed = b_even ? std::set<std::pair<int, int>>{{1, 2}, {3, 2}}
                       : std::set<std::pair<int, int>>{{1, 1}, {1, 3}, {3, 1}, {3, 3}};
    }
    if (allowed.count(residues) == 0) fail.add(2);
  }
  if (fail.prime) return MonogenicityVerdict::not_monogenic(*fail.prime);
  return MonogenicityVerdict::monogenic();
}

/// Requires f irreducible; throws std::domain_error otherwise.
inline GaloisClass lemma_ap_class(const ReciprocalQuartic& q) {
  if (!irreducible_closed_form(q).irreducible())
    throw std::domain_error("lemma_ap_class: " + to_string(q) + " is reducible");
  const WSet w = invariants(q);
  if (numtheory::is_perfect_square(w.W)) return GaloisClass::C4;
  if (numtheory::is_perfect_square(Int(w.W1 * w.W2))) return GaloisClass::V4;
  return GaloisClass::D4;
}

enum class Family { F1, F2, F3, F4, F5, NotApplicable };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
    case Family::F5: return "F5";
    case Family::NotApplicable: return "NA";
  }
  return "?";
}

/// F1: A, B even. F2: A even, B odd. F3: A odd, B even. F4/F5: A, B odd with W non-square/square.
/// NotApplicable unless AB != 0 and f is monogenic.
inline Family family(const ReciprocalQuartic& q) {
  if (q.A == 0 || q.B == 0) return Family::NotApplicable;
  if (monogenic_closed_form(q).status != Monogenicity::Monogenic) return Family::NotApplicable;
  const bool a_even = q.A % 2 == 0, b_even = q.B % 2 == 0;
  if (a_even && b_even) return Family::F1;
  if (a_even) return Family::F2;
  if (b_even) return Family::F3;
  return numtheory::is_perfect_square(invariants(q).W) ? Family::F5 : Family::F4;
}

/// f(x) -> f(-x), i.e. (A, B) -> (-A, B). Generates the same field.
inline ReciprocalQuartic mirror(const ReciprocalQuartic& q) { return {-q.A, q.B}; }

inline bool is_monogenic(const ReciprocalQuartic& q) {
  const auto v = q.A != 0 ? monogenic_closed_form(q) : monogenic_oracle(q.expand());
  return v.status == Monogenicity::Monogenic;
}

enum class Distinctness { Distinct, Inconclusive };

inline const char* to_string(Distinctness d) { return d == Distinctness::Distinct ? "distinct" : "inconclusive"; }

/// For monogenic f, disc(f) is the field discriminant, so unequal discriminants prove the fields differ.
/// Equal discriminants prove nothing.
inline Distinctness distinct_by_discriminant(const ReciprocalQuartic& q1, const ReciprocalQuartic& q2) {
  for (const auto& q : {q1, q2}) {
    if (!is_monogenic(q)) throw std::domain_error("distinct_by_discriminant: " + to_string(q) + " is not monogenic");
  }
  return invariants(q1).disc != invariants(q2).disc ? Distinctness::Distinct : Distinctness::Inconclusive;
}

// Explicit infinite subfamilies: the member for parameter k, admitted when its certificate is squarefree.
//   1: A = 2k,   B = 4,  k >= 3, certificate (3-2k)(3+2k)(k^2-2)
//   2: A = 2k,   B = 3,  k >= 2, certificate (5-4k)(4k+5)(k^2-1)
//   3: A = 2k+1, B = 10, k >= 5, certificate (5-2k)(7+2k)(4k^2+4k-31)
//   4: A = 2k+1, B = 1,  k >= 1, certificate W1 W2 W3

inline std::int64_t family_witness_min_k(int family_index) {
  switch (family_index) {
    case 1: return 3;
    case 2: return 2;
    case 3: return 5;
    case 4: return 1;
    default: throw std::domain_error("family_witness: family index must be 1..4, got " + std::to_string(family_index));
  }
}

struct WitnessFinding {
  int family_index = 0;
  std::int64_t k = 0;
  ReciprocalQuartic candidate;
  Int certificate;
  bool certificate_squarefree = false;
  Family classified = Family::NotApplicable;

  /// The certificate admits the candidate but the main classifier does not. The certificate is only
  /// sufficient: a candidate it rejects may still belong to the family.
  bool divergent() const { return certificate_squarefree && classified != static_cast<Family>(family_index - 1); }
};

inline WitnessFinding family_witness_check(int family_index, std::int64_t k) {
  if (k < family_witness_min_k(family_index))
    throw std::domain_error("family_witness: k = " + std::to_string(k) + " is below the bound for family " +
                            std::to_string(family_index));
  WitnessFinding w;
  w.family_index = family_index;
  w.k = k;
  const Int K = from_int64(k);
  switch (family_index) {
    case 1:
      w.candidate = {2 * k, 4};
      w.certificate = (3 - 2 * K) * (3 + 2 * K) * (K * K - 2);
      break;
    case 2:
      w.candidate = {2 * k, 3};
      w.certificate = (5 - 4 * K) * (4 * K + 5) * (K * K - 1);
      break;
    case 3:
      w.candidate = {2 * k + 1, 10};
      w.certificate = (5 - 2 * K) * (7 + 2 * K) * (4 * K * K + 4 * K - 31);
      break;
    default:
      w.candidate = {2 * k + 1, 1};
      w.certificate = invariants(w.candidate).W;
      break;
  }
  w.certificate_squarefree = numtheory::is_squarefree(w.certificate);
  w.classified = family(w.candidate);
  return w;
}

/// The k-th member of the family's explicit subfamily, or nullopt when its certificate fails.
inline std::optional<ReciprocalQuartic> family_witness(int family_index, std::int64_t k) {
  const WitnessFinding w = family_witness_check(family_index, k);
  if (!w.certificate_squarefree) return std::nullopt;
  return w.candidate;
}

}  // namespace monoquartic
