// Dedekind's index criterion and the discriminant-driven monogenicity oracle.
//
// For a monic T and prime p with T = prod tau_i^e_i (mod p):
//   h1 = prod tau_i (each distinct factor once), h2 = T / h1 (mod p),
//   F  = (h1 h2 - T) / p  in Z[x],
// and p divides [Z_K : Z[theta]] iff gcd(F, h1, h2) != 1 in F_p[x]. The verdict does not depend
// on which monic lifts of tau_i and of T/h1 are used.
#pragma once

#include "monoquartic/numtheory.hpp"
#include "monoquartic/polyint.hpp"
#include "monoquartic/polymod.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoquartic {

struct DedekindReport {
  std::uint64_t prime = 0;
  std::vector<ModFactor> factors;
  IntPoly h1;
  IntPoly h2;
  IntPoly F;
  ModPoly gcd_poly;
  bool p_divides_index = false;
};

/// Runs the criterion with caller-chosen monic lifts: one lift per distinct factor of T mod p
/// (in the order factorize() returns them) and a lift of T / h1 mod p.
inline DedekindReport dedekind_with_lifts(const IntPoly& T, std::uint64_t p, const std::vector<IntPoly>& tau_lifts,
                                          const IntPoly& h2_lift) {
  if (!T.is_monic() || T.degree() < 2) throw std::domain_error("dedekind: T must be monic of degree >= 2");
  DedekindReport r;
  r.prime = p;
  const ModPoly Tbar = reduce(T, p);
  r.factors = factorize(Tbar);
  if (tau_lifts.size() != r.factors.size()) throw std::domain_error("dedekind: one lift per distinct factor required");

  IntPoly h1{1};
  for (std::size_t i = 0; i < tau_lifts.size(); ++i) {
    const IntPoly& tau = tau_lifts[i];
    if (!tau.is_monic() || !(reduce(tau, p) == r.factors[i].factor))
      throw std::domain_error("dedekind: lift " + to_string(tau) + " is not a monic lift of " +
                              to_string(r.factors[i].factor));
    h1 = h1 * tau;
  }
  const ModPoly h1bar = reduce(h1, p);
  const ModPoly h2bar = exact_div(Tbar, h1bar);
  if (!h2_lift.is_monic() || !(reduce(h2_lift, p) == h2bar))
    throw std::domain_error("dedekind: h2 is not a monic lift of T/h1 mod p");

  r.h1 = h1;
  r.h2 = h2_lift;
  // h1 h2 = T (mod p), so the division is exact; exact_div throws otherwise
  r.F = exact_div(h1 * h2_lift - T, from_uint64(p));
  r.gcd_poly = gcd(gcd(reduce(r.F, p), h1bar), h2bar);
  r.p_divides_index = !r.gcd_poly.is_one();
  return r;
}

/// The criterion with canonical lifts (coefficients in [0, p)).
inline DedekindReport dedekind_at(const IntPoly& T, std::uint64_t p) {
  if (!T.is_monic() || T.degree() < 2) throw std::domain_error("dedekind: T must be monic of degree >= 2");
  if (!numtheory::is_prime_u64(p)) throw std::domain_error("dedekind: " + std::to_string(p) + " is not prime");
  const ModPoly Tbar = reduce(T, p);
  std::vector<IntPoly> lifts;
  ModPoly h1bar = ModPoly::one(p);
  for (const auto& f : factorize(Tbar)) {
    lifts.push_back(lift(f.factor));
    h1bar = h1bar * f.factor;
  }
  return dedekind_with_lifts(T, p, lifts, lift(exact_div(Tbar, h1bar)));
}

enum class Monogenicity { Monogenic, NotMonogenic, Reducible };

inline const char* to_string(Monogenicity m) {
  switch (m) {
    case Monogenicity::Monogenic: return "yes";
    case Monogenicity::NotMonogenic: return "no";
    case Monogenicity::Reducible: return "reducible";
  }
  return "?";
}

/// witness is set iff status is NotMonogenic: a prime dividing the index.
struct MonogenicityVerdict {
  Monogenicity status = Monogenicity::Reducible;
  std::optional<Int> witness;

  static MonogenicityVerdict monogenic() { return {Monogenicity::Monogenic, std::nullopt}; }
  static MonogenicityVerdict reducible() { return {Monogenicity::Reducible, std::nullopt}; }
  static MonogenicityVerdict not_monogenic(Int p) { return {Monogenicity::NotMonogenic, std::move(p)}; }
};

/// Primes p with p^2 | disc(T); only these can divide the index.
inline std::vector<std::uint64_t> index_candidate_primes(const Int& disc) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : numtheory::factor(disc).factors) {
    if (pp.exponent >= 2) out.push_back(to_uint64(pp.prime));
  }
  return out;
}

inline bool quartic_is_reducible(const IntPoly& T, const Int& disc) {
  if (disc == 0 || T.coeff(0) == 0) return true;
  return !quartic_irreducible(T).irreducible();
}

/// Dedekind reports at every prime whose square divides disc(T), ascending.
inline std::vector<DedekindReport> dedekind_reports(const IntPoly& T) {
  std::vector<DedekindReport> out;
  const Int disc = discriminant(T);
  if (disc == 0) return out;
  for (auto p : index_candidate_primes(disc)) out.push_back(dedekind_at(T, p));
  return out;
}

/// Monogenic iff T is irreducible and no prime p with p^2 | disc(T) divides the index.
/// The smallest failing prime is the witness.
inline MonogenicityVerdict monogenic_oracle(const IntPoly& T) {
  if (T.degree() != 4 || !T.is_monic()) throw std::domain_error("monogenic_oracle: expected a monic quartic");
  const Int disc = discriminant(T);
  if (quartic_is_reducible(T, disc)) return MonogenicityVerdict::reducible();
  for (auto p : index_candidate_primes(disc)) {
    if (dedekind_at(T, p).p_divides_index) return MonogenicityVerdict::not_monogenic(from_uint64(p));
  }
  return MonogenicityVerdict::monogenic();
}

inline nlohmann::ordered_json to_json(const DedekindReport& r) {
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& f : r.factors) factors.push_back({{"factor", to_string(f.factor)}, {"exponent", f.exponent}});
  return {{"p", r.prime},
          {"factors", factors},
          {"h1", to_string(r.h1)},
          {"h2", to_string(r.h2)},
          {"F", to_string(r.F)},
          {"gcd", to_string(r.gcd_poly)},
          {"p_divides_index", r.p_divides_index}};
}

}  // namespace monoquartic
