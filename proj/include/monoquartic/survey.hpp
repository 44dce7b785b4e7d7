// Classification records, grid campaigns with oracle cross-validation, the F5 search and
// discriminant distinctness audits.
#pragma once

#include "monoquartic/dedekind.hpp"
#include "monoquartic/galois.hpp"
#include "monoquartic/reciprocal.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace monoquartic {

struct ClassificationRecord {
  ReciprocalQuartic q;
  WSet w;
  IrreducibilityVerdict irreducibility;
  std::optional<MonogenicityVerdict> monogenicity;  // nullopt: not covered (A = 0, irreducible)
  std::optional<MonogenicityVerdict> oracle_monogenicity;
  std::optional<GaloisClass> galois;
  std::optional<GaloisClass> oracle_galois;
  Family family = Family::NotApplicable;

  std::string monogenic_label() const {
    if (!irreducibility.irreducible()) return "reducible";
    if (!monogenicity) return "unsupported";
    return to_string(monogenicity->status);
  }
};

/// Closed-form record; with_oracle also fills the Dedekind and resolvent-cubic verdicts.
inline ClassificationRecord classify_one(const ReciprocalQuartic& q, bool with_oracle = false) {
  ClassificationRecord r;
  r.q = q;
  r.w = invariants(q);
  r.irreducibility = irreducible_closed_form(q);
  if (r.irreducibility.irreducible()) {
    if (q.A != 0) r.monogenicity = monogenic_closed_form(q);
    r.galois = lemma_ap_class(q);
  } else {
    r.monogenicity = MonogenicityVerdict::reducible();
  }
  r.family = family(q);
  if (with_oracle) {
    const IntPoly f = q.expand();
    r.oracle_monogenicity = monogenic_oracle(f);
    if (quartic_irreducible(f).irreducible()) r.oracle_galois = galois_group(f);
  }
  return r;
}

inline nlohmann::ordered_json int_json(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

inline nlohmann::ordered_json to_json(const ClassificationRecord& r) {
  nlohmann::ordered_json j;
  j["A"] = r.q.A;
  j["B"] = r.q.B;
  j["W1"] = int_json(r.w.W1);
  j["W2"] = int_json(r.w.W2);
  j["W3"] = int_json(r.w.W3);
  j["W"] = int_json(r.w.W);
  j["disc"] = int_json(r.w.disc);
  j["irreducible"] = r.irreducibility.irreducible();
  j["monogenic"] = r.monogenic_label();
  j["witness_prime"] = (r.monogenicity && r.monogenicity->witness) ? int_json(*r.monogenicity->witness) : nullptr;
  j["galois"] = r.galois ? nlohmann::ordered_json(to_string(*r.galois)) : nlohmann::ordered_json(nullptr);
  j["family"] = r.family != Family::NotApplicable ? nlohmann::ordered_json(to_string(r.family)) : nlohmann::ordered_json(nullptr);
  return j;
}

inline constexpr const char* kCsvHeader = "A,B,W1,W2,W3,W,disc,irreducible,monogenic,witness_prime,galois,family";

/// One CSV row in header order; null fields are empty.
inline std::string to_csv_row(const ClassificationRecord& r) {
  std::string row = std::to_string(r.q.A) + "," + std::to_string(r.q.B) + "," + r.w.W1.get_str() + "," +
                    r.w.W2.get_str() + "," + r.w.W3.get_str() + "," + r.w.W.get_str() + "," + r.w.disc.get_str() + ",";
  row += r.irreducibility.irreducible() ? "true," : "false,";
  row += r.monogenic_label() + ",";
  if (r.monogenicity && r.monogenicity->witness) row += r.monogenicity->witness->get_str();
  row += ",";
  if (r.galois) row += to_string(*r.galois);
  row += ",";
  if (r.family != Family::NotApplicable) row += to_string(r.family);
  return row;
}

/// Per-prime Dedekind reports and the resolvent-cubic trace, for --explain.
inline nlohmann::ordered_json explain(const ReciprocalQuartic& q) {
  const IntPoly f = q.expand();
  nlohmann::ordered_json j;
  j["polynomial"] = to_string(f);
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& rep : dedekind_reports(f)) reports.push_back(to_json(rep));
  j["dedekind"] = reports;
  const auto oracle = monogenic_oracle(f);
  j["oracle_monogenic"] = to_string(oracle.status);
  j["oracle_witness"] = oracle.witness ? int_json(*oracle.witness) : nlohmann::ordered_json(nullptr);
  if (quartic_irreducible(f).irreducible()) {
    const auto t = galois_trace(f);
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const auto& r : t.resolvent_roots) roots.push_back(int_json(r));
    j["resolvent"] = {{"cubic", to_string(t.resolvent, 'y')},
                      {"rational_roots", roots},
                      {"disc", int_json(t.disc)},
                      {"galois", to_string(t.group)}};
  } else {
    j["resolvent"] = nullptr;
  }
  return j;
}

enum class OutputFormat { Csv, Json, Jsonl };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "jsonl") return OutputFormat::Jsonl;
  throw std::invalid_argument("unknown output format '" + s + "' (expected csv, json or jsonl)");
}

inline void write_records(std::ostream& out, const std::vector<ClassificationRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      out << kCsvHeader << '\n';
      for (const auto& r : records) out << to_csv_row(r) << '\n';
      break;
    case OutputFormat::Jsonl:
      for (const auto& r : records) out << to_json(r).dump() << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      out << arr.dump(1) << '\n';
      break;
    }
  }
}

struct CampaignConfig {
  std::int64_t a_min = -10, a_max = 10;
  std::int64_t b_min = -10, b_max = 10;
  bool run_oracle = false;
  bool run_frobenius = false;
  unsigned frobenius_samples = 50;
  std::string out_path;
  OutputFormat format = OutputFormat::Csv;
  unsigned workers = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on an empty range or zero workers.
  void validate() const {
    if (a_min > a_max) throw std::invalid_argument("empty A range");
    if (b_min > b_max) throw std::invalid_argument("empty B range");
    if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  }
};

struct Mismatch {
  ReciprocalQuartic q;
  std::string kind;  // irreducible | monogenic | witness | galois | frobenius
  std::string closed_form;
  std::string oracle;
};

struct ScanSummary {
  std::size_t cells = 0;
  std::size_t irreducible = 0;
  std::map<std::string, std::size_t> monogenic;
  std::map<std::string, std::size_t> galois;
  std::map<std::string, std::size_t> family;
  std::size_t frobenius_checked = 0;
};

struct ScanResult {
  std::vector<ClassificationRecord> records;  // sorted by (A, B)
  ScanSummary summary;
  std::vector<Mismatch> mismatches;
};

namespace detail {

inline void cross_check(const ClassificationRecord& r, const CampaignConfig& cfg, std::vector<Mismatch>& out) {
  const IntPoly f = r.q.expand();
  const bool generic_irreducible = quartic_irreducible(f).irreducible();
  if (generic_irreducible != r.irreducibility.irreducible())
    out.push_back({r.q, "irreducible", r.irreducibility.irreducible() ? "true" : "false",
                   generic_irreducible ? "true" : "false"});

  if (r.monogenicity && r.oracle_monogenicity && r.monogenicity->status != r.oracle_monogenicity->status)
    out.push_back({r.q, "monogenic", to_string(r.monogenicity->status), to_string(r.oracle_monogenicity->status)});
  if (r.monogenicity && r.monogenicity->witness) {
    const auto p = to_uint64(*r.monogenicity->witness);
    if (!dedekind_at(f, p).p_divides_index)
      out.push_back({r.q, "witness", r.monogenicity->witness->get_str(), "p does not divide the index"});
  }

  if (r.galois && r.oracle_galois && *r.galois != *r.oracle_galois)
    out.push_back({r.q, "galois", to_string(*r.galois), to_string(*r.oracle_galois)});
  if (r.oracle_galois && (*r.oracle_galois == GaloisClass::S4 || *r.oracle_galois == GaloisClass::A4))
    out.push_back({r.q, "galois", "reciprocal", to_string(*r.oracle_galois)});

  if (cfg.run_frobenius && generic_irreducible) {
    const auto audit = frobenius_audit(f, cfg.frobenius_samples);
    for (const auto& pattern : audit.contradictions)
      out.push_back({r.q, "frobenius", to_string(audit.group), pattern_string(pattern)});
  }
}

}  // namespace detail

/// Classifies every cell of the rectangle. Rows of A are dealt round-robin to the workers and
/// merged back in (A, B) order, so output does not depend on the worker count.
inline ScanResult scan(const CampaignConfig& cfg) {
  cfg.validate();
  const std::int64_t rows = cfg.a_max - cfg.a_min + 1;
  const unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(cfg.workers, rows));
  std::vector<std::vector<ClassificationRecord>> shard_records(workers);
  std::vector<std::vector<Mismatch>> shard_mismatches(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](unsigned w) {
    try {
      for (std::int64_t A = cfg.a_min + w; A <= cfg.a_max; A += workers) {
        for (std::int64_t B = cfg.b_min; B <= cfg.b_max; ++B) {
          auto rec = classify_one({A, B}, cfg.run_oracle);
          if (cfg.run_oracle) detail::cross_check(rec, cfg, shard_mismatches[w]);
          shard_records[w].push_back(std::move(rec));
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScanResult result;
  for (unsigned w = 0; w < workers; ++w) {
    for (auto& r : shard_records[w]) result.records.push_back(std::move(r));
    for (auto& m : shard_mismatches[w]) result.mismatches.push_back(std::move(m));
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const ClassificationRecord& a, const ClassificationRecord& b) { return a.q < b.q; });
  std::stable_sort(result.mismatches.begin(), result.mismatches.end(),
                   [](const Mismatch& a, const Mismatch& b) { return a.q < b.q; });

  auto& s = result.summary;
  s.cells = result.records.size();
  for (const auto& r : result.records) {
    if (r.irreducibility.irreducible()) ++s.irreducible;
    ++s.monogenic[r.monogenic_label()];
    if (r.galois) ++s.galois[to_string(*r.galois)];
    if (r.family != Family::NotApplicable) ++s.family[to_string(r.family)];
    if (cfg.run_frobenius && cfg.run_oracle && r.irreducibility.irreducible()) ++s.frobenius_checked;
  }
  return result;
}

inline nlohmann::ordered_json to_json(const ScanSummary& s, const std::vector<Mismatch>& mismatches, const CampaignConfig& cfg) {
  nlohmann::ordered_json mm = nlohmann::ordered_json::array();
  for (const auto& m : mismatches)
    mm.push_back({{"A", m.q.A}, {"B", m.q.B}, {"kind", m.kind}, {"closed_form", m.closed_form}, {"oracle", m.oracle}});
  return {{"cells", s.cells},
          {"irreducible", s.irreducible},
          {"monogenic", s.monogenic},
          {"galois", s.galois},
          {"family", s.family},
          {"oracle", cfg.run_oracle},
          {"frobenius_checked", s.frobenius_checked},
          {"seed", cfg.seed},
          {"mismatches", mm}};
}

/// Monogenic f with A, B odd and W a square inside |A|, |B| <= bound, sorted by (A, B).
/// Cheap filters first: parity, then W >= 0 and square, then the full closed form.
inline std::vector<ReciprocalQuartic> find_f5(std::int64_t bound) {
  if (bound < 1) throw std::domain_error("find_f5: bound must be positive");
  std::vector<ReciprocalQuartic> out;
  const std::int64_t start = -bound + ((bound % 2 == 0) ? 1 : 0);
  for (std::int64_t A = start; A <= bound; A += 2) {
    for (std::int64_t B = start; B <= bound; B += 2) {
      const __int128 w1 = static_cast<__int128>(B) + 2 - 2 * static_cast<__int128>(A);
      const __int128 w2 = static_cast<__int128>(B) + 2 + 2 * static_cast<__int128>(A);
      const __int128 w3 = static_cast<__int128>(A) * A - 4 * static_cast<__int128>(B) + 8;
      if (w1 == 0 || w2 == 0 || w3 == 0) continue;
      const int sign = (w1 < 0 ? -1 : 1) * (w2 < 0 ? -1 : 1) * (w3 < 0 ? -1 : 1);
      if (sign < 0) continue;
      const ReciprocalQuartic q{A, B};
      if (!numtheory::is_perfect_square(invariants(q).W)) continue;
      if (monogenic_closed_form(q).status == Monogenicity::Monogenic) out.push_back(q);
    }
  }
  return out;
}

enum class AuditSelector { B0, F1, F2, F3, F4, F5 };

inline AuditSelector parse_selector(const std::string& s) {
  if (s == "B0") return AuditSelector::B0;
  if (s == "F1") return AuditSelector::F1;
  if (s == "F2") return AuditSelector::F2;
  if (s == "F3") return AuditSelector::F3;
  if (s == "F4") return AuditSelector::F4;
  if (s == "F5") return AuditSelector::F5;
  throw std::invalid_argument("unknown family selector '" + s + "' (expected B0, F1..F5)");
}

struct DistinctnessReport {
  std::vector<ReciprocalQuartic> members;
  std::size_t pairs_compared = 0;
  std::vector<std::pair<ReciprocalQuartic, ReciprocalQuartic>> inconclusive;
  std::vector<std::pair<ReciprocalQuartic, ReciprocalQuartic>> unexpected;  // inconclusive and not a mirror pair

  bool clean() const { return unexpected.empty(); }
};

/// Members: B0 -> monogenic (A, 0) for A in [lo, hi]; F1..F4 -> admissible subfamily witnesses for
/// k in [lo, hi] (clamped to the family's lower bound); F5 -> the F5 search at bound max(hi, 31).
inline DistinctnessReport distinctness_audit(AuditSelector sel, std::int64_t lo, std::int64_t hi) {
  DistinctnessReport rep;
  switch (sel) {
    case AuditSelector::B0:
      for (std::int64_t A = lo; A <= hi; ++A) {
        if (A == 0 || A == 1 || A == -1) continue;
        if (monogenic_closed_form({A, 0}).status == Monogenicity::Monogenic) rep.members.push_back({A, 0});
      }
      break;
    case AuditSelector::F5:
      rep.members = find_f5(std::max<std::int64_t>(hi, 31));
      break;
    default: {
      const int idx = static_cast<int>(sel);  // F1 -> 1
      for (std::int64_t k = std::max(lo, family_witness_min_k(idx)); k <= hi; ++k) {
        if (auto q = family_witness(idx, k)) rep.members.push_back(*q);
      }
    }
  }
  const std::size_t n = rep.members.size();
  rep.pairs_compared = n * (n - 1) / 2;
  std::map<Int, std::vector<ReciprocalQuartic>> by_disc;
  for (const auto& q : rep.members) by_disc[invariants(q).disc].push_back(q);
  for (const auto& [disc, group] : by_disc) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        rep.inconclusive.emplace_back(group[i], group[j]);
        if (!(mirror(group[i]) == group[j])) rep.unexpected.emplace_back(group[i], group[j]);
      }
    }
  }
  return rep;
}

}  // namespace monoquartic
