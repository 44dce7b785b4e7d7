// monoquartic: command-line front end for classifying reciprocal quartics.
//
// Exit codes: 0 success, 1 configuration or input error, 2 cross-validation mismatch.

#include "monoquartic/monoquartic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace mq = monoquartic;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kMismatch = 2;

void print_record(const mq::ClassificationRecord& r) {
  std::cout << "f(x)        = " << mq::to_string(r.q.expand()) << "\n"
            << "(A, B)      = " << mq::to_string(r.q) << "\n"
            << "W1, W2, W3  = " << r.w.W1 << ", " << r.w.W2 << ", " << r.w.W3 << "\n"
            << "W           = " << r.w.W << "\n"
            << "disc        = " << r.w.disc << "\n"
            << "irreducible = " << (r.irreducibility.irreducible() ? "yes" : "no");
  switch (r.irreducibility.kind) {
    case mq::IrreducibilityVerdict::Kind::LinearFactor:
      std::cout << " (root " << r.irreducibility.root << ")";
      break;
    case mq::IrreducibilityVerdict::Kind::QuadraticSplit:
      std::cout << " ((" << mq::to_string(r.irreducibility.first) << ")(" << mq::to_string(r.irreducibility.second)
                << "))";
      break;
    default:
      break;
  }
  std::cout << "\nmonogenic   = " << r.monogenic_label();
  if (r.monogenicity && r.monogenicity->witness) std::cout << " (index divisible by " << *r.monogenicity->witness << ")";
  std::cout << "\ngalois      = " << (r.galois ? mq::to_string(*r.galois) : "-") << "\n"
            << "family      = " << (r.family != mq::Family::NotApplicable ? mq::to_string(r.family) : "-") << "\n";
}

int run_classify(std::optional<std::int64_t> a, std::optional<std::int64_t> b, const std::string& poly, bool explain,
                 bool json) {
  mq::ReciprocalQuartic q;
  if (!poly.empty()) {
    auto parsed = mq::as_reciprocal(mq::parse_poly(poly));
    if (!parsed) {
      std::cerr << "error: '" << poly << "' is not of the form x^4 + A*x^3 + B*x^2 + A*x + 1\n";
      return kConfigError;
    }
    q = *parsed;
  } else if (a && b) {
    q = {*a, *b};
  } else {
    std::cerr << "error: classify needs --A and --B, or --poly\n";
    return kConfigError;
  }
  const auto record = mq::classify_one(q);
  if (json) {
    auto j = mq::to_json(record);
    if (explain) j["explain"] = mq::explain(q);
    std::cout << j.dump(2) << "\n";
  } else {
    print_record(record);
    if (explain) std::cout << mq::explain(q).dump(2) << "\n";
  }
  return kOk;
}

int run_scan(mq::CampaignConfig cfg, const std::string& format) {
  cfg.format = mq::parse_format(format);
  const auto result = mq::scan(cfg);
  const auto summary = mq::to_json(result.summary, result.mismatches, cfg);
  if (cfg.out_path.empty()) {
    mq::write_records(std::cout, result.records, cfg.format);
    std::cerr << summary.dump(2) << "\n";
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
    mq::write_records(out, result.records, cfg.format);
    out.close();
    if (!out) throw std::runtime_error("failed writing output file '" + cfg.out_path + "'");
    std::cout << summary.dump(2) << "\n";
  }
  return result.mismatches.empty() ? kOk : kMismatch;
}

int run_find_f5(std::int64_t bound) {
  for (const auto& q : mq::find_f5(bound)) {
    std::cout << mq::to_string(q) << "  " << mq::to_string(q.expand()) << "  disc=" << mq::invariants(q).disc << "\n";
  }
  return kOk;
}

int run_audit(const std::string& family, std::int64_t lo, std::int64_t hi) {
  const auto rep = mq::distinctness_audit(mq::parse_selector(family), lo, hi);
  std::cout << "members:            " << rep.members.size() << "\n"
            << "pairs compared:     " << rep.pairs_compared << "\n"
            << "inconclusive pairs: " << rep.inconclusive.size() << "\n";
  for (const auto& [x, y] : rep.inconclusive) {
    const bool is_mirror = mq::mirror(x) == y;
    std::cout << "  " << mq::to_string(x) << " ~ " << mq::to_string(y) << (is_mirror ? "  (mirror pair)" : "") << "\n";
  }
  std::cout << (rep.clean() ? "clean\n" : "UNEXPECTED equal discriminants\n");
  return rep.clean() ? kOk : kMismatch;
}

int run_witness(int family, std::int64_t k) {
  const auto w = mq::family_witness_check(family, k);
  std::cout << "candidate:   " << mq::to_string(w.candidate) << "  " << mq::to_string(w.candidate.expand()) << "\n"
            << "certificate: " << w.certificate << (w.certificate_squarefree ? " (squarefree)" : " (not squarefree)")
            << "\n"
            << "member:      " << (w.certificate_squarefree ? "yes" : "absent") << "\n"
            << "classifier:  " << mq::to_string(w.classified) << "\n";
  if (w.divergent()) {
    std::cout << "FINDING: certificate admits the candidate but the classifier does not\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monogenicity and Galois groups of reciprocal quartics x^4 + A x^3 + B x^2 + A x + 1"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "classify a single (A, B)");
  std::optional<std::int64_t> a, b;
  std::string poly;
  bool explain_flag = false, json_flag = false;
  classify->add_option("--A", a, "coefficient A");
  classify->add_option("--B", b, "coefficient B");
  classify->add_option("--poly", poly, "polynomial text, e.g. \"x^4 + 9*x^3 + 19*x^2 + 9*x + 1\"");
  classify->add_flag("--explain", explain_flag, "attach Dedekind reports and the resolvent-cubic trace");
  classify->add_flag("--json", json_flag, "emit JSON");

  auto* scan = app.add_subcommand("scan", "classify every (A, B) in a rectangle");
  mq::CampaignConfig cfg;
  std::string format = "csv";
  scan->add_option("--A-min", cfg.a_min)->required();
  scan->add_option("--A-max", cfg.a_max)->required();
  scan->add_option("--B-min", cfg.b_min)->required();
  scan->add_option("--B-max", cfg.b_max)->required();
  scan->add_flag("--oracle", cfg.run_oracle, "cross-validate against the Dedekind and resolvent-cubic oracles");
  scan->add_flag("--frobenius", cfg.run_frobenius, "also audit Frobenius patterns (needs --oracle)");
  scan->add_option("--frobenius-samples", cfg.frobenius_samples, "unramified primes per polynomial");
  scan->add_option("--out", cfg.out_path, "record file (stdout if omitted)");
  scan->add_option("--format", format, "csv, json or jsonl");
  scan->add_option("--workers", cfg.workers, "worker threads");
  scan->add_option("--seed", cfg.seed, "recorded in the summary");

  auto* f5 = app.add_subcommand("find-f5", "search for monogenic f with A, B odd and W a square");
  std::int64_t bound = 1000;
  f5->add_option("--bound", bound, "search |A|, |B| <= bound");

  auto* audit = app.add_subcommand("audit", "pairwise discriminant distinctness audit");
  std::string family = "B0";
  std::int64_t k_min = 2, k_max = 200;
  audit->add_option("--family", family, "B0, F1, F2, F3, F4 or F5")->required();
  audit->add_option("--k-min", k_min, "lower parameter (A for B0, k for F1..F4)");
  audit->add_option("--k-max", k_max, "upper parameter");

  auto* witness = app.add_subcommand("witness", "evaluate the explicit member F_{i,k}");
  int witness_family = 1;
  std::int64_t k = 0;
  witness->add_option("--family", witness_family, "1..4")->required();
  witness->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*classify) return run_classify(a, b, poly, explain_flag, json_flag);
    if (*scan) return run_scan(cfg, format);
    if (*f5) return run_find_f5(bound);
    if (*audit) return run_audit(family, k_min, k_max);
    if (*witness) return run_witness(witness_family, k);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}
