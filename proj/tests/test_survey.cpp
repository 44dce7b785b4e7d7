#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace monoquartic;

namespace {

using RQ = ReciprocalQuartic;

std::string render(const ScanResult& r, OutputFormat format) {
  std::ostringstream out;
  write_records(out, r.records, format);
  return out.str();
}

CampaignConfig box(std::int64_t lo, std::int64_t hi) {
  CampaignConfig cfg;
  cfg.a_min = cfg.b_min = lo;
  cfg.a_max = cfg.b_max = hi;
  return cfg;
}

}  // namespace

TEST(ClassifyOne, Examples) {
  const auto a = classify_one({1, 1});
  EXPECT_EQ(a.monogenic_label(), "yes");
  EXPECT_EQ(a.galois, GaloisClass::C4);
  EXPECT_EQ(a.family, Family::F5);
  EXPECT_EQ(a.w.disc, 125);

  const auto b = classify_one({2, 0});
  EXPECT_EQ(b.monogenic_label(), "yes");
  EXPECT_EQ(b.galois, GaloisClass::D4);
  EXPECT_EQ(b.family, Family::NotApplicable);
  EXPECT_EQ(b.w.disc, -1728);

  const auto c = classify_one({2, 3});
  EXPECT_EQ(c.monogenic_label(), "reducible");
  EXPECT_FALSE(c.galois);

  EXPECT_EQ(classify_one({0, 5}).monogenic_label(), "unsupported");
  EXPECT_EQ(classify_one({0, 1}).monogenic_label(), "reducible");
}

TEST(ClassifyOne, OracleFields) {
  const auto r = classify_one({8, 0}, true);
  ASSERT_TRUE(r.oracle_monogenicity);
  EXPECT_EQ(r.oracle_monogenicity->status, Monogenicity::NotMonogenic);
  EXPECT_EQ(*r.oracle_monogenicity->witness, 3);
  EXPECT_EQ(r.oracle_galois, GaloisClass::D4);
  EXPECT_FALSE(classify_one({8, 0}).oracle_monogenicity);
}

TEST(Records, CsvRows) {
  EXPECT_EQ(to_csv_row(classify_one({9, 19})), "9,19,3,39,13,1521,19773,true,yes,,C4,F5");
  EXPECT_EQ(to_csv_row(classify_one({8, 0})), "8,0,-14,18,72,-18144,-1306368,true,no,3,D4,");
  EXPECT_EQ(to_csv_row(classify_one({2, 3})), "2,3,1,9,0,0,0,false,reducible,,,");
}

TEST(Records, JsonKeysFollowSchemaOrder) {
  const auto j = to_json(classify_one({8, 0}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"A", "B", "W1", "W2", "W3", "W", "disc", "irreducible", "monogenic",
                                            "witness_prime", "galois", "family"}));
  EXPECT_EQ(j["witness_prime"], 3);
  EXPECT_TRUE(j["family"].is_null());
  EXPECT_EQ(j["disc"], -1306368);
}

TEST(Records, HugeValuesBecomeStrings) {
  const auto j = to_json(classify_one({3000000000LL, 1}));
  EXPECT_TRUE(j["disc"].is_string());
  EXPECT_EQ(j["disc"].get<std::string>(), invariants({3000000000LL, 1}).disc.get_str());
}

TEST(Explain, ContainsReportsAndTrace) {
  const auto j = explain({8, 0});
  EXPECT_EQ(j["polynomial"], "x^4 + 8*x^3 + 8*x + 1");
  EXPECT_EQ(j["oracle_monogenic"], "no");
  EXPECT_EQ(j["oracle_witness"], 3);
  ASSERT_FALSE(j["dedekind"].empty());
  EXPECT_EQ(j["resolvent"]["galois"], "D4");
  EXPECT_TRUE(explain({2, 3})["resolvent"].is_null());
}

TEST(Formats, Parse) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("jsonl"), OutputFormat::Jsonl);
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Scan, ConfigErrors) {
  auto cfg = box(0, 5);
  cfg.a_min = 6;
  EXPECT_THROW(scan(cfg), std::invalid_argument);
  cfg = box(0, 5);
  cfg.b_max = -1;
  EXPECT_THROW(scan(cfg), std::invalid_argument);
  cfg = box(0, 5);
  cfg.workers = 0;
  EXPECT_THROW(scan(cfg), std::invalid_argument);
}

TEST(Scan, FrozenCountsOnSmallBox) {
  // counts cross-checked against an independent maximal-order computation
  auto cfg = box(-10, 10);
  cfg.run_oracle = true;
  const auto r = scan(cfg);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(r.summary.cells, 441u);
  EXPECT_EQ(r.summary.irreducible, 363u);
  EXPECT_EQ(r.summary.monogenic.at("yes"), 172u);
  EXPECT_EQ(r.summary.monogenic.at("no"), 176u);
  EXPECT_EQ(r.summary.monogenic.at("reducible"), 78u);
  EXPECT_EQ(r.summary.monogenic.at("unsupported"), 15u);
  EXPECT_EQ(r.summary.galois.at("C4"), 4u);
  EXPECT_EQ(r.summary.galois.at("D4"), 338u);
}

TEST(Scan, OutputIndependentOfWorkerCount) {
  auto cfg = box(-15, 15);
  const std::string csv = render(scan(cfg), OutputFormat::Csv);
  const std::string jsonl = render(scan(cfg), OutputFormat::Jsonl);
  for (unsigned w : {2u, 3u, 8u, 64u}) {
    cfg.workers = w;
    const auto r = scan(cfg);
    EXPECT_EQ(render(r, OutputFormat::Csv), csv) << w;
    EXPECT_EQ(render(r, OutputFormat::Jsonl), jsonl) << w;
  }
}

TEST(Scan, RecordsSortedAndComplete) {
  auto cfg = box(-4, 4);
  cfg.workers = 3;
  const auto r = scan(cfg);
  ASSERT_EQ(r.records.size(), 81u);
  for (std::size_t i = 1; i < r.records.size(); ++i) ASSERT_LT(r.records[i - 1].q, r.records[i].q);
  const std::string csv = render(r, OutputFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 82);
  const auto arr = nlohmann::ordered_json::parse(render(r, OutputFormat::Json));
  EXPECT_EQ(arr.size(), 81u);
}

TEST(Scan, SummaryJson) {
  auto cfg = box(-3, 3);
  cfg.seed = 17;
  const auto r = scan(cfg);
  const auto j = to_json(r.summary, r.mismatches, cfg);
  EXPECT_EQ(j["cells"], 49);
  EXPECT_EQ(j["seed"], 17);
  EXPECT_TRUE(j["mismatches"].empty());
}

TEST(FindF5, Examples) {
  const std::vector<RQ> six{{-11, 31}, {-9, 19}, {-1, 1}, {1, 1}, {9, 19}, {11, 31}};
  EXPECT_EQ(find_f5(1000), six);
  EXPECT_EQ(find_f5(31), six);
  EXPECT_EQ(find_f5(5), (std::vector<RQ>{{-1, 1}, {1, 1}}));
  EXPECT_THROW(find_f5(0), std::domain_error);
}

TEST(FindF5, MatchesExhaustiveClassification) {
  const std::int64_t bound = 60;
  std::vector<RQ> brute;
  for (std::int64_t A = -bound; A <= bound; ++A) {
    for (std::int64_t B = -bound; B <= bound; ++B) {
      if (family({A, B}) == Family::F5) brute.push_back({A, B});
    }
  }
  EXPECT_EQ(find_f5(bound), brute);
}

TEST(Audit, Selectors) {
  EXPECT_EQ(parse_selector("B0"), AuditSelector::B0);
  EXPECT_EQ(parse_selector("F3"), AuditSelector::F3);
  EXPECT_THROW(parse_selector("F6"), std::invalid_argument);
}

TEST(Audit, SingleMemberIsVacuouslyClean) {
  const auto rep = distinctness_audit(AuditSelector::B0, 2, 2);
  ASSERT_EQ(rep.members.size(), 1u);
  EXPECT_EQ(rep.pairs_compared, 0u);
  EXPECT_TRUE(rep.clean());
  EXPECT_TRUE(distinctness_audit(AuditSelector::F1, 3, 3).members.empty());
}

TEST(Audit, F5OnlyMirrorPairsCoincide) {
  const auto rep = distinctness_audit(AuditSelector::F5, 0, 31);
  EXPECT_EQ(rep.members.size(), 6u);
  EXPECT_EQ(rep.inconclusive.size(), 3u);
  EXPECT_TRUE(rep.clean());
}

TEST(ScanProperty, WitnessesDivideTheIndex) {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 300; ++i) {
    const RQ q{testsupport::uniform(rng, -2000, 2000), testsupport::uniform(rng, -2000, 2000)};
    if (q.A == 0) continue;
    const auto r = classify_one(q);
    if (!r.monogenicity || !r.monogenicity->witness) continue;
    ASSERT_TRUE(dedekind_at(q.expand(), to_uint64(*r.monogenicity->witness)).p_divides_index) << to_string(q);
  }
}
