#include <doctest.h>

#include <filesystem>

#include "signedpat/census.hpp"
#include "signedpat/symmetry.hpp"

using namespace signedpat;

namespace {

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("census at n = 6") {
  const CensusTable table = run_census(6);
  REQUIRE(table.records.size() == 58);
  std::size_t members = 0;
  for (const CensusRecord& r : table.records) {
    members += r.members.size();
    CHECK(r.sequence.size() == 7);
    CHECK(r.verification != VerificationStatus::mismatch);
    CHECK(r.formula_ids.empty() == (r.verification == VerificationStatus::enumeration_only));
  }
  CHECK(members == 256);
  CHECK_FALSE(table.metadata.timing_seconds);
}

TEST_CASE("Wilf classes") {
  CensusTable table = run_census(6);
  const auto classes = wilf_classes(table);
  auto class_of = [&](PatternSet set) {
    const PatternSet rep = canonical_representative(set);
    for (const CensusRecord& r : table.records)
      if (r.representative == rep)
        return r.wilf_class;
    return 0;
  };
  CHECK(class_of(pattern_set({"12"})) == class_of(pattern_set({"1-2"})));
  std::set<int> pairs;
  for (const CensusRecord& r : table.records)
    if (r.representative.size() == 2)
      pairs.insert(r.wilf_class);
  CHECK(pairs.size() == 4);
  CHECK(classes.front().front() == 1);
}

TEST_CASE("json round-trip and csv schema") {
  CensusOptions options;
  options.timing = true;
  const CensusTable table = run_census(6, options);
  CHECK(table.metadata.timing_seconds);
  CHECK(parse_census_json(export_table(table, ExportFormat::json)) == table);

  const std::string csv = export_table(table, ExportFormat::csv);
  CHECK(csv.rfind("orbit_id,representative,size,b_0,b_1,b_2,b_3,b_4,b_5,b_6,formula_ids,verification,wilf_class\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 59);
}

TEST_CASE("schema violations") {
  for (const char* bad : {"", "[]", "{\"n_max\": 1}", "{\"n_max\": 0, \"tool_version\": \"x\", \"records\": 3}",
                          R"({"n_max":0,"tool_version":"x","records":[{"orbit_id":1,"representative":[[1,3]]}]})"}) {
    CAPTURE(bad);
    try {
      parse_census_json(bad);
      FAIL("expected SchemaMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SchemaMismatch);
    }
  }
  try {
    load_cache(temp_path("signedpat_missing_dir") / "none.json");
    FAIL("expected IoFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoFailure);
  }
}

TEST_CASE("cache is reused and extended") {
  const auto path = temp_path("signedpat_test_cache.json");
  std::filesystem::remove(path);
  CensusOptions options;
  options.cache = path;

  const CensusTable small = run_census(4, options);
  CHECK(load_cache(path) == small);

  // A doctored cache value proves the stored prefix is reused rather than recomputed.
  CensusTable doctored = small;
  doctored.records[1].sequence[4] = 999;
  write_file(path, export_table(doctored, ExportFormat::json));
  const CensusTable extended = run_census(6, options);
  CHECK(extended.records[1].sequence[4] == 999);
  CHECK(load_cache(path).n_max == 6);

  std::filesystem::remove(path);
  CHECK(run_census(6, options) != extended);
  std::filesystem::remove(path);
}

TEST_CASE("verification report flags a mutated formula") {
  const SequenceTable seq = enumerate_sequences(5);
  CHECK(verify_registry(seq).all_passed());
  const VerificationReport mutated = verify_registry(seq, [](FormulaId id, int n) {
    BigInt v = eval_formula(id, n);
    return id == FormulaId::EQ11 ? BigInt(v + 1) : v;
  });
  CHECK(mutated.mismatch_count() == 1);
  for (const EntryVerification& e : mutated.entries)
    if (!e.passed())
      CHECK(e.mismatches.front().n <= 2);

  for (const ClaimCheck& c : verify_registry(seq).superseded)
    CHECK(c.refuted());
}
