#include "signedpat/census.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "signedpat/symmetry.hpp"

namespace signedpat {

std::string_view to_string(VerificationStatus status) {
  switch (status) {
  case VerificationStatus::verified: return "verified";
  case VerificationStatus::mismatch: return "mismatch";
  case VerificationStatus::enumeration_only: return "enumeration_only";
  }
  return "unknown";
}

VerificationStatus parse_verification_status(std::string_view text) {
  if (text == "verified")
    return VerificationStatus::verified;
  if (text == "mismatch")
    return VerificationStatus::mismatch;
  if (text == "enumeration_only")
    return VerificationStatus::enumeration_only;
  throw Error(ErrorCode::SchemaMismatch, "unknown verification status '" + std::string(text) + "'");
}

SequenceTable enumerate_sequences(int n_max, const EnumerationOptions& options) {
  check_n(n_max, options.cap);
  SequenceTable out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n)
    out.push_back(counts_all_subsets(n, options));
  return out;
}

bool VerificationReport::all_passed() const {
  return mismatch_count() == 0;
}

std::size_t VerificationReport::mismatch_count() const {
  return static_cast<std::size_t>(
    std::count_if(entries.begin(), entries.end(), [](const EntryVerification& e) { return !e.passed(); }));
}

VerificationReport verify_registry(const SequenceTable& sequences, const FormulaEvaluator& evaluator) {
  VerificationReport report;
  report.n_max = static_cast<int>(sequences.size()) - 1;
  for (const RegistryEntry& e : registry()) {
    EntryVerification v;
    v.entry = &e;
    for (int n = 0; n <= report.n_max; ++n) {
      const BigInt expected = evaluator(e.formula, n);
      const BigInt& actual = sequences[static_cast<std::size_t>(n)][e.canonical_set.mask()];
      if (n < e.min_n) {
        if (expected == actual)
          v.holds_below.push_back(n);
      } else if (expected != actual) {
        v.mismatches.push_back({n, expected, actual});
      }
    }
    report.entries.push_back(std::move(v));
  }
  for (const SupersededClaim& claim : superseded_claims()) {
    ClaimCheck check;
    check.claim = &claim;
    for (int n = std::max(claim.min_n, 0); n <= report.n_max; ++n) {
      const BigInt expected = claim.value(n);
      const BigInt& actual = sequences[static_cast<std::size_t>(n)][claim.set.mask()];
      if (expected != actual) {
        check.first_counterexample = Mismatch{n, expected, actual};
        break;
      }
    }
    report.superseded.push_back(std::move(check));
  }
  return report;
}

VerificationReport verify_registry(int n_max, const EnumerationOptions& options, const FormulaEvaluator& evaluator) {
  return verify_registry(enumerate_sequences(n_max, options), evaluator);
}

std::vector<std::vector<int>> wilf_classes(CensusTable& table) {
  std::vector<std::vector<int>> classes;
  std::map<std::vector<BigInt>, std::size_t> by_sequence;
  std::vector<CensusRecord*> ordered;
  for (CensusRecord& r : table.records)
    ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const CensusRecord* a, const CensusRecord* b) { return a->orbit_id < b->orbit_id; });
  for (CensusRecord* r : ordered) {
    auto [it, inserted] = by_sequence.emplace(r->sequence, classes.size());
    if (inserted)
      classes.emplace_back();
    classes[it->second].push_back(r->orbit_id);
    r->wilf_class = static_cast<int>(it->second) + 1;
  }
  return classes;
}

namespace {

std::map<std::uint8_t, std::vector<BigInt>> cached_sequences(const std::filesystem::path& path) {
  std::map<std::uint8_t, std::vector<BigInt>> out;
  if (!std::filesystem::exists(path))
    return out;
  const CensusTable cached = load_cache(path);
  for (const CensusRecord& r : cached.records)
    out.emplace(r.representative.mask(), r.sequence);
  return out;
}

std::string describe(const EntryVerification& v) {
  std::string text;
  for (const Mismatch& m : v.mismatches) {
    if (!text.empty())
      text += "; ";
    text += v.entry->paper_name + " " + std::string(to_string(v.entry->formula)) + " n=" + std::to_string(m.n) +
            ": formula " + m.expected.str() + ", enumeration " + m.actual.str();
  }
  return text;
}

} // namespace

CensusTable run_census(int n_max, const CensusOptions& options) {
  check_n(n_max, options.enumeration.cap);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Orbit>& orbits = all_orbits();

  auto cache = options.cache ? cached_sequences(*options.cache) : std::map<std::uint8_t, std::vector<BigInt>>{};
  int reusable = -1; // largest n present for every orbit in the cache
  if (cache.size() == orbits.size()) {
    reusable = n_max;
    for (const auto& [rep, seq] : cache)
      reusable = std::min(reusable, static_cast<int>(seq.size()) - 1);
  }

  SequenceTable sequences(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    if (n <= reusable) {
      for (const Orbit& orbit : orbits)
        for (PatternSet m : orbit.members)
          sequences[static_cast<std::size_t>(n)][m.mask()] =
            cache.at(orbit.representative.mask())[static_cast<std::size_t>(n)];
    } else {
      sequences[static_cast<std::size_t>(n)] = counts_all_subsets(n, options.enumeration);
    }
  }

  const VerificationReport report = verify_registry(sequences, options.evaluator);

  CensusTable table;
  table.n_max = n_max;
  int orbit_id = 0;
  for (const Orbit& orbit : orbits) {
    CensusRecord r;
    r.orbit_id = ++orbit_id;
    r.representative = orbit.representative;
    r.members = orbit.members;
    for (int n = 0; n <= n_max; ++n)
      r.sequence.push_back(sequences[static_cast<std::size_t>(n)][orbit.representative.mask()]);
    bool any_entry = false;
    bool any_mismatch = false;
    for (const EntryVerification& v : report.entries) {
      if (v.entry->canonical_set != orbit.representative)
        continue;
      any_entry = true;
      r.paper_names.push_back(v.entry->paper_name);
      if (std::find(r.formula_ids.begin(), r.formula_ids.end(), v.entry->formula) == r.formula_ids.end())
        r.formula_ids.push_back(v.entry->formula);
      if (!v.passed()) {
        any_mismatch = true;
        if (!r.verification_details.empty())
          r.verification_details += "; ";
        r.verification_details += describe(v);
      }
    }
    r.verification = !any_entry      ? VerificationStatus::enumeration_only
                     : any_mismatch ? VerificationStatus::mismatch
                                    : VerificationStatus::verified;
    table.records.push_back(std::move(r));
  }
  wilf_classes(table);

  if (options.timing)
    table.metadata.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (options.cache) {
    // The cache keeps the longest sequences seen so far.
    if (reusable < n_max || cache.empty())
      write_file(*options.cache, export_table(table, ExportFormat::json));
  }
  return table;
}

} // namespace signedpat
