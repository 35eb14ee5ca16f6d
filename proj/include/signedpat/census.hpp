#pragma once

// Full classification: one row per symmetry orbit of subsets of B_2, with its
// counting sequence, attached formulas, verification outcome and Wilf class.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signedpat/bigint.hpp"
#include "signedpat/core.hpp"
#include "signedpat/enumeration.hpp"
#include "signedpat/formulas.hpp"

namespace signedpat {

inline constexpr std::string_view kToolVersion = "signedpat 1.0.0";

enum class VerificationStatus { verified, mismatch, enumeration_only };

std::string_view to_string(VerificationStatus status);
VerificationStatus parse_verification_status(std::string_view text);

struct CensusRecord {
  int orbit_id = 0;
  PatternSet representative;
  std::vector<std::string> paper_names;
  std::vector<PatternSet> members;
  std::vector<BigInt> sequence; // b_0 .. b_{n_max}
  std::vector<FormulaId> formula_ids;
  VerificationStatus verification = VerificationStatus::enumeration_only;
  std::string verification_details; // empty unless mismatch
  int wilf_class = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusMetadata {
  std::string tool_version{kToolVersion};
  std::optional<double> timing_seconds;

  friend bool operator==(const CensusMetadata&, const CensusMetadata&) = default;
};

struct CensusTable {
  int n_max = 0;
  std::vector<CensusRecord> records;
  CensusMetadata metadata;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

// tables[n][T] = b_n(T) for n = 0 .. n_max.
using SequenceTable = std::vector<SubsetCounts>;

SequenceTable enumerate_sequences(int n_max, const EnumerationOptions& options = {});

struct CensusOptions {
  EnumerationOptions enumeration;
  // JSON census file reused for n already present and rewritten afterwards.
  std::optional<std::filesystem::path> cache;
  bool timing = false;
  FormulaEvaluator evaluator = default_evaluator;
};

CensusTable run_census(int n_max, const CensusOptions& options = {});

struct Mismatch {
  int n = 0;
  BigInt expected; // formula
  BigInt actual;   // enumeration
};

struct EntryVerification {
  const RegistryEntry* entry = nullptr;
  std::vector<Mismatch> mismatches;
  // n < min_n where the formula already agrees with enumeration.
  std::vector<int> holds_below;

  bool passed() const { return mismatches.empty(); }
};

struct ClaimCheck {
  const SupersededClaim* claim = nullptr;
  std::optional<Mismatch> first_counterexample;

  bool refuted() const { return first_counterexample.has_value(); }
};

struct VerificationReport {
  int n_max = 0;
  std::vector<EntryVerification> entries;
  std::vector<ClaimCheck> superseded;

  bool all_passed() const;
  std::size_t mismatch_count() const;
};

VerificationReport verify_registry(const SequenceTable& sequences,
                                   const FormulaEvaluator& evaluator = default_evaluator);
VerificationReport verify_registry(int n_max, const EnumerationOptions& options = {},
                                   const FormulaEvaluator& evaluator = default_evaluator);

// Groups orbit ids by identical sequences; class ids follow first orbit id.
// Also writes wilf_class into each record.
std::vector<std::vector<int>> wilf_classes(CensusTable& table);

enum class ExportFormat { json, csv };

std::string export_table(const CensusTable& table, ExportFormat format);
CensusTable parse_census_json(std::string_view text); // Throws Error{SchemaMismatch}.
CensusTable load_cache(const std::filesystem::path& path); // Throws Error{IoFailure | SchemaMismatch}.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace signedpat
