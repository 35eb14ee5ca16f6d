// Acceptance run: one PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "signedpat/census.hpp"
#include "signedpat/cli.hpp"
#include "signedpat/symmetry.hpp"

using namespace signedpat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

Verdict remark_reproduction() {
  Verdict v;
  const BigInt b2 = count(2, pattern_set({"12", "21"}), Method::naive).value;
  const BigInt b3 = count(3, pattern_set({"1-2", "-12"}), Method::naive).value;
  v.require(b2 == 6, "b_2(12,21) = " + b2.str());
  v.require(b3 == 22, "b_3(1-2,-12) = " + b3.str());
  v.require(2 * factorial(2) == 4 && b2 != 4, "2*2! not refuted");
  v.require(factorial(4) == 24 && b3 != 24, "4! not refuted");
  if (v.pass)
    v.detail = "b_2(12,21)=6, b_3(1-2,-12)=22; superseded 2*2!=4 and 4!=24 refuted";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  int checked = 0;
  for (int n = 0; n <= 5; ++n) {
    const SubsetCounts all = counts_all_subsets(n);
    for (int m = 0; m < 256; ++m) {
      const PatternSet set(static_cast<std::uint8_t>(m));
      const BigInt a = count_naive(n, set).value;
      const BigInt b = count_backtrack(n, set).value;
      v.require(a == b && b == all[static_cast<std::size_t>(m)], "n=" + std::to_string(n) + " mask=" + std::to_string(m));
      ++checked;
    }
  }
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> pick(0, 255);
  const SubsetCounts all6 = counts_all_subsets(6);
  for (int i = 0; i < 20; ++i) {
    const int m = pick(rng);
    const PatternSet set(static_cast<std::uint8_t>(m));
    const BigInt a = count_naive(6, set).value;
    v.require(a == count_backtrack(6, set).value && a == all6[static_cast<std::size_t>(m)],
              "n=6 mask=" + std::to_string(m));
    ++checked;
  }
  if (v.pass)
    v.detail = std::to_string(checked) + " (n, T) pairs agree across naive, backtrack and mask";
  return v;
}

Verdict master_verification() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport report = verify_registry(7, {kDefaultCap, 1, best_available_isa()});
  const double elapsed = seconds_since(start);
  for (const EntryVerification& e : report.entries)
    for (const Mismatch& m : e.mismatches)
      v.require(false, e.entry->paper_name + " n=" + std::to_string(m.n));
  int refuted = 0;
  for (const ClaimCheck& c : report.superseded)
    refuted += c.refuted();
  v.require(elapsed < 300, "took " + fmt_seconds(elapsed));
  if (v.pass)
    v.detail = std::to_string(report.entries.size()) + " registry entries, zero mismatches up to n=7 in " +
               fmt_seconds(elapsed) + "; " + std::to_string(refuted) +
               " printed claims refuted (U4_2 printed form, V_2/V_7/V_8 zero clause at n=2)";
  return v;
}

Verdict orbit_reduction() {
  Verdict v;
  const auto sizes = orbit_census_by_size();
  const std::array<int, 6> expected{2, 8, 10, 16, 10, 8};
  for (int k = 1; k <= 6; ++k)
    v.require(sizes[static_cast<std::size_t>(k)] == expected[static_cast<std::size_t>(k - 1)],
              "|T|=" + std::to_string(k) + " gives " + std::to_string(sizes[static_cast<std::size_t>(k)]));
  v.require(sizes[7] + sizes[8] == 3, "|T| in {7,8} gives " + std::to_string(sizes[7] + sizes[8]));
  v.require(all_orbits().size() == 58, "total " + std::to_string(all_orbits().size()));
  if (v.pass)
    v.detail = "orbits by size 1..6 = 2,8,10,16,10,8; sizes 7-8 = 3; total 58";
  return v;
}

Verdict named_sequences() {
  Verdict v;
  auto seq = [](PatternSet t, int n) { return count(n, t, Method::backtrack).value; };
  const long b12[] = {1, 2, 7, 34, 209, 1546};
  for (int n = 0; n <= 5; ++n) {
    v.require(seq(pattern_set({"12"}), n) == b12[n], "b_n(12) enumeration at n=" + std::to_string(n));
    v.require(eval_formula(FormulaId::EQ1, n) == b12[n], "b_n(12) formula at n=" + std::to_string(n));
  }
  const PatternSet t2 = pattern_set({"12", "1-2", "-1-2"});
  const PatternSet t6 = pattern_set({"12", "1-2", "-2-1"});
  const PatternSet t7 = pattern_set({"12", "-1-2", "21"});
  const PatternSet t8 = pattern_set({"12", "-1-2", "2-1"});
  for (const RegistryEntry& e : registry()) {
    if (e.paper_name == "T_2") v.require(e.named_set == t2, "T_2 binding");
    if (e.paper_name == "T_6") v.require(e.named_set == t6, "T_6 binding");
    if (e.paper_name == "T_7") v.require(e.named_set == t7, "T_7 binding");
    if (e.paper_name == "T_8") v.require(e.named_set == t8, "T_8 binding");
  }
  for (int n = 0; n <= 7; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    v.require(seq(t2, n) == catalan(n + 1), "T_2 Catalan" + at);
    const BigInt f = seq(t6, n);
    v.require(f == fibonacci(2 * n + 1), "T_6 Fibonacci" + at);
    if (n >= 2)
      v.require(f == 3 * seq(t6, n - 1) - seq(t6, n - 2), "T_6 recurrence" + at);
    v.require(seq(t7, n) == n * n + 1, "T_7" + at);
    v.require(seq(t8, n) == (BigInt(1) << (n + 1)) - (n + 1), "T_8" + at);
  }
  v.require(seq(t8, 2) == 5, "b_2(T_8) != 5");
  if (v.pass)
    v.detail = "b(12), T_2 Catalan, T_6 Fibonacci + recurrence, T_7 n^2+1, T_8 2^(n+1)-(n+1), b_2(T_8)=5";
  return v;
}

Verdict symmetry_properties() {
  Verdict v;
  const auto group = group_elements();
  v.require(group.size() == 8, "group size " + std::to_string(group.size()));
  long checks = 0;
  for (SymmetryElement g : group) {
    for (const SignedPermutation& alpha : iterate_bn(4)) {
      v.require(apply(g, apply(g, alpha)) == alpha, "not an involution");
      for (int i = 0; i < Pattern::kCount; ++i) {
        const Pattern tau = Pattern::from_index(i);
        v.require(contains(alpha, tau) == contains(apply(g, alpha), apply(g, tau)), "equivariance " + alpha.to_string());
        ++checks;
      }
    }
  }
  const SequenceTable seq = enumerate_sequences(5);
  for (const Orbit& o : all_orbits())
    for (PatternSet m : o.members)
      for (SymmetryElement g : group)
        for (int n = 0; n <= 5; ++n)
          v.require(seq[static_cast<std::size_t>(n)][m.mask()] == seq[static_cast<std::size_t>(n)][apply(g, m).mask()],
                    "b_n(T) != b_n(g(T)) for mask " + std::to_string(m.mask()));
  if (v.pass)
    v.detail = "8 involutions; " + std::to_string(checks) +
               " containment checks equivariant on B_4 x B_2; b_n invariant on all orbits for n<=5";
  return v;
}

Verdict structural_invariants() {
  Verdict v;
  const SequenceTable seq = enumerate_sequences(5);
  for (int m = 0; m < 256; ++m) {
    const PatternSet t(static_cast<std::uint8_t>(m));
    v.require(seq[0][m] == 1 && seq[1][m] == 2 && seq[2][m] == 8 - t.size(), "small n for mask " + std::to_string(m));
    for (int bit = 0; bit < 8; ++bit) {
      const int super = m | (1 << bit);
      for (int n = 0; n <= 5; ++n)
        v.require(seq[static_cast<std::size_t>(n)][m] >= seq[static_cast<std::size_t>(n)][super],
                  "monotonicity " + std::to_string(m) + " -> " + std::to_string(super));
    }
  }
  if (v.pass)
    v.detail = "b_0=1, b_1=2, b_2=8-|T| for all 256 sets; b_n monotone under inclusion for n<=5";
  return v;
}

Verdict performance() {
  Verdict v;
  CensusOptions parallel;
  parallel.enumeration.threads = 0;
  auto start = std::chrono::steady_clock::now();
  const CensusTable table = run_census(8, parallel);
  const double t8 = seconds_since(start);
  v.require(table.records.front().sequence.back() == 10321920, "|B_8| mismatch");
  v.require(t8 < 60, "n=8 census took " + fmt_seconds(t8));

  std::string single;
  for (KernelIsa isa : available_isas()) {
    start = std::chrono::steady_clock::now();
    counts_all_subsets(7, {kDefaultCap, 1, isa});
    const double t7 = seconds_since(start);
    v.require(t7 < 30, "n=7 single-threaded " + std::string(to_string(isa)) + " took " + fmt_seconds(t7));
    single += std::string(single.empty() ? "" : ", ") + std::string(to_string(isa)) + " " + fmt_seconds(t7);
  }
  if (v.pass)
    v.detail = "n=8 census " + fmt_seconds(t8) + "; n=7 single-threaded: " + single + " (default kernel " +
               std::string(to_string(best_available_isa())) + ")";
  return v;
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "signedpat");
  std::ostringstream sink;
  return run_cli(args, sink, sink);
}

Verdict persistence() {
  Verdict v;
  const CensusTable table = run_census(6);
  v.require(parse_census_json(export_table(table, ExportFormat::json)) == table, "JSON round-trip differs");
  const auto path = std::filesystem::temp_directory_path() / "signedpat_acceptance.json";
  write_file(path, export_table(table, ExportFormat::json));
  v.require(load_cache(path) == table, "load_cache differs");
  std::filesystem::remove(path);
  const int clean = cli({"verify", "--n-max", "6"});
  const int mutated = cli({"verify", "--n-max", "6", "--mutate", "EQ11"});
  v.require(clean == 0, "clean verify exit " + std::to_string(clean));
  v.require(mutated == 1, "mutated verify exit " + std::to_string(mutated));
  if (v.pass)
    v.detail = "export -> load_cache lossless at n_max=6; verify exits 0 clean, 1 with EQ11 mutated";
  return v;
}

} // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
    {"remark reproduction", remark_reproduction},
    {"oracle triple-agreement", oracle_agreement},
    {"master formula verification", master_verification},
    {"orbit reduction", orbit_reduction},
    {"named sequence checks", named_sequences},
    {"symmetry properties", symmetry_properties},
    {"structural invariants", structural_invariants},
    {"performance", performance},
    {"persistence round-trip", persistence},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): " << v.detail << '\n';
  }
  return failures;
}
