#include "signedpat/cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signedpat/census.hpp"
#include "signedpat/enumeration.hpp"
#include "signedpat/formulas.hpp"
#include "signedpat/symmetry.hpp"

namespace signedpat {

namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { plain, json, csv };

struct Settings {
  int cap = kDefaultCap;
  unsigned threads = 0;
  bool timing = false;
  std::string patterns;
  int n = -1;
  int n_max = -1;
  std::string method;
  std::string format = "plain";
  std::optional<int> size;
  std::string out_path;
  std::string cache_path;
  std::vector<std::string> mutate;
};

OutputFormat parse_format(const std::string& text) {
  if (text == "plain")
    return OutputFormat::plain;
  if (text == "json")
    return OutputFormat::json;
  if (text == "csv")
    return OutputFormat::csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + text + "'");
}

EnumerationOptions enumeration_options(const Settings& s) {
  EnumerationOptions o;
  o.cap = s.cap;
  o.threads = s.threads;
  return o;
}

PatternSet parse_patterns(const Settings& s, std::ostream& err) {
  ParsedPatternSet parsed = parse_pattern_set(s.patterns);
  for (const std::string& w : parsed.warnings)
    err << "warning: " << w << '\n';
  return parsed.set;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty())
      out += ' ';
    out += n;
  }
  return out;
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report_timing(const Settings& s, const Stopwatch& watch, std::ostream& err) {
  if (s.timing)
    err << "time: " << std::fixed << std::setprecision(3) << watch.seconds() << " s\n";
}

int cmd_count(const Settings& s, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format(s.format);
  const PatternSet set = parse_patterns(s, err);
  const Method method = s.method.empty() ? Method::backtrack : parse_method(s.method);
  check_n(s.n, s.cap);
  Stopwatch watch;
  const CountResult r = count(s.n, set, method, enumeration_options(s));
  switch (format) {
  case OutputFormat::plain: out << r.value.str() << '\n'; break;
  case OutputFormat::csv:
    out << "n,patterns,method,value\n"
        << r.n << ",\"" << format_pattern_set(set) << "\"," << to_string(method) << ',' << r.value.str() << '\n';
    break;
  case OutputFormat::json: {
    Json j;
    j["n"] = r.n;
    j["patterns"] = format_pattern_set(set);
    j["method"] = std::string(to_string(method));
    j["value"] = r.value.str();
    out << j.dump() << '\n';
    break;
  }
  }
  report_timing(s, watch, err);
  return 0;
}

int cmd_sequence(const Settings& s, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format(s.format);
  const PatternSet set = parse_patterns(s, err);
  const Method method = s.method.empty() ? Method::backtrack : parse_method(s.method);
  check_n(s.n_max, s.cap);
  Stopwatch watch;
  std::vector<BigInt> values;
  for (int n = 0; n <= s.n_max; ++n)
    values.push_back(count(n, set, method, enumeration_options(s)).value);
  switch (format) {
  case OutputFormat::plain:
    for (std::size_t n = 0; n < values.size(); ++n)
      out << n << ' ' << values[n].str() << '\n';
    break;
  case OutputFormat::csv:
    for (std::size_t n = 0; n < values.size(); ++n)
      out << (n ? "," : "") << values[n].str();
    out << '\n';
    break;
  case OutputFormat::json: {
    Json j;
    j["patterns"] = format_pattern_set(set);
    j["method"] = std::string(to_string(method));
    Json seq = Json::array();
    for (const BigInt& v : values)
      seq.push_back(v.str());
    j["sequence"] = std::move(seq);
    out << j.dump() << '\n';
    break;
  }
  }
  report_timing(s, watch, err);
  return 0;
}

int cmd_orbits(const Settings& s, std::ostream& out) {
  const OutputFormat format = parse_format(s.format);
  if (s.size && (*s.size < 0 || *s.size > 8))
    throw Error(ErrorCode::InvalidArgument, "--size must lie in 0..8");
  Json rows = Json::array();
  if (format == OutputFormat::csv)
    out << "orbit_id,size,orbit_size,representative,paper_names\n";
  int orbit_id = 0;
  for (const Orbit& orbit : all_orbits()) {
    ++orbit_id;
    if (s.size && orbit.representative.size() != *s.size)
      continue;
    std::vector<std::string> names;
    for (const RegistryEntry* e : lookup(orbit.representative))
      names.push_back(e->paper_name);
    const std::string rep = format_pattern_set(orbit.representative);
    switch (format) {
    case OutputFormat::plain:
      out << orbit_id << '\t' << orbit.representative.size() << '\t' << orbit.members.size() << '\t' << '{' << rep
          << "}\t" << join_names(names) << '\n';
      break;
    case OutputFormat::csv:
      out << orbit_id << ',' << orbit.representative.size() << ',' << orbit.members.size() << ",\"" << rep
          << "\",\"" << join_names(names) << "\"\n";
      break;
    case OutputFormat::json: {
      Json row;
      row["orbit_id"] = orbit_id;
      row["size"] = orbit.representative.size();
      row["orbit_size"] = orbit.members.size();
      row["representative"] = rep;
      row["paper_names"] = names;
      rows.push_back(std::move(row));
      break;
    }
    }
  }
  if (format == OutputFormat::json)
    out << rows.dump() << '\n';
  return 0;
}

std::string plain_census(const CensusTable& table) {
  std::ostringstream out;
  out << "# n_max " << table.n_max << ", " << table.records.size() << " orbits\n";
  for (const CensusRecord& r : table.records) {
    out << r.orbit_id << "\t|T|=" << r.representative.size() << "\t{" << format_pattern_set(r.representative)
        << "}\t";
    for (std::size_t n = 0; n < r.sequence.size(); ++n)
      out << (n ? "," : "") << r.sequence[n].str();
    std::string ids;
    for (FormulaId id : r.formula_ids)
      ids += (ids.empty() ? "" : " ") + std::string(to_string(id));
    out << '\t' << (ids.empty() ? "-" : ids) << '\t' << to_string(r.verification) << "\twilf=" << r.wilf_class
        << '\t' << join_names(r.paper_names) << '\n';
  }
  if (table.metadata.timing_seconds)
    out << "# time " << std::fixed << std::setprecision(3) << *table.metadata.timing_seconds << " s\n";
  return out.str();
}

int cmd_census(const Settings& s, std::ostream& out) {
  const OutputFormat format = parse_format(s.format);
  check_n(s.n_max, s.cap);
  CensusOptions options;
  options.enumeration = enumeration_options(s);
  options.timing = s.timing;
  if (!s.cache_path.empty())
    options.cache = s.cache_path;
  const CensusTable table = run_census(s.n_max, options);
  const std::string text = format == OutputFormat::plain  ? plain_census(table)
                           : format == OutputFormat::json ? export_table(table, ExportFormat::json)
                                                          : export_table(table, ExportFormat::csv);
  if (s.out_path.empty())
    out << text;
  else
    write_file(s.out_path, text);
  return 0;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  check_n(s.n_max, s.cap);
  std::set<FormulaId> mutated;
  for (const std::string& id : s.mutate)
    mutated.insert(parse_formula_id(id));
  const FormulaEvaluator evaluator = [mutated](FormulaId id, int n) {
    BigInt v = eval_formula(id, n);
    return mutated.count(id) ? BigInt(v + 1) : v;
  };

  Stopwatch watch;
  const VerificationReport report = verify_registry(s.n_max, enumeration_options(s), evaluator);
  for (const EntryVerification& v : report.entries) {
    const RegistryEntry& e = *v.entry;
    const int lo = std::max(e.min_n, 0);
    out << (v.passed() ? "PASS " : "FAIL ") << e.paper_name << ' ' << to_string(e.formula) << " n=" << lo << ".."
        << report.n_max;
    if (lo > report.n_max)
      out << " (empty range)";
    out << '\n';
    for (const Mismatch& m : v.mismatches)
      out << "  mismatch at n=" << m.n << ": formula " << m.expected.str() << ", enumeration " << m.actual.str()
          << '\n';
    if (!v.holds_below.empty()) {
      out << "  note: also holds below min_n at n=";
      for (std::size_t i = 0; i < v.holds_below.size(); ++i)
        out << (i ? "," : "") << v.holds_below[i];
      out << '\n';
    }
    if (!e.note.empty())
      out << "  note: " << e.note << '\n';
  }
  for (const ClaimCheck& c : report.superseded) {
    if (c.refuted())
      out << "REFUTED " << c.claim->description << " at n=" << c.first_counterexample->n << ": claimed "
          << c.first_counterexample->expected.str() << ", enumeration " << c.first_counterexample->actual.str()
          << '\n';
    else
      out << "UNREFUTED " << c.claim->description << " up to n=" << report.n_max << '\n';
  }
  out << "summary: " << report.entries.size() - report.mismatch_count() << '/' << report.entries.size()
      << " registry entries verified up to n=" << report.n_max << '\n';
  report_timing(s, watch, err);
  return report.all_passed() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Enumerate signed permutations avoiding sets of 2-letter signed patterns"};
  app.require_subcommand(1);
  app.add_option("--cap", s.cap, "Largest n any engine may enumerate")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", s.threads, "Worker threads for the histogram engine (0 = all cores)");
  app.add_flag("--timing", s.timing, "Report elapsed time");

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", s.cap, "Largest n any engine may enumerate")->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", s.threads, "Worker threads for the histogram engine (0 = all cores)");
    sub->add_flag("--timing", s.timing, "Report elapsed time");
    sub->add_option("--format", s.format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  };

  CLI::App* count_cmd = app.add_subcommand("count", "Count b_n(T) for one pattern set");
  count_cmd->add_option("--patterns", s.patterns, "Pattern set, e.g. \"1 2, -1 2\"")->required();
  count_cmd->add_option("--n", s.n, "Length n")->required();
  count_cmd->add_option("--method", s.method, "naive | backtrack | mask")
    ->check(CLI::IsMember({"naive", "backtrack", "mask"}));
  add_common(count_cmd);

  CLI::App* sequence_cmd = app.add_subcommand("sequence", "Print b_0(T) .. b_nmax(T)");
  sequence_cmd->add_option("--patterns", s.patterns, "Pattern set")->required();
  sequence_cmd->add_option("--n-max", s.n_max, "Largest n")->required();
  sequence_cmd->add_option("--method", s.method, "naive | backtrack | mask")
    ->check(CLI::IsMember({"naive", "backtrack", "mask"}));
  add_common(sequence_cmd);

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "List symmetry orbits of pattern sets");
  orbits_cmd->add_option("--size", s.size, "Only orbits of sets with this many patterns");
  add_common(orbits_cmd);

  CLI::App* census_cmd = app.add_subcommand("census", "Classify all 256 pattern sets");
  census_cmd->add_option("--n-max", s.n_max, "Largest n")->required();
  census_cmd->add_option("--out", s.out_path, "Write to this file instead of stdout");
  census_cmd->add_option("--cache", s.cache_path, "JSON census cache to reuse and extend");
  census_cmd->add_option("--method", s.method, "Only mask is supported for census")->check(CLI::IsMember({"mask"}));
  add_common(census_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every registry formula against enumeration");
  verify_cmd->add_option("--n-max", s.n_max, "Largest n")->required();
  verify_cmd->add_option("--mutate", s.mutate, "Add 1 to this formula's values (negative control)");
  add_common(verify_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (count_cmd->parsed())
      return cmd_count(s, out, err);
    if (sequence_cmd->parsed())
      return cmd_sequence(s, out, err);
    if (orbits_cmd->parsed())
      return cmd_orbits(s, out);
    if (census_cmd->parsed())
      return cmd_census(s, out);
    if (verify_cmd->parsed())
      return cmd_verify(s, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace signedpat
