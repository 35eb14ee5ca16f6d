#include <fstream>
#include <sstream>

#include <json.hpp>

#include "signedpat/census.hpp"

namespace signedpat {

namespace {

using Json = nlohmann::ordered_json;

Json patterns_to_json(PatternSet set) {
  Json out = Json::array();
  for (Pattern p : set.patterns()) {
    auto [a, b] = p.letters();
    out.push_back(Json::array({a, b}));
  }
  return out;
}

PatternSet patterns_from_json(const Json& j) {
  if (!j.is_array())
    throw Error(ErrorCode::SchemaMismatch, "pattern set must be an array");
  PatternSet out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw Error(ErrorCode::SchemaMismatch, "pattern must be a pair of integers");
    try {
      out.insert(Pattern::from_letters(p[0].get<int>(), p[1].get<int>()));
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaMismatch, e.what());
    }
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos)
    return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string export_json(const CensusTable& table) {
  Json root;
  root["n_max"] = table.n_max;
  root["tool_version"] = table.metadata.tool_version;
  if (table.metadata.timing_seconds)
    root["timing_seconds"] = *table.metadata.timing_seconds;
  Json records = Json::array();
  for (const CensusRecord& r : table.records) {
    Json rec;
    rec["orbit_id"] = r.orbit_id;
    rec["representative"] = patterns_to_json(r.representative);
    rec["paper_names"] = r.paper_names;
    Json members = Json::array();
    for (PatternSet m : r.members)
      members.push_back(patterns_to_json(m));
    rec["members"] = std::move(members);
    Json sequence = Json::array();
    for (const BigInt& b : r.sequence)
      sequence.push_back(b.str());
    rec["sequence"] = std::move(sequence);
    Json ids = Json::array();
    for (FormulaId id : r.formula_ids)
      ids.push_back(std::string(to_string(id)));
    rec["formula_ids"] = std::move(ids);
    rec["verification"] = std::string(to_string(r.verification));
    if (!r.verification_details.empty())
      rec["verification_details"] = r.verification_details;
    rec["wilf_class"] = r.wilf_class;
    records.push_back(std::move(rec));
  }
  root["records"] = std::move(records);
  return root.dump(2) + "\n";
}

std::string export_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "orbit_id,representative,size";
  for (int n = 0; n <= table.n_max; ++n)
    out << ",b_" << n;
  out << ",formula_ids,verification,wilf_class\n";
  for (const CensusRecord& r : table.records) {
    out << r.orbit_id << ',' << csv_quote(format_pattern_set(r.representative)) << ',' << r.representative.size();
    for (const BigInt& b : r.sequence)
      out << ',' << b.str();
    std::string ids;
    for (FormulaId id : r.formula_ids) {
      if (!ids.empty())
        ids += ';';
      ids += to_string(id);
    }
    out << ',' << csv_quote(ids) << ',' << to_string(r.verification) << ',' << r.wilf_class << '\n';
  }
  return out.str();
}

template <class T>
T require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::SchemaMismatch, std::string("missing key '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaMismatch, std::string("bad value for '") + key + "': " + e.what());
  }
}

} // namespace

std::string export_table(const CensusTable& table, ExportFormat format) {
  return format == ExportFormat::json ? export_json(table) : export_csv(table);
}

CensusTable parse_census_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaMismatch, std::string("invalid JSON: ") + e.what());
  }
  CensusTable table;
  table.n_max = require<int>(root, "n_max");
  if (table.n_max < 0)
    throw Error(ErrorCode::SchemaMismatch, "n_max must be nonnegative");
  table.metadata.tool_version = require<std::string>(root, "tool_version");
  if (root.contains("timing_seconds"))
    table.metadata.timing_seconds = require<double>(root, "timing_seconds");
  const Json& records = root.contains("records") ? root["records"] : Json();
  if (!records.is_array())
    throw Error(ErrorCode::SchemaMismatch, "records must be an array");
  for (const Json& rec : records) {
    CensusRecord r;
    r.orbit_id = require<int>(rec, "orbit_id");
    r.representative = patterns_from_json(rec.contains("representative") ? rec["representative"] : Json());
    r.paper_names = require<std::vector<std::string>>(rec, "paper_names");
    if (!rec.contains("members") || !rec["members"].is_array())
      throw Error(ErrorCode::SchemaMismatch, "members must be an array");
    for (const Json& m : rec["members"])
      r.members.push_back(patterns_from_json(m));
    for (const std::string& s : require<std::vector<std::string>>(rec, "sequence")) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::SchemaMismatch, "sequence entries must be decimal strings");
      r.sequence.emplace_back(s);
    }
    if (static_cast<int>(r.sequence.size()) != table.n_max + 1)
      throw Error(ErrorCode::SchemaMismatch, "sequence length must be n_max + 1");
    for (const std::string& id : require<std::vector<std::string>>(rec, "formula_ids")) {
      try {
        r.formula_ids.push_back(parse_formula_id(id));
      } catch (const Error& e) {
        throw Error(ErrorCode::SchemaMismatch, e.what());
      }
    }
    r.verification = parse_verification_status(require<std::string>(rec, "verification"));
    if (rec.contains("verification_details"))
      r.verification_details = require<std::string>(rec, "verification_details");
    r.wilf_class = require<int>(rec, "wilf_class");
    table.records.push_back(std::move(r));
  }
  return table;
}

CensusTable load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad())
    throw Error(ErrorCode::IoFailure, "cannot read '" + path.string() + "'");
  return parse_census_json(buffer.str());
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out)
    throw Error(ErrorCode::IoFailure, "cannot write '" + path.string() + "'");
}

} // namespace signedpat
