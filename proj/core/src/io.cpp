#include "toriclab/io.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace toriclab {

using nlohmann::json;

namespace {

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(numerator(x));
  return to_string(x);
}

template <class T>
json array_of(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json indices(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

Integer integer_from(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                        s.find('-', 1) == std::string::npos && s != "-";
    if (digits) return Integer(s);
  }
  throw InputError(std::string("expected an integer in ") + what);
}

std::size_t count_from(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(std::string("expected a nonnegative integer for ") + what);
  return j.get<std::size_t>();
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::vector<IntVector> integer_rows(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
    IntVector v;
    for (const auto& x : r) v.push_back(integer_from(x, what));
    rows.push_back(std::move(v));
  }
  return rows;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string optional_name(const json& doc) {
  if (!doc.contains("name")) return {};
  if (!doc.at("name").is_string()) throw InputError("\"name\" must be a string");
  return doc.at("name").get<std::string>();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fan parse_fan(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = count_from(field(doc, "rank"), "rank");
  auto rays = integer_rows(field(doc, "rays"), "rays");
  std::vector<IndexSet> cones;
  const json& mc = field(doc, "max_cones");
  if (!mc.is_array()) throw InputError("max_cones must be an array of arrays");
  for (const auto& c : mc) {
    if (!c.is_array()) throw InputError("max_cones must be an array of arrays");
    IndexSet s;
    for (const auto& i : c) s.push_back(count_from(i, "max_cones"));
    cones.push_back(std::move(s));
  }
  return Fan(n, std::move(rays), std::move(cones), optional_name(doc));
}

Fan read_fan(const std::filesystem::path& path) {
  try {
    return parse_fan(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string fan_to_json(const Fan& f) {
  json doc;
  doc["rank"] = f.rank();
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(array_of(r));
  doc["rays"] = rays;
  json cones = json::array();
  for (const auto& c : f.max_cones()) cones.push_back(indices(c));
  doc["max_cones"] = cones;
  if (!f.name().empty()) doc["name"] = f.name();
  return doc.dump(2) + "\n";
}

LatticeMap parse_lattice_map(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t r = count_from(field(doc, "rows"), "rows");
  const std::size_t c = count_from(field(doc, "cols"), "cols");
  const auto entries = integer_rows(field(doc, "entries"), "entries");
  if (entries.size() != r) throw InputError("entries: expected " + std::to_string(r) + " rows");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i].size() != c)
      throw InputError("entries: row " + std::to_string(i) + " does not have " + std::to_string(c) +
                       " columns");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entries[i][j];
  }
  return LatticeMap{std::move(m), optional_name(doc)};
}

LatticeMap read_lattice_map(const std::filesystem::path& path) {
  try {
    return parse_lattice_map(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string lattice_map_to_json(const LatticeMap& m) {
  json doc;
  doc["rows"] = m.matrix.rows();
  doc["cols"] = m.matrix.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.matrix.rows(); ++i) entries.push_back(array_of(m.matrix.row_vector(i)));
  doc["entries"] = entries;
  if (!m.name.empty()) doc["name"] = m.name;
  return doc.dump(2) + "\n";
}

std::string kdiv_report_to_json(const KDivReport& r) {
  json doc;
  doc["k"] = r.k;
  doc["subset_size"] = r.subset_size;
  doc["verdict"] = r.k_divisorial ? "k-divisorial" : "not k-divisorial";
  doc["k_divisorial"] = r.k_divisorial;
  doc["presentation_ok"] = r.presentation_ok;
  if (!r.presentation_ok) doc["presentation_failure"] = r.presentation_failure;
  doc["invariance_notions_may_differ"] = r.invariance_notions_may_differ;
  json subsets = json::array();
  for (const auto& s : r.subsets) {
    json e;
    e["cones"] = indices(s.cones);
    e["status"] = s.feasible ? "feasible" : "infeasible";
    if (s.witness) {
      json w = json::array();
      for (const auto& u : s.witness->exponents) w.push_back(array_of(u));
      e["witness"] = w;
    }
    if (s.certificate) {
      e["certificate"] = {{"multipliers", array_of(s.certificate->multipliers)},
                          {"relation", s.certificate->relation}};
    }
    subsets.push_back(e);
  }
  doc["subsets"] = subsets;
  return doc.dump(2) + "\n";
}

}  // namespace toriclab
