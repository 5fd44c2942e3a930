#include "eqcoll/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

namespace eqcoll {

namespace {

std::int64_t to_int64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::domain_error("integer too large for JSON output");
  return v.convert_to<std::int64_t>();
}

int parse_degree(const std::string& key) {
  size_t pos = 0;
  int degree;
  try {
    degree = std::stoi(key, &pos);
  } catch (const std::exception&) {
    throw ParseError("invalid degree key '" + key + "'");
  }
  if (pos != key.size()) throw ParseError("invalid degree key '" + key + "'");
  return degree;
}

}  // namespace

json to_json(const GradedDim& g) {
  json j = json::object();
  for (const auto& [degree, mult] : g.dims()) j[std::to_string(degree)] = to_int64(mult);
  return j;
}

GradedDim graded_dim_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graded dimension must be a JSON object");
  GradedDim g;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw ParseError("multiplicity must be an integer");
    std::int64_t mult = value.get<std::int64_t>();
    if (mult < 0) throw ParseError("negative multiplicity at degree " + key);
    g.add(parse_degree(key), Int(mult));
  }
  return g;
}

json to_json(const ExceptionalCollection& c) {
  json j;
  j["k"] = c.k;
  json ext = json::array();
  for (const auto& row : c.ext) {
    json jrow = json::array();
    for (const auto& entry : row) jrow.push_back(to_json(entry));
    ext.push_back(jrow);
  }
  j["ext"] = ext;
  if (c.omega_ext) {
    json omega = json::array();
    for (const auto& row : *c.omega_ext) {
      json jrow = json::array();
      for (const auto& entry : row) jrow.push_back(to_json(entry));
      omega.push_back(jrow);
    }
    j["omega_ext"] = omega;
  }
  if (c.cover_dim) j["cover_dim"] = *c.cover_dim;
  return j;
}

ExceptionalCollection collection_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("ext"))
    throw ParseError("collection file must contain 'k' and 'ext'");
  ExceptionalCollection c;
  if (!j["k"].is_number_integer()) throw ParseError("'k' must be an integer");
  c.k = j["k"].get<int>();
  if (!j["ext"].is_array()) throw ParseError("'ext' must be an array of rows");
  for (const auto& jrow : j["ext"]) {
    if (!jrow.is_array()) throw ParseError("'ext' rows must be arrays");
    std::vector<GradedDim> row;
    for (const auto& entry : jrow) row.push_back(graded_dim_from_json(entry));
    c.ext.push_back(std::move(row));
  }
  if (j.contains("omega_ext") && !j["omega_ext"].is_null()) {
    std::vector<std::vector<GradedDim>> omega;
    for (const auto& jrow : j["omega_ext"]) {
      std::vector<GradedDim> row;
      for (const auto& entry : jrow) row.push_back(graded_dim_from_json(entry));
      omega.push_back(std::move(row));
    }
    c.omega_ext = std::move(omega);
  }
  if (j.contains("cover_dim") && !j["cover_dim"].is_null()) {
    if (!j["cover_dim"].is_number_integer()) throw ParseError("'cover_dim' must be an integer");
    c.cover_dim = j["cover_dim"].get<int>();
  }
  return c;
}

ExceptionalCollection load_collection_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  return collection_from_json(j);
}

json to_json(const InducedLabel& label) {
  json j;
  j["alpha"] = label.alpha;
  j["irrep"] = label.irrep;
  return j;
}

InducedLabel induced_label_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("irrep"))
    throw ParseError("induced label must contain 'alpha' and 'irrep'");
  InducedLabel label;
  try {
    label.alpha = j["alpha"].get<MultiIndex>();
    label.irrep = j["irrep"].get<std::vector<Partition>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid induced label: ") + e.what());
  }
  return label;
}

json to_json(const ValidationReport& report) {
  json j;
  j["valid"] = report.valid();
  j["completely_orthogonal"] = report.completely_orthogonal;
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"i", v.i}, {"j", v.j}, {"message", v.message}});
  j["violations"] = violations;
  return j;
}

json to_json(const VerifyReport& report) {
  json j;
  j["objects"] = report.object_count;
  j["passed"] = report.passed();
  j["strength"] = strength_name(report.strength);
  j["fullness"] = report.fullness_note;
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"pair", {f.i, f.j}},
                        {"kind", f.kind},
                        {"expected", to_json(f.expected)},
                        {"actual", to_json(f.actual)}});
  j["failures"] = failures;
  return j;
}

json to_json(const FormalKernel& kernel) {
  json j = json::object();
  if (!kernel.diagonal.is_zero()) j["Diagonal"] = to_json(kernel.diagonal);
  if (!kernel.product.is_zero()) j["Product"] = to_json(kernel.product);
  if (!kernel.product_omega.is_zero()) j["ProductOmega"] = to_json(kernel.product_omega);
  return j;
}

json to_json(const ActionMatrix& m) {
  json j;
  j["rows"] = m.row_labels;
  j["columns"] = m.col_labels;
  json entries = json::array();
  for (const auto& row : m.entries) {
    json jrow = json::array();
    for (const auto& v : row) jrow.push_back(to_int64(v));
    entries.push_back(jrow);
  }
  j["entries"] = entries;
  return j;
}

json to_json(const TwistGroupReport& report) {
  json j;
  j["n"] = report.n;
  j["matrix"] = to_json(report.matrix);
  j["rank"] = report.rank;
  j["expected_rank"] = to_int64(report.expected_rank);
  j["commutes"] = report.commutes;
  j["integer_kernel_trivial"] = report.integer_kernel_trivial;
  j["discrepancy_note"] = report.discrepancy_note;
  return j;
}

}  // namespace eqcoll
