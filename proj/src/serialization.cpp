#include "algflow/serialization.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace algflow::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) malformed("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], "matrix entry");
  }
  return m;
}

}  // namespace

json to_json(const CubicTensor& t) {
  const int m = t.dim();
  json c = json::array();
  for (int i = 0; i < m; ++i) {
    json plane = json::array();
    for (int j = 0; j < m; ++j) {
      json row = json::array();
      for (int k = 0; k < m; ++k) row.push_back(t(i, j, k));
      plane.push_back(std::move(row));
    }
    c.push_back(std::move(plane));
  }
  return {{"dim", m}, {"c", std::move(c)}};
}

CubicTensor tensor_from_json(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() < 1) malformed("'dim' must be a positive integer");
  const int m = d.get<int>();
  const json& c = field(j, "c");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(m) * m * m);
  if (!c.is_array() || static_cast<int>(c.size()) != m) malformed("'c' must have dim planes");
  for (const auto& plane : c) {
    if (!plane.is_array() || static_cast<int>(plane.size()) != m) malformed("'c' planes must have dim rows");
    for (const auto& row : plane) {
      if (!row.is_array() || static_cast<int>(row.size()) != m) malformed("'c' rows must have dim entries");
      for (const auto& x : row) entries.push_back(number(x, "tensor entry"));
    }
  }
  return CubicTensor(m, std::move(entries));
}

json to_json(const Algebra& a) {
  if (a.dim() != 2) return to_json(a.constants());
  return {{"dim", 2}, {"c2x4", to_json(to_2x4(a))}};
}

Algebra algebra_from_json(const json& j) {
  if (j.is_object() && j.contains("c2x4")) {
    if (j.contains("dim") && j.at("dim") != 2) malformed("'c2x4' requires dim 2");
    const Matrix m = matrix_from_json(j.at("c2x4"));
    if (m.rows() != 2 || m.cols() != 4) malformed("'c2x4' must be a 2x4 matrix");
    return from_2x4(StructMatrix2x4(m));
  }
  return Algebra(tensor_from_json(j));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const StructMatrix2x4& m) { return to_json(Matrix(m)); }

json to_json(const BasisChange& p) { return to_json(p.matrix()); }

BasisChange basis_change_from_json(const json& j) {
  try {
    return BasisChange(matrix_from_json(j));
  } catch (const std::domain_error& e) {
    malformed(e.what());
  }
}

json to_json(const IsoVerdict& v) {
  json out{{"kind", std::string(to_string(v.kind))}};
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  if (v.residual) out["residual"] = *v.residual;
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (!v.trace.empty()) out["trace"] = v.trace;
  return out;
}

IsoVerdict verdict_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  IsoVerdict v;
  if (kind == "Isomorphic") {
    v = IsoVerdict::isomorphic(basis_change_from_json(field(j, "certificate")), number(field(j, "residual"), "residual"));
  } else if (kind == "NotIsomorphicExact") {
    v = IsoVerdict::not_isomorphic(field(j, "reason").get<std::string>());
  } else if (kind == "SeparatedByInvariant") {
    v = IsoVerdict::separated_by(field(j, "reason").get<std::string>());
  } else if (kind == "NotFoundWithinBudget") {
    v = IsoVerdict::not_found(j.contains("residual") ? number(j.at("residual"), "residual")
                                                     : std::numeric_limits<double>::infinity());
  } else {
    malformed("unknown verdict kind '" + kind + "'");
  }
  if (j.contains("trace")) v.trace = j.at("trace").get<std::vector<std::string>>();
  return v;
}

json to_json(const FlowClassLabel& label) {
  json out{{"class", std::string(label.name())}};
  if (auto c = label.parameter()) out["c"] = *c;
  return out;
}

FlowClassLabel label_from_json(const json& j) {
  const json& name = field(j, "class");
  if (!name.is_string()) malformed("'class' must be a string");
  using K = FlowClassLabel::Kind;
  switch (parse_class_kind(name.get<std::string>())) {
    case K::A1: return FlowClassLabel::a1();
    case K::A0Plus: return FlowClassLabel::a0_plus();
    case K::A2: return FlowClassLabel::a2();
    case K::ACosPlus: return FlowClassLabel::cos_plus(number(field(j, "c"), "'c'"));
    case K::ACosMinus: return FlowClassLabel::cos_minus(number(field(j, "c"), "'c'"));
  }
  malformed("unhandled class");
}

json to_json(const BekbaevForm& f) { return {{"family", f.family()}, {"params", f.params()}}; }

BekbaevForm bekbaev_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_number_integer()) malformed("'family' must be an integer");
  std::vector<double> params;
  for (const auto& x : field(j, "params")) params.push_back(number(x, "parameter"));
  return BekbaevForm(fam.get<int>(), std::move(params));
}

json to_json(const InvariantSignature& s) {
  return {{"commutative", s.commutative}, {"associative", s.associative}, {"rank_2x4", s.rank_2x4}};
}

Algebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  return algebra_from_json(j);
}

void save_algebra(const std::filesystem::path& path, const Algebra& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(a).dump(2) << '\n';
}

}  // namespace algflow::io
