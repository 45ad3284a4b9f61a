#include "iam/json_io.hpp"

#include <stdexcept>

namespace iam {

namespace {

std::vector<std::vector<int>> int_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of rows");
  return j.get<std::vector<std::vector<int>>>();
}

}  // namespace

Json to_json(const BinaryMatrix& m) {
  return Json{{"m", m.rows()}, {"n", m.cols()}, {"rows", m.to_rows()}};
}

BinaryMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("matrix JSON needs \"rows\"");
  const auto rows = int_rows(j.at("rows"), "rows");
  for (const auto& row : rows)
    for (int v : row)
      if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
  auto mat = BinaryMatrix::from_rows(rows);
  if (j.contains("m") && j.at("m").get<int>() != mat.rows()) throw std::invalid_argument("\"m\" disagrees with rows");
  if (j.contains("n") && j.at("n").get<int>() != mat.cols()) throw std::invalid_argument("\"n\" disagrees with rows");
  return mat;
}

Json to_json(const SkewShape& s) {
  return Json{{"lambda", s.lambda().parts()}, {"mu", s.mu().parts()}};
}

SkewShape shape_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda")) throw std::invalid_argument("shape JSON needs \"lambda\"");
  Partition lambda(j.at("lambda").get<std::vector<int>>());
  Partition mu(j.contains("mu") ? j.at("mu").get<std::vector<int>>() : std::vector<int>{});
  return SkewShape(std::move(lambda), std::move(mu));
}

Json to_json(const Filling& f) {
  Json rows = Json::array();
  const auto& s = f.shape();
  for (int i = 1; i <= s.rows(); ++i) {
    Json row = Json::array();
    for (int j = s.mu()[i] + 1; j <= s.lambda()[i]; ++j) row.push_back(f.at(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return Json{{"shape", to_json(s)}, {"rows", std::move(rows)}};
}

Json to_json(const PlanePartition& pp) {
  return Json{{"a", pp.rows()}, {"b", pp.cols()}, {"c", pp.bound()}, {"pi", pp.to_rows()}};
}

PlanePartition pp_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pi")) throw std::invalid_argument("plane partition JSON needs \"pi\"");
  const auto rows = int_rows(j.at("pi"), "pi");
  const int a = j.contains("a") ? j.at("a").get<int>() : static_cast<int>(rows.size());
  const int b = j.contains("b") ? j.at("b").get<int>() : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  int c = 0;
  if (j.contains("c")) {
    c = j.at("c").get<int>();
  } else {
    for (const auto& row : rows)
      for (int v : row) c = std::max(c, v);
  }
  return PlanePartition(a, b, c, rows);
}

Json to_json(const PathFamily& paths) {
  Json out = Json::array();
  for (const auto& path : paths.paths) {
    Json pts = Json::array();
    for (auto p : path) pts.push_back(Json::array({p.x, p.y}));
    out.push_back(std::move(pts));
  }
  return out;
}

PathFamily paths_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("path family JSON must be a list of point lists");
  PathFamily family;
  for (const auto& path : j) {
    std::vector<LatticePoint> pts;
    for (const auto& p : path) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("lattice point must be [x,y]");
      pts.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    family.paths.push_back(std::move(pts));
  }
  return family;
}

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a coefficient array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.emplace_back(c.get<std::string>());
    } else {
      coeffs.emplace_back(std::to_string(c.get<long long>()));
    }
  }
  return QPoly(std::move(coeffs));
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational JSON must be a \"p/q\" string");
}

}  // namespace iam
