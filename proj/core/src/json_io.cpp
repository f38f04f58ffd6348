#include "grayson/json_io.hpp"

#include <sstream>

namespace grayson {

namespace {

double clamp_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("clamp: unknown string value '" + s + "'");
  }
  return j.get<double>();
}

nlohmann::ordered_json clamp_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("matrix: expected an array of rows");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(j[i].size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

IntMat intmat_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("integer matrix: expected an array of rows");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(j[i].size()) != cols)
      throw std::invalid_argument("integer matrix: ragged rows");
    for (int k = 0; k < cols; ++k) {
      if (!j[i][k].is_number_integer())
        throw std::invalid_argument("integer matrix: non-integer entry");
      m(i, k) = j[i][k].get<long long>();
    }
  }
  return m;
}

nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json intmat_to_json(const IntMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < m.cols(); ++k) {
      const Int& x = m(i, k);
      if (x > std::numeric_limits<long long>::max() ||
          x < std::numeric_limits<long long>::min())
        throw std::range_error("intmat_to_json: entry exceeds 64-bit range");
      row.push_back((long long)x);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json to_json(const InnerProduct& s) {
  nlohmann::ordered_json j;
  j["dim"] = s.dim();
  j["gram"] = matrix_to_json(s.gram());
  return j;
}

InnerProduct inner_product_from_json(const nlohmann::json& j) {
  const nlohmann::json& g = j.is_object() ? j.at("gram") : j;
  Eigen::MatrixXd m = matrix_from_json(g);
  if (j.is_object() && j.contains("dim") &&
      j.at("dim").get<int>() != int(m.rows()))
    throw std::invalid_argument("InnerProduct: dim field mismatches gram");
  return InnerProduct(std::move(m));
}

nlohmann::ordered_json to_json(const SymTangent& u) {
  nlohmann::ordered_json j;
  j["dim"] = u.dim();
  j["mat"] = matrix_to_json(u.mat());
  return j;
}

SymTangent sym_tangent_from_json(const nlohmann::json& j) {
  return SymTangent(matrix_from_json(j.is_object() ? j.at("mat") : j));
}

nlohmann::ordered_json to_json(const IntegerAutomorphism& g) {
  nlohmann::ordered_json j;
  j["dim"] = g.dim();
  j["mat"] = intmat_to_json(g.mat());
  return j;
}

IntegerAutomorphism automorphism_from_json(const nlohmann::json& j) {
  return IntegerAutomorphism(intmat_from_json(j.is_object() ? j.at("mat") : j));
}

nlohmann::ordered_json to_json(const Sublattice& w) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = w.ambient_dim();
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (int c = 0; c < w.rank(); ++c) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (int i = 0; i < w.ambient_dim(); ++i)
      col.push_back((long long)w.basis()(i, c));
    cols.push_back(std::move(col));
  }
  j["basis"] = std::move(cols);
  return j;
}

Sublattice sublattice_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    const int n = j.at("ambient_dim").get<int>();
    const auto& cols = j.at("basis");
    const int m = int(cols.size());
    IntMat b(n, m);
    for (int c = 0; c < m; ++c) {
      if (int(cols[c].size()) != n)
        throw std::invalid_argument("Sublattice: basis column length");
      for (int i = 0; i < n; ++i) b(i, c) = cols[c][i].get<long long>();
    }
    return Sublattice(std::move(b));
  }
  // bare matrix: array of rows
  return Sublattice(intmat_from_json(j));
}

nlohmann::ordered_json to_json(const CanonicalPolygon& p) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& [rank, logvol] : p.points)
    pts.push_back(nlohmann::ordered_json{{"rank", rank}, {"log_minvol", logvol}});
  j["points"] = std::move(pts);
  j["hull_vertices"] = p.hull_vertices;
  j["slopes"] = p.slopes;
  nlohmann::ordered_json filt = nlohmann::ordered_json::array();
  for (const auto& w : p.filtration) filt.push_back(to_json(w));
  j["filtration"] = std::move(filt);
  return j;
}

std::string polygon_csv(const CanonicalPolygon& p) {
  std::ostringstream os;
  os << "rank,log_minvol\n";
  nlohmann::ordered_json num;
  for (const auto& [rank, logvol] : p.points) {
    num = logvol;  // reuse the JSON shortest round-trip float format
    os << rank << "," << num.dump() << "\n";
  }
  return os.str();
}

nlohmann::ordered_json to_json(const GeneralizedGeodesic& c) {
  nlohmann::ordered_json j;
  j["anchor"] = to_json(c.anchor().rep());
  j["direction"] = to_json(c.direction());
  j["clamp"] = nlohmann::ordered_json::array(
      {clamp_to_json(c.clamp_lo()), clamp_to_json(c.clamp_hi())});
  j["offset"] = c.offset();
  return j;
}

GeneralizedGeodesic geodesic_from_json(const nlohmann::json& j) {
  NormalizedPoint anchor(inner_product_from_json(j.at("anchor")));
  SymTangent dir = sym_tangent_from_json(j.at("direction"));
  const auto& clamp = j.at("clamp");
  if (!clamp.is_array() || clamp.size() != 2)
    throw std::invalid_argument("GeneralizedGeodesic: clamp must be [a, b]");
  const double lo = clamp_from_json(clamp[0]);
  const double hi = clamp_from_json(clamp[1]);
  const double offset = j.value("offset", 0.0);
  return GeneralizedGeodesic(std::move(anchor), std::move(dir), lo, hi, offset);
}

}  // namespace grayson
