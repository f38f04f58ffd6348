#pragma once

#include <nlohmann/json.hpp>

#include "grayson/flowspace.hpp"
#include "grayson/lattice.hpp"

namespace grayson {

// Matrix payloads are arrays of rows; integer matrices use integer entries.

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j);
IntMat intmat_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXd& m);
nlohmann::ordered_json intmat_to_json(const IntMat& m);

nlohmann::ordered_json to_json(const InnerProduct& s);
InnerProduct inner_product_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const SymTangent& u);
SymTangent sym_tangent_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const IntegerAutomorphism& g);
IntegerAutomorphism automorphism_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const Sublattice& w);
// Accepts either {"ambient_dim": n, "basis": [columns]} or a bare basis
// matrix given as an array of rows.
Sublattice sublattice_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const CanonicalPolygon& p);
// rank,log_minvol lines for plotting
std::string polygon_csv(const CanonicalPolygon& p);

nlohmann::ordered_json to_json(const GeneralizedGeodesic& c);
GeneralizedGeodesic geodesic_from_json(const nlohmann::json& j);

}  // namespace grayson
