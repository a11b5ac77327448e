#pragma once

#include <string>

#include <json.hpp>

#include "gz/flow.hpp"
#include "gz/inverse.hpp"
#include "gz/orbit.hpp"
#include "gz/pattern.hpp"
#include "gz/polygon.hpp"
#include "gz/polytope.hpp"

// JSON schemas (all parse errors surface as BAD_INPUT):
//   MatrixPoint        {"group":"u"|"so","n":N,"entries":[[[re,im],...],...]}
//   ChamberPoint       {"values":[...]}
//   OrbitSpec          {"group":"u"|"so","n":N,"spectrum":[...]}
//   GZPattern          {"group":"u"|"so","rows":[[...],...]}  (full chains)
//   InequalitySystem   {"dim":d,"rows":[{"a":[...],"k":kappa},...]}
//   FlowSpec           {"level":k,"index":i,"angle":theta}
//   PhaseVector        {"phases":[[...],...]}
//   SimplexCertificate {"anchor":[...],"width":w,"directions":[[...],...]}
//   PolygonConfig      {"lengths":[...],"edges":[[x,y,z],...]}
//   TriangulationSpec  {"diagonals":[[i,j],...]}

namespace gz {

nlohmann::json to_json(const MatrixPoint& A);
MatrixPoint matrix_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChamberPoint& c);
ChamberPoint chamber_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OrbitSpec& spec);
OrbitSpec orbit_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GZPattern& p);
GZPattern pattern_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InequalitySystem& S);
InequalitySystem system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FlowSpec& f);
FlowSpec flow_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PhaseVector& ph);
PhaseVector phases_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SimplexCertificate& cert);
SimplexCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolygonConfig& P);
PolygonConfig polygon_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TriangulationSpec& T);
TriangulationSpec triangulation_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gz
