#include "gz/json_io.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace gz {

namespace {

using nlohmann::json;

// Every malformed document becomes BAD_INPUT with the library's diagnostic
// attached, so CLI callers can map it to one exit code.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const json::exception& e) {
    fail(ErrorCode::BadInput, std::string(what) + ": " + e.what());
  }
}

Group group_from_tag(const json& j) {
  const std::string tag = j.get<std::string>();
  if (tag == "u") return Group::Unitary;
  if (tag == "so") return Group::SpecialOrthogonal;
  fail(ErrorCode::BadInput, "unknown group tag \"" + tag + "\" (use \"u\" or \"so\")");
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::BadInput, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<int>(j.size()));
  int i = 0;
  for (const auto& x : j) v[i++] = x.get<double>();
  return v;
}

}  // namespace

nlohmann::json to_json(const MatrixPoint& A) {
  json rows = json::array();
  for (int i = 0; i < A.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.n(); ++j)
      row.push_back({A.entries(i, j).real(), A.entries(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"group", group_tag(A.group)}, {"n", A.n()}, {"entries", std::move(rows)}};
}

MatrixPoint matrix_point_from_json(const nlohmann::json& j) {
  return guarded("matrix point", [&] {
    MatrixPoint A;
    A.group = group_from_tag(j.at("group"));
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      fail(ErrorCode::BadInput, "entries must be an n-by-n array of [re, im] pairs");
    A.entries.resize(n, n);
    for (int r = 0; r < n; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        fail(ErrorCode::BadInput, "entries must be an n-by-n array of [re, im] pairs");
      for (int c = 0; c < n; ++c) {
        const auto& z = row[c];
        if (!z.is_array() || z.size() != 2)
          fail(ErrorCode::BadInput, "matrix entries are [re, im] pairs");
        A.entries(r, c) =
            std::complex<double>(z[0].get<double>(), z[1].get<double>());
      }
    }
    return A;
  });
}

nlohmann::json to_json(const ChamberPoint& c) { return {{"values", vector_to_json(c.values)}}; }

ChamberPoint chamber_from_json(const nlohmann::json& j) {
  return guarded("chamber point", [&] { return ChamberPoint{vector_from_json(j.at("values"))}; });
}

nlohmann::json to_json(const OrbitSpec& spec) {
  return {{"group", group_tag(spec.group)},
          {"n", spec.n},
          {"spectrum", vector_to_json(spec.spectrum.values)}};
}

OrbitSpec orbit_spec_from_json(const nlohmann::json& j) {
  return guarded("orbit spec", [&] {
    OrbitSpec spec;
    spec.group = group_from_tag(j.at("group"));
    spec.n = j.at("n").get<int>();
    spec.spectrum.values = vector_from_json(j.at("spectrum"));
    return spec;
  });
}

nlohmann::json to_json(const GZPattern& p) {
  json rows = json::array();
  for (const auto& row : p.rows) rows.push_back(vector_to_json(row));
  json j = {{"group", group_tag(p.group)}, {"rows", std::move(rows)}};
  // Full chains are the norm and keep the file minimal; a partial chain must
  // spell its levels out because they cannot be inferred from the row count.
  if (!p.full_chain()) j["levels"] = p.levels;
  return j;
}

GZPattern pattern_from_json(const nlohmann::json& j) {
  return guarded("pattern", [&] {
    GZPattern p;
    p.group = group_from_tag(j.at("group"));
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty())
      fail(ErrorCode::BadInput, "pattern rows must be a nonempty array of arrays");
    for (const auto& row : rows) p.rows.push_back(vector_from_json(row));
    if (j.contains("levels")) {
      p.levels = j.at("levels").get<std::vector<int>>();
      if (p.levels.size() != p.rows.size())
        fail(ErrorCode::BadInput, "pattern levels and rows disagree in length");
    } else {
      const int base = p.group == Group::Unitary ? 1 : 2;  // full chain implied
      for (std::size_t t = 0; t < p.rows.size(); ++t)
        p.levels.push_back(base + static_cast<int>(t));
    }
    validate_pattern_shape(p);
    return p;
  });
}

nlohmann::json to_json(const InequalitySystem& S) {
  json rows = json::array();
  for (const auto& row : S.rows)
    rows.push_back({{"a", vector_to_json(row.a)}, {"k", row.kappa}});
  return {{"dim", S.dim}, {"rows", std::move(rows)}};
}

InequalitySystem system_from_json(const nlohmann::json& j) {
  return guarded("inequality system", [&] {
    InequalitySystem S;
    S.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("rows")) {
      Halfspace h;
      h.a = vector_from_json(row.at("a"));
      h.kappa = row.at("k").get<double>();
      if (h.a.size() != S.dim)
        fail(ErrorCode::BadInput, "row coefficient count does not match dim");
      S.rows.push_back(std::move(h));
    }
    return S;
  });
}

nlohmann::json to_json(const FlowSpec& f) {
  return {{"level", f.level}, {"index", f.index}, {"angle", f.angle}};
}

FlowSpec flow_from_json(const nlohmann::json& j) {
  return guarded("flow spec", [&] {
    return FlowSpec{j.at("level").get<int>(), j.at("index").get<int>(),
                    j.at("angle").get<double>()};
  });
}

nlohmann::json to_json(const PhaseVector& ph) {
  json rows = json::array();
  for (const auto& row : ph.phases) rows.push_back(vector_to_json(row));
  return {{"phases", std::move(rows)}};
}

PhaseVector phases_from_json(const nlohmann::json& j) {
  return guarded("phase vector", [&] {
    PhaseVector ph;
    for (const auto& row : j.at("phases")) ph.phases.push_back(vector_from_json(row));
    return ph;
  });
}

nlohmann::json to_json(const SimplexCertificate& cert) {
  json dirs = json::array();
  for (const auto& d : cert.directions) dirs.push_back(vector_to_json(d));
  return {{"anchor", vector_to_json(cert.anchor)},
          {"width", cert.width},
          {"directions", std::move(dirs)}};
}

SimplexCertificate certificate_from_json(const nlohmann::json& j) {
  return guarded("simplex certificate", [&] {
    SimplexCertificate cert;
    cert.anchor = vector_from_json(j.at("anchor"));
    cert.width = j.at("width").get<double>();
    for (const auto& d : j.at("directions")) cert.directions.push_back(vector_from_json(d));
    return cert;
  });
}

nlohmann::json to_json(const PolygonConfig& P) {
  json edges = json::array();
  for (const auto& e : P.edges) edges.push_back({e[0], e[1], e[2]});
  return {{"lengths", vector_to_json(P.lengths)}, {"edges", std::move(edges)}};
}

PolygonConfig polygon_from_json(const nlohmann::json& j) {
  return guarded("polygon", [&] {
    PolygonConfig P;
    P.lengths = vector_from_json(j.at("lengths"));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        fail(ErrorCode::BadInput, "polygon edges are [x, y, z] triples");
      P.edges.emplace_back(e[0].get<double>(), e[1].get<double>(), e[2].get<double>());
    }
    return P;
  });
}

nlohmann::json to_json(const TriangulationSpec& T) {
  json diags = json::array();
  for (const auto& d : T.diagonals) diags.push_back({d.first, d.second});
  return {{"diagonals", std::move(diags)}};
}

TriangulationSpec triangulation_from_json(const nlohmann::json& j) {
  return guarded("triangulation", [&] {
    TriangulationSpec T;
    for (const auto& d : j.at("diagonals")) {
      if (!d.is_array() || d.size() != 2)
        fail(ErrorCode::BadInput, "diagonals are [i, j] pairs");
      T.diagonals.push_back({d[0].get<int>(), d[1].get<int>()});
    }
    return T;
  });
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::BadInput, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::BadInput, "cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) fail(ErrorCode::BadInput, "failed while writing " + path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::BadInput, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrorCode::BadInput, "failed while writing " + path);
}

}  // namespace gz
