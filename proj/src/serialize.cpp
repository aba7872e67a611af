#include "curvecal/serialize.hpp"

#include "curvecal/error.hpp"

namespace curvecal {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing JSON field '") + key + "'");
  return *it;
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("JSON field '") + what + "' has the wrong type");
  }
}

}  // namespace

Json to_json(const BasisMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.h.rows(); ++r) {
    rows.push_back(std::vector<std::int64_t>(m.h.row(r).begin(), m.h.row(r).end()));
  }
  return Json{{"genus", m.genus}, {"H", rows}, {"det", m.det}};
}

BasisMatrix basis_matrix_from_json(const Json& j) {
  const int genus = as<int>(field(j, "genus"), "genus");
  auto rows = as<std::vector<std::vector<std::int64_t>>>(field(j, "H"), "H");
  if (genus < 1) throw Error("genus must be at least 1");
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  if (rows.size() != n) throw Error("H must have " + std::to_string(n) + " rows");
  IntMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw Error("H row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) h(r, c) = rows[r][c];
  }
  BasisMatrix m = make_basis_matrix(genus, std::move(h));
  if (j.contains("det")) m.det = as<std::int64_t>(j.at("det"), "det");
  return m;
}

Json to_json(const BasisVerdict& v) {
  Json sigma = nullptr;
  if (v.block_permutation) {
    sigma = Json::array();
    for (int s : *v.block_permutation) sigma.push_back(s + 1);
  }
  return Json{{"unimodular", v.unimodular},
              {"det", v.det},
              {"sigma", sigma},
              {"block_dets", v.block_dets},
              {"diagnostics", v.diagnostics}};
}

Json to_json(const CrossingDiagram& d) {
  Json signs = Json::object();
  for (const auto& [id, s] : d.signs()) signs[id] = s;
  return Json{{"m_order", d.order_on_m()}, {"mprime_order", d.order_on_mprime()},
              {"signs", signs}};
}

CrossingDiagram diagram_from_json(const Json& j) {
  auto m = as<std::vector<std::string>>(field(j, "m_order"), "m_order");
  auto mp = as<std::vector<std::string>>(field(j, "mprime_order"), "mprime_order");
  auto signs = as<std::map<std::string, int>>(field(j, "signs"), "signs");
  return build_diagram(std::move(m), std::move(mp), std::move(signs));
}

Json to_json(const Reduction& r) {
  Json trace = Json::array();
  for (const auto& b : r.trace) trace.push_back({b.p, b.q});
  return Json{{"final", to_json(r.diagram)},
              {"crossings", r.diagram.size()},
              {"algebraic_sum", r.diagram.algebraic_sum()},
              {"steps", r.steps},
              {"trace", trace}};
}

Json to_json(const Presentation& p) {
  Json gens = Json::array();
  for (int i = 1; i <= p.genus; ++i) gens.push_back("b" + std::to_string(i));
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(render(r));
  Json ab = Json::array();
  for (std::size_t r = 0; r < p.abelianization.rows(); ++r) {
    ab.push_back(std::vector<std::int64_t>(p.abelianization.row(r).begin(),
                                           p.abelianization.row(r).end()));
  }
  return Json{{"generators", gens}, {"relators", rels}, {"abelianization", ab}};
}

Json to_json(const ClassificationReport& r) {
  return Json{{"sigma", r.sigma},
              {"orders", r.orders},
              {"pi1", r.pi1},
              {"simply_connected", r.simply_connected},
              {"finite", r.finite},
              {"prime", r.prime}};
}

Json to_json(const CobordismChain& c) {
  Json recs = Json::array();
  for (const auto& r : c.records()) {
    Json inc = Json::object();
    for (const auto& [partner, v] : r.incidence) inc[partner] = v;
    recs.push_back(Json{{"id", r.id}, {"index", r.index}, {"incidence", inc}});
  }
  return Json{{"records", recs}};
}

CobordismChain chain_from_json(const Json& j) {
  const Json& recs = field(j, "records");
  if (!recs.is_array()) throw Error("'records' must be an array");
  std::vector<CriticalRecord> out;
  for (const Json& r : recs) {
    CriticalRecord rec;
    rec.id = as<std::string>(field(r, "id"), "id");
    rec.index = as<int>(field(r, "index"), "index");
    if (r.contains("incidence")) {
      rec.incidence = as<std::map<std::string, std::int64_t>>(r.at("incidence"), "incidence");
    }
    out.push_back(std::move(rec));
  }
  return build_chain(std::move(out));
}

Json to_json(const Normalization& n) {
  Json moves = Json::array();
  for (const auto& m : n.moves) {
    moves.push_back(Json{{"cancel", {m.lower, m.upper}},
                         {"pairing", m.pairing},
                         {"type", m.type_after}});
  }
  return Json{{"final_type", n.chain.type()}, {"moves", moves}};
}

}  // namespace curvecal
