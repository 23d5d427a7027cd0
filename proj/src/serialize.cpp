#include "multipack/serialize.hpp"

#include <cstdint>
#include <cstdio>

namespace multipack {

std::string graph_hash(const Graph& g) {
  std::string text = std::to_string(g.n) + "|";
  for (auto [u, v] : g.edges)
    text += std::to_string(u) + "," + std::to_string(v) + ";";
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

Json matrix_json(const BinaryMatrix& m) {
  std::string bits;
  bits.reserve(m.bits.size());
  for (auto b : m.bits) bits.push_back(b ? '1' : '0');
  return {{"rows", m.rows}, {"cols", m.cols}, {"bits", bits}};
}

Json matrix_json(const ExtendedMatrix& a) {
  Json j = matrix_json(a.m);
  Json cols = Json::array();
  for (const auto& key : a.col_index) cols.push_back({key.vertex, key.radius});
  j["col_index"] = cols;
  j["col_cost"] = a.col_cost;
  j["row_index"] = a.row_index;
  return j;
}

Json bound_report_json(const BoundReport& r) {
  return {{"diameter", r.diameter},
          {"radius", r.radius},
          {"diameter_lb", r.diameter_lb},
          {"mp", r.mp},
          {"gamma_b", r.gamma_b},
          {"gamma", r.gamma},
          {"rho", r.rho},
          {"chain_ok", r.chain_ok},
          {"ratio_ok", r.ratio_ok},
          {"mp_equals_gamma_b", r.mp_equals_gamma_b},
          {"ratio", rat_to_string(r.ratio)}};
}

Json facts_json(const std::array<FactResult, 7>& facts) {
  Json out = Json::array();
  for (int i = 0; i < 7; ++i) {
    const auto& f = facts[i];
    out.push_back({{"fact", i + 1},
                   {"pass", f.pass},
                   {"vacuous", f.vacuous},
                   {"witness", f.witness},
                   {"detail", f.detail}});
  }
  return out;
}

Json lp_json(const LpResult& r) {
  Json j;
  switch (r.status) {
    case LpStatus::Optimal: j["status"] = "optimal"; break;
    case LpStatus::Infeasible: j["status"] = "infeasible"; break;
    case LpStatus::Unbounded: j["status"] = "unbounded"; break;
  }
  if (r.status == LpStatus::Optimal) {
    j["optimum"] = rat_to_string(r.optimum);
    Json primal = Json::array(), dual = Json::array();
    for (const auto& x : r.primal_solution) primal.push_back(rat_to_string(x));
    for (const auto& x : r.dual_solution) dual.push_back(rat_to_string(x));
    j["primal"] = primal;
    j["dual"] = dual;
  }
  j["pivots"] = r.pivots;
  return j;
}

Json farber_steps_json(const std::vector<FarberStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json j = {{"stage", s.stage}, {"value", s.value}, {"slack", s.slack}};
    if (s.stage == "dual") {
      j["vertex"] = s.vertex;
    } else {
      if (s.column.vertex >= 0) j["column"] = {s.column.vertex, s.column.radius};
      else j["vertex"] = s.vertex;
      j["selected"] = s.selected;
    }
    out.push_back(j);
  }
  return out;
}

Json treemp_steps_json(const std::vector<TreeMpStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json splits = Json::array();
    for (auto [u, v] : s.splits) splits.push_back({u, v});
    out.push_back({{"op", s.op},
                   {"multipacking", s.multipacking},
                   {"path", s.path},
                   {"splits", splits},
                   {"tree_size", s.tree_size}});
  }
  return out;
}

namespace {

Json certificate(const Graph& g, const std::string& type, Json payload) {
  return {{"type", type}, {"graph_hash", graph_hash(g)}, {"payload", std::move(payload)}};
}

}  // namespace

Json broadcast_certificate(const Graph& g, const Broadcast& b) {
  Json power = Json::array();
  for (int v = 0; v < static_cast<int>(b.power.size()); ++v)
    if (b.power[v] > 0) power.push_back({v, b.power[v]});
  return certificate(g, "broadcast", Json{{"power", power}});
}

Json multipacking_certificate(const Graph& g, const Multipacking& m) {
  return certificate(g, "multipacking", Json{{"members", m.members}, {"k", m.k}});
}

Json fractional_certificate(const Graph& g, const FractionalWeighting& w) {
  Json weights = Json::array();
  for (int v = 0; v < static_cast<int>(w.weights.size()); ++v)
    if (w.weights[v] != 0) weights.push_back({v, rat_to_string(w.weights[v])});
  return certificate(g, "fractional", Json{{"weights", weights}});
}

Json ordering_certificate(const Graph& g, const std::vector<int>& ordering) {
  return certificate(g, "strong-elim", Json{{"ordering", ordering}});
}

Json splitset_certificate(const Graph& g, const std::vector<int>& path,
                          const std::vector<std::pair<int, int>>& edges) {
  Json es = Json::array();
  for (auto [u, v] : edges) es.push_back({u, v});
  return certificate(g, "split-set", Json{{"path", path}, {"edges", es}});
}

Broadcast broadcast_from_payload(const Graph& g, const Json& payload) {
  Broadcast b;
  b.power.assign(g.n, 0);
  for (const auto& entry : payload.at("power")) {
    int v = entry.at(0).get<int>();
    if (v < 0 || v >= g.n) fail(Errc::IdOutOfRange, "broadcast vertex out of range");
    b.power[v] = entry.at(1).get<int>();
  }
  return b;
}

Multipacking multipacking_from_payload(const Json& payload) {
  Multipacking m;
  m.members = payload.at("members").get<std::vector<int>>();
  m.k = payload.at("k").get<int>();
  return m;
}

FractionalWeighting fractional_from_payload(const Graph& g, const Json& payload) {
  FractionalWeighting w;
  w.weights.assign(g.n, Rat(0));
  for (const auto& entry : payload.at("weights")) {
    int v = entry.at(0).get<int>();
    if (v < 0 || v >= g.n) fail(Errc::IdOutOfRange, "weight vertex out of range");
    w.weights[v] = rat_from_string(entry.at(1).get<std::string>());
  }
  return w;
}

std::string to_dot(const Graph& g, const std::vector<std::string>* labels) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.n; ++v) {
    out += "  " + std::to_string(v);
    if (labels) out += " [label=\"" + (*labels)[v] + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace multipack
