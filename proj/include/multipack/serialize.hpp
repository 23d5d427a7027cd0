#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "multipack/farber.hpp"
#include "multipack/generators.hpp"
#include "multipack/graph.hpp"
#include "multipack/lp.hpp"
#include "multipack/matrix.hpp"
#include "multipack/solvers.hpp"
#include "multipack/treemp.hpp"

namespace multipack {

using Json = nlohmann::json;

// FNV-1a over the canonical edge list; ties certificates to their graph.
std::string graph_hash(const Graph& g);

Json graph_json(const Graph& g);
Json matrix_json(const BinaryMatrix& m);
Json matrix_json(const ExtendedMatrix& a);
Json bound_report_json(const BoundReport& r);
Json facts_json(const std::array<FactResult, 7>& facts);
Json lp_json(const LpResult& r);
Json farber_steps_json(const std::vector<FarberStep>& steps);
Json treemp_steps_json(const std::vector<TreeMpStep>& steps);

// Certificates are standalone documents: {type, graph_hash, payload}.
Json broadcast_certificate(const Graph& g, const Broadcast& b);
Json multipacking_certificate(const Graph& g, const Multipacking& m);
Json fractional_certificate(const Graph& g, const FractionalWeighting& w);
Json ordering_certificate(const Graph& g, const std::vector<int>& ordering);
Json splitset_certificate(const Graph& g, const std::vector<int>& path,
                          const std::vector<std::pair<int, int>>& edges);

Broadcast broadcast_from_payload(const Graph& g, const Json& payload);
Multipacking multipacking_from_payload(const Json& payload);
FractionalWeighting fractional_from_payload(const Graph& g, const Json& payload);

std::string to_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

}  // namespace multipack
