#include "multipack/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "multipack/serialize.hpp"

namespace multipack {

namespace {

struct GraphInput {
  std::string file;
  std::string gen;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* f = cmd->add_option("--file", in.file, "edge-list file ('-' for stdin)");
  auto* s = cmd->add_option("--gen", in.gen,
                            "generator spec, e.g. 'cycle 6', 'gk 1', 'petersen', "
                            "'tree10', 'tree24', 'teshima', 'randomtree 9 7'");
  f->excludes(s);
  s->excludes(f);
}

LabeledGraph generate_family(const std::string& spec) {
  std::istringstream ss(spec);
  std::string family;
  ss >> family;
  std::vector<long long> params;
  long long x;
  while (ss >> x) params.push_back(x);
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      fail(Errc::ParamOutOfRange, "family '" + family + "' expects " +
                                      std::to_string(count) + " parameter(s)");
  };
  LabeledGraph out;
  if (family == "path") {
    want(1);
    out.graph = path_graph(static_cast<int>(params[0]));
  } else if (family == "cycle") {
    want(1);
    out.graph = cycle_graph(static_cast<int>(params[0]));
  } else if (family == "complete") {
    want(1);
    out.graph = complete_graph(static_cast<int>(params[0]));
  } else if (family == "petersen") {
    want(0);
    out.graph = petersen();
  } else if (family == "trampoline") {
    want(1);
    out.graph = trampoline(static_cast<int>(params[0]));
  } else if (family == "gk") {
    want(1);
    out = hartnell_mynhardt_gk(static_cast<int>(params[0]));
  } else if (family == "teshima") {
    want(0);
    out = teshima_graph();
  } else if (family == "tree10") {
    want(0);
    out = example_tree10();
  } else if (family == "tree24") {
    want(0);
    out = example_tree24();
  } else if (family == "randomtree") {
    want(2);
    out.graph = random_tree(static_cast<int>(params[0]), static_cast<std::uint64_t>(params[1]));
  } else {
    fail(Errc::ParamOutOfRange, "unknown family '" + family + "'");
  }
  return out;
}

LabeledGraph load_graph(const GraphInput& in) {
  if (!in.gen.empty()) return generate_family(in.gen);
  if (in.file.empty()) fail(Errc::ParamOutOfRange, "provide --file or --gen");
  LabeledGraph out;
  if (in.file == "-") {
    out.graph = read_edge_list(std::cin);
  } else {
    std::ifstream f(in.file);
    if (!f) fail(Errc::ParamOutOfRange, "cannot open '" + in.file + "'");
    out.graph = read_edge_list(f);
  }
  return out;
}

void emit(const Json& j, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << j.dump() << '\n';
  } else {
    std::ofstream f(output_path);
    if (!f) fail(Errc::ParamOutOfRange, "cannot write '" + output_path + "'");
    f << j.dump() << '\n';
  }
}

Json gamma_certificate_json(const std::vector<int>& members, const char* kind) {
  return {{"type", kind}, {"members", members}};
}

int do_compute(const std::string& param, const LabeledGraph& lg, int horizon,
               const std::string& output, std::ostream& out, std::ostream& err,
               bool pretty) {
  const Graph& g = lg.graph;
  Json j;
  if (param == "gamma") {
    auto r = domination_number(g);
    j = {{"parameter", "gamma"},
         {"value", r.value},
         {"certificate", gamma_certificate_json(r.certificate, "dominating-set")},
         {"nodes_explored", r.nodes_explored}};
  } else if (param == "rho") {
    auto r = two_packing_number(g);
    j = {{"parameter", "rho"},
         {"value", r.value},
         {"certificate", multipacking_certificate(g, {r.certificate, 1})},
         {"nodes_explored", r.nodes_explored}};
  } else if (param == "mp") {
    auto r = multipacking_number(g, horizon);
    int k = horizon == -1 ? distance_matrix(g).diameter : horizon;
    j = {{"parameter", "mp"},
         {"value", r.value},
         {"k", k},
         {"certificate", multipacking_certificate(g, {r.certificate, k})},
         {"nodes_explored", r.nodes_explored}};
  } else if (param == "gammab") {
    auto r = broadcast_number(g);
    j = {{"parameter", "gamma_b"},
         {"value", r.value},
         {"certificate", broadcast_certificate(g, r.certificate)},
         {"nodes_explored", r.nodes_explored}};
  } else if (param == "mpf") {
    auto [value, weighting] = fractional_multipacking_number(g);
    j = {{"parameter", "mp_f"},
         {"value", rat_to_string(value)},
         {"certificate", fractional_certificate(g, weighting)}};
  } else if (param == "gammabf") {
    auto dm = distance_matrix(g);
    auto a = extended_matrix(g, dm);
    auto lp = solve_lp(a, LpSense::Cover);
    Json cols = Json::array();
    for (int c = 0; c < a.m.cols; ++c)
      if (lp.primal_solution[c] != 0)
        cols.push_back({a.col_index[c].vertex, a.col_index[c].radius,
                        rat_to_string(lp.primal_solution[c])});
    j = {{"parameter", "gamma_b_f"},
         {"value", rat_to_string(lp.optimum)},
         {"certificate", Json{{"type", "fractional-broadcast"}, {"columns", cols}}},
         {"pivots", lp.pivots}};
  } else if (param == "bounds") {
    j = bound_report_json(bound_report(g));
    j["parameter"] = "bounds";
  } else {
    fail(Errc::ParamOutOfRange, "unknown parameter '" + param + "'");
  }
  emit(j, output, out);
  if (pretty) {
    err << "graph: n=" << g.n << " m=" << g.edges.size() << '\n';
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "certificate") err << "  " << it.key() << ": " << it.value().dump() << '\n';
  }
  return 0;
}

int do_verify(const std::string& cert_path, const LabeledGraph& lg, std::ostream& out) {
  const Graph& g = lg.graph;
  std::ifstream f(cert_path);
  if (!f) fail(Errc::ParamOutOfRange, "cannot open '" + cert_path + "'");
  Json cert = Json::parse(f);
  std::string type = cert.at("type").get<std::string>();
  if (cert.contains("graph_hash") &&
      cert.at("graph_hash").get<std::string>() != graph_hash(g))
    fail(Errc::ParamOutOfRange, "certificate was issued for a different graph");
  const Json& payload = cert.at("payload");
  Json j;
  bool valid = false;
  if (type == "broadcast") {
    auto b = broadcast_from_payload(g, payload);
    auto check = verify_dominating_broadcast(g, b);
    valid = check.dominating;
    j = {{"type", type}, {"valid", valid}, {"uncovered", check.uncovered}};
  } else if (type == "multipacking") {
    auto m = multipacking_from_payload(payload);
    auto check = verify_multipacking(g, m.members, m.k);
    valid = check.valid;
    j = {{"type", type}, {"valid", valid}};
    if (!valid) j["witness"] = {{"vertex", check.vertex}, {"radius", check.radius}};
  } else if (type == "fractional") {
    auto w = fractional_from_payload(g, payload);
    auto check = verify_fractional(g, w);
    valid = check.valid;
    j = {{"type", type}, {"valid", valid}, {"total", rat_to_string(w.total())}};
    if (!valid) j["witness"] = {{"vertex", check.vertex}, {"radius", check.radius}};
  } else if (type == "strong-elim") {
    auto ordering = payload.at("ordering").get<std::vector<int>>();
    valid = check_strong_elim(g, ordering);
    j = {{"type", type}, {"valid", valid}};
  } else if (type == "split-set") {
    auto path = payload.at("path").get<std::vector<int>>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : payload.at("edges"))
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    valid = verify_split_set(g, path, edges);
    j = {{"type", type}, {"valid", valid}};
  } else {
    fail(Errc::ParamOutOfRange, "unknown certificate type '" + type + "'");
  }
  out << j.dump() << '\n';
  return valid ? 0 : 1;
}

std::vector<long long> load_weights(const std::string& path, int n) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParamOutOfRange, "cannot open '" + path + "'");
  std::vector<long long> w;
  long long x;
  while (f >> x) w.push_back(x);
  if (static_cast<int>(w.size()) != n)
    fail(Errc::ParamOutOfRange, "expected one weight per vertex");
  return w;
}

int do_farber(const LabeledGraph& lg, const std::string& weights_path, bool broadcast,
              bool trace, std::ostream& out) {
  const Graph& g = lg.graph;
  Json j;
  if (broadcast) {
    auto run = farber_broadcast(g);
    j = {{"mode", "broadcast"},
         {"matrix", matrix_json(tree_ball_matrix(g))},
         {"multipacking", multipacking_certificate(g, run.multipacking)},
         {"broadcast", broadcast_certificate(g, run.broadcast)},
         {"cost", run.broadcast.cost()},
         {"size", run.multipacking.members.size()}};
    if (trace) j["trace"] = farber_steps_json(run.trace);
  } else {
    auto report = strongly_chordal(g);
    if (report.verdict != ChordalityVerdict::StronglyChordal)
      fail(Errc::InvalidOrdering, "input graph is not strongly chordal");
    auto ordering = make_ordering(g, report.ordering);
    std::vector<long long> weights(g.n, 1);
    if (!weights_path.empty()) weights = load_weights(weights_path, g.n);
    auto run = farber_domination(g, ordering, weights);
    j = {{"mode", "domination"},
         {"ordering", ordering.order},
         {"packing", run.packing},
         {"dominating", run.dominating},
         {"packing_total", run.packing_total},
         {"dominating_weight", run.dominating_weight}};
    if (trace) j["trace"] = farber_steps_json(run.trace);
  }
  out << j.dump() << '\n';
  return 0;
}

struct ReproRow {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<ReproRow> reproduce_rows(bool quick);

int do_reproduce(bool quick, std::ostream& out) {
  auto rows = reproduce_rows(quick);
  bool all = true;
  for (const auto& r : rows) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
    all = all && r.pass;
  }
  out << (all ? "all rows pass" : "some rows FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact broadcast domination / multipacking toolkit"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute a parameter with certificate");
  std::string param;
  compute->add_option("parameter", param, "gamma|rho|gammab|mp|mpf|gammabf|bounds")
      ->required();
  GraphInput compute_in;
  add_graph_options(compute, compute_in);
  int horizon = -1;
  compute->add_option("--k", horizon, "multipacking horizon (default: diameter)");
  std::string output;
  compute->add_option("--output", output, "write the JSON report to a file");
  bool pretty = false;
  compute->add_flag("--pretty", pretty, "human-readable summary on stderr");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  std::string cert_path;
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  GraphInput verify_in;
  add_graph_options(verify, verify_in);

  // farber
  auto* farber = app.add_subcommand("farber", "primal-dual runs on strongly chordal graphs");
  GraphInput farber_in;
  add_graph_options(farber, farber_in);
  std::string weights_path;
  farber->add_option("--weights", weights_path, "per-vertex positive integer weights");
  bool farber_broadcast_mode = false;
  farber->add_flag("--broadcast", farber_broadcast_mode, "ball-cover variant (trees)");
  bool farber_trace = false;
  farber->add_flag("--trace", farber_trace, "include the step trace");

  // treemp
  auto* treemp = app.add_subcommand("treemp", "maximum multipacking of a tree");
  GraphInput treemp_in;
  add_graph_options(treemp, treemp_in);
  bool treemp_trace = false;
  treemp->add_flag("--trace", treemp_trace, "include the step trace");

  // chordal
  auto* chordal = app.add_subcommand("chordal", "strong chordality recognition");
  GraphInput chordal_in;
  add_graph_options(chordal, chordal_in);

  // generate
  auto* generate = app.add_subcommand("generate", "emit a named instance as an edge list");
  std::vector<std::string> gen_tokens;
  generate->add_option("family", gen_tokens, "family name and integer parameters")
      ->required()
      ->expected(-1);
  bool dot = false;
  generate->add_flag("--dot", dot, "emit DOT instead of an edge list");

  // facts
  auto* facts = app.add_subcommand("facts", "extremal structure report");
  GraphInput facts_in;
  add_graph_options(facts, facts_in);
  int alpha = -1;
  facts->add_option("--alpha", alpha, "peripheral vertex")->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "re-check the built-in reference values");
  bool quick = false;
  reproduce->add_flag("--quick", quick, "skip the slowest rows");

  std::vector<const char*> argv;
  argv.push_back("multipack");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (compute->parsed()) {
      return do_compute(param, load_graph(compute_in), horizon, output, out, err, pretty);
    }
    if (verify->parsed()) {
      return do_verify(cert_path, load_graph(verify_in), out);
    }
    if (farber->parsed()) {
      return do_farber(load_graph(farber_in), weights_path, farber_broadcast_mode,
                       farber_trace, out);
    }
    if (treemp->parsed()) {
      auto lg = load_graph(treemp_in);
      auto run = find_tree_multipacking_run(lg.graph);
      Json splits = Json::array();
      for (auto [u, v] : run.split_edges) splits.push_back({u, v});
      Json j = {{"multipacking", multipacking_certificate(lg.graph, run.multipacking)},
                {"size", run.multipacking.members.size()},
                {"split_edges", splits}};
      if (treemp_trace) j["trace"] = treemp_steps_json(run.trace);
      out << j.dump() << '\n';
      return 0;
    }
    if (chordal->parsed()) {
      auto lg = load_graph(chordal_in);
      auto report = strongly_chordal(lg.graph);
      Json j;
      if (report.verdict == ChordalityVerdict::StronglyChordal)
        j = {{"verdict", "strongly-chordal"},
             {"ordering", report.ordering},
             {"certificate", ordering_certificate(lg.graph, report.ordering)}};
      else
        j = {{"verdict", "not-strongly-chordal"}, {"witness", report.witness}};
      out << j.dump() << '\n';
      return 0;
    }
    if (generate->parsed()) {
      std::string spec;
      for (const auto& t : gen_tokens) spec += t + " ";
      auto lg = generate_family(spec);
      if (dot) {
        out << to_dot(lg.graph, lg.labels.empty() ? nullptr : &lg.labels);
      } else {
        if (!lg.labels.empty()) {
          out << "# labels:";
          for (int v = 0; v < lg.graph.n; ++v) out << ' ' << v << '=' << lg.labels[v];
          out << '\n';
        }
        write_edge_list(lg.graph, out);
      }
      return 0;
    }
    if (facts->parsed()) {
      auto lg = load_graph(facts_in);
      auto report = extremal_facts_check(lg.graph, alpha);
      Json j = {{"alpha", alpha}, {"facts", facts_json(report)}};
      out << j.dump() << '\n';
      return 0;
    }
    if (reproduce->parsed()) {
      return do_reproduce(quick, out);
    }
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "json: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

namespace {

std::vector<ReproRow> reproduce_rows(bool quick) {
  std::vector<ReproRow> rows;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rows.push_back({name, pass, detail});
  };

  {  // Petersen graph
    auto g = petersen();
    bool ok = multipacking_number(g).value == 1 && broadcast_number(g).value == 2;
    auto mpf = fractional_multipacking_number(g);
    ok = ok && mpf.first == Rat(2);
    auto closed = uniform_closed_form(g);
    ok = ok && closed && closed->w_star == Rat(1, 5) && closed->r_star == 2 &&
         closed->mp_f == Rat(2);
    add("petersen: mp=1 gamma_b=2 mp_f=2 w*=1/5 r*=2", ok);
  }
  {  // 14-vertex two-cycle graph
    auto lg = teshima_graph();
    bool ok = broadcast_number(lg.graph).value == 4 &&
              multipacking_number(lg.graph).value == 2;
    add("teshima: gamma_b=4 mp=2", ok);
  }
  for (int k = 1; k <= (quick ? 1 : 2); ++k) {  // K_{2,4} chains
    auto lg = hartnell_mynhardt_gk(k);
    bool ok = broadcast_number(lg.graph).value == 4 * k &&
              multipacking_number(lg.graph).value == 3 * k;
    auto mpf = fractional_multipacking_number(lg.graph);
    ok = ok && mpf.first == Rat(4 * k);
    FractionalWeighting w;
    w.weights.assign(lg.graph.n, Rat(0));
    for (int i = 1; i <= 3 * k; ++i)
      for (const char* base : {"r", "s", "c", "u"})
        w.weights[lg.id(base + std::to_string(i))] = Rat(1, 3);
    ok = ok && verify_fractional(lg.graph, w).valid && w.total() == Rat(4 * k);
    add("gk " + std::to_string(k) + ": gamma_b=4k mp=3k mp_f=4k; 1/3-weighting feasible", ok);
  }
  {  // cycles
    bool ok = true;
    for (int n = 3; n <= 12; ++n) {
      auto g = cycle_graph(n);
      bool equal = multipacking_number(g).value == broadcast_number(g).value;
      ok = ok && (equal == (n % 3 == 0));
    }
    add("cycles 3..12: mp=gamma_b iff n=0 mod 3", ok);
  }
  {  // 10-vertex tree: weighted-domination run
    auto lg = example_tree10();
    std::vector<int> natural(lg.graph.n);
    for (int i = 0; i < lg.graph.n; ++i) natural[i] = i;
    auto run = farber_domination(lg.graph, make_ordering(lg.graph, natural),
                                 std::vector<long long>(lg.graph.n, 1));
    std::vector<int> packing;
    for (int v = 0; v < lg.graph.n; ++v)
      if (run.packing[v] > 0) packing.push_back(v);
    bool ok = packing == std::vector<int>{0, 1, 2, 8} &&
              run.dominating == std::vector<int>{3, 4, 5, 9};
    add("tree10: packing {v1,v2,v3,v9}, dominating {v4,v5,v6,v10}", ok);
  }
  {  // 10-vertex tree: ball-cover run
    auto lg = example_tree10();
    auto run = farber_broadcast(lg.graph);
    auto a = tree_ball_matrix(lg.graph);
    bool ok = a.m.cols == 17 && run.multipacking.members == std::vector<int>{0, 1, 2} &&
              run.broadcast.cost() == 3 && run.broadcast.power[6] == 2 &&
              run.broadcast.power[5] == 1;
    add("tree10: 17 balls, multipacking {v1,v2,v3}, broadcast v7<-2 v6<-1", ok);
  }
  {  // 24-vertex tree
    auto lg = example_tree24();
    auto run = find_tree_multipacking_run(lg.graph);
    std::vector<int> expect = {lg.id("d"), lg.id("j"), lg.id("m"),
                               lg.id("n"), lg.id("t"), lg.id("v")};
    std::sort(expect.begin(), expect.end());
    bool ok = run.multipacking.members == expect &&
              verify_multipacking(lg.graph, run.multipacking.members,
                                  run.multipacking.k)
                  .valid;
    add("tree24: multipacking {m,j,v,t,d,n}", ok);
  }
  return rows;
}

}  // namespace

}  // namespace multipack
