#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gensol/builtin.hpp"
#include "gensol/constructive.hpp"
#include "gensol/example_g.hpp"
#include "gensol/graph.hpp"
#include "gensol/lattice.hpp"
#include "gensol/probability.hpp"
#include "gensol/rng.hpp"
#include "gensol/semidirect.hpp"

namespace gensol::cli {
namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "json";
  bool full_diameter = false;
  bool exhaustive_que = false;
  std::size_t sample = 10000;
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    try {
      return Json::parse(in);
    } catch (const Json::exception& e) {
      throw BadInput("cannot parse " + arg + ": " + e.what());
    }
  }
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[' || arg.front() == '"')) {
    try {
      return Json::parse(arg);
    } catch (const Json::exception& e) {
      throw BadInput(std::string("cannot parse inline JSON: ") + e.what());
    }
  }
  return Json(arg);  // builtin name
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).code);
    rows.push_back(row);
  }
  return rows;
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& report) {
  if (cfg.format == "text") {
    for (const auto& [key, value] : report.items()) out << key << ": " << value.dump() << '\n';
  } else {
    out << report.dump(2) << '\n';
  }
}

int cmd_example(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  example::CertifyOptions options;
  options.full_diameter = cfg.full_diameter;
  options.threads = cfg.threads;
  const example::DiameterReport r = example::certify_diameter(options, true);
  const example::AgreementReport a = example::criterion_vs_closure(cfg.sample, cfg.seed, cfg.threads);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["order"] = r.order;
  report["h_order"] = r.h_order;
  report["edges_checked"] = r.edges_checked;
  report["edges_by_criterion"] = r.edges_by_criterion;
  report["edges_by_closure"] = r.edges_by_closure;
  report["a1a2_common_neighbor"] = r.a1a2_common_neighbor.has_value();
  report["a1a2_distance"] = r.a1a2_distance;
  report["a1_eccentricity"] = r.a1_eccentricity;
  report["connected"] = r.connected;
  report["gamma_edges"] = r.gamma_edges;
  report["isolated"] = r.isolated;
  report["delta_vertices"] = r.delta_vertices;
  if (r.diameter) report["diameter"] = *r.diameter;
  report["agreement_sample"] = {{"pairs", a.pairs}, {"generating", a.generating}, {"disagreements", a.disagreements}};
  report["failures"] = r.failures;
  const bool ok = r.certified() && a.disagreements == 0;
  report["certified"] = ok;
  report["elapsed"] = elapsed;
  emit(out, cfg, report);
  return ok ? kOk : kFailed;
}

std::string dot_id(const std::string& label) {
  std::string s = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') s += '\\';
    s += c;
  }
  return s + "\"";
}

int cmd_graph(const RunConfig& cfg, const std::string& spec, bool with_ecc, std::ostream& out) {
  const GroupHandle h = group_from_json(read_json_arg(spec));
  const CayleyGroup& g = h.group;
  if (g.order() > 5000) throw BadInput("graph needs |G| <= 5000");
  const GenGraph gamma = generating_graph(g, cfg.threads);
  const GenGraph delta = delta_subgraph(gamma);

  if (cfg.format == "dot") {
    out << "graph " << dot_id(h.name) << " {\n";
    for (Elem v : gamma.vertices) out << "  " << dot_id(g.label(v)) << ";\n";
    for (std::size_t u = 0; u < gamma.size(); ++u)
      gamma.adjacency[u].for_each([&](std::size_t v) {
        if (v > u) out << "  " << dot_id(g.label(gamma.vertices[u])) << " -- " << dot_id(g.label(gamma.vertices[v])) << ";\n";
      });
    out << "}\n";
    return kOk;
  }

  Json report;
  report["group"] = h.name;
  report["order"] = g.order();
  report["vertices"] = gamma.size();
  report["edges"] = gamma.edge_count();
  report["isolated"] = gamma.isolated_count();
  Json isolated = Json::array();
  gamma.isolated.for_each([&](std::size_t v) { isolated.push_back(g.label(gamma.vertices[v])); });
  report["isolated_elements"] = isolated;
  report["delta_vertices"] = delta.size();
  const bool connected = is_connected(delta);
  report["connected"] = connected;
  const auto d = diameter(delta, cfg.threads);
  report["diameter"] = d ? Json(*d) : Json(nullptr);
  report["soluble"] = is_soluble(g);
  if (with_ecc) {
    Json ecc = Json::object();
    const std::vector<int> e = eccentricities(delta, cfg.threads);
    for (std::size_t v = 0; v < delta.size(); ++v) ecc[g.label(delta.vertices[v])] = e[v];
    report["eccentricities"] = ecc;
  }
  emit(out, cfg, report);
  return kOk;
}

std::vector<Elem> parse_elements(const GroupHandle& h, const std::string& arg) {
  if (arg.empty()) return {};
  const Json j = read_json_arg(arg);
  if (!j.is_array()) throw BadInput("element list must be a JSON array");
  std::vector<Elem> out;
  for (const Json& e : j) out.push_back(h.parse_element(e));
  return out;
}

int cmd_probability(const RunConfig& cfg, const std::string& spec, const std::string& n_spec,
                    const std::string& x_spec, int k, std::ostream& out) {
  const GroupHandle h = group_from_json(read_json_arg(spec));
  const CayleyGroup& g = h.group;
  Bitset n(g.order());
  if (n_spec == "G") {
    n = whole_group(g).members;
  } else {
    n = generated_subgroup(g, parse_elements(h, n_spec));
  }
  if (!is_normal(g, n)) throw BadInput("N is not a normal subgroup");
  const std::vector<Elem> x = parse_elements(h, x_spec);
  const SubgroupLattice lattice = subgroup_lattice(g);
  const Rational brute = p_gn_brute(g, n, x, k);
  const Rational moebius = p_gn_moebius(g, lattice, n, x, k);

  Json report;
  report["group"] = h.name;
  report["order"] = g.order();
  report["n_order"] = n.count();
  report["k"] = k;
  report["brute"] = to_string(brute);
  report["moebius"] = to_string(moebius);
  report["equal"] = brute == moebius;
  if (cfg.format == "text") {
    out << "P_{G,N}(X," << k << "): brute " << to_string(brute) << " = moebius " << to_string(moebius)
        << (brute == moebius ? "" : "  MISMATCH") << '\n';
  } else {
    emit(out, cfg, report);
  }
  return brute == moebius ? kOk : kFailed;
}

void print_que_result(std::ostream& out, const RunConfig& cfg, const FiniteField& f, const QueInstance& inst,
                      const Matrix& c, const std::string& method) {
  const Fq d1 = det(block2x2(inst.A, inst.B1, c, inst.D1));
  const Fq d2 = det(block2x2(inst.A, inst.B2, c, inst.D2));
  if (cfg.format == "text") {
    out << "C (" << method << "):\n";
    write_matrix(out, f, c);
    out << "det1 " << static_cast<int>(d1.code) << "\ndet2 " << static_cast<int>(d2.code) << '\n';
    return;
  }
  Json report;
  report["q"] = field_label(f);
  report["n"] = inst.n();
  report["method"] = method;
  report["C"] = matrix_json(c);
  report["det1"] = d1.code;
  report["det2"] = d2.code;
  emit(out, cfg, report);
}

int cmd_lemma_que(const RunConfig& cfg, const std::string& path, bool random, const std::string& q_label, int n,
                  std::ostream& out) {
  const FiniteField* field = nullptr;
  QueInstance inst;
  if (random) {
    field = &parse_field_label(q_label);
    std::mt19937_64 rng = task_rng(cfg.seed, 0);
    inst = random_que_instance(*field, n, rng);
  } else {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    Matrix* slots[5] = {&inst.A, &inst.B1, &inst.B2, &inst.D1, &inst.D2};
    for (Matrix* slot : slots) {
      TextMatrix t = read_matrix(in);
      if (field && t.field != field) throw BadInput("matrices over different fields");
      field = t.field;
      *slot = t.value;
    }
    const Index size = inst.A.rows();
    for (Matrix* slot : slots)
      if (slot->rows() != size || slot->cols() != size) throw BadInput("all five matrices must be n x n");
  }
  const FiniteField& f = *field;
  if (random && cfg.format == "text") {
    out << "instance (A, B1, B2, D1, D2):\n";
    for (const Matrix* m : {&inst.A, &inst.B1, &inst.B2, &inst.D1, &inst.D2}) write_matrix(out, f, *m);
  }
  if (!que_hypotheses_hold(inst)) throw Error(ErrorCode::HypothesisFailed, "rank hypotheses fail");
  try {
    print_que_result(out, cfg, f, inst, lemma_que_solve(f, inst), "constructive");
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConditionFailed) throw;
    if (!cfg.exhaustive_que) {
      out << "refused: none of the side conditions holds (use --exhaustive-que to search)\n";
      return kFailed;
    }
  }
  const ExhaustiveQue ex = lemma_que_exhaustive(f, inst);
  if (ex.solution) {
    print_que_result(out, cfg, f, inst, *ex.solution, "exhaustive");
    return kOk;
  }
  if (cfg.format == "text") {
    out << "no solution (exhaustively confirmed, " << ex.candidates << " candidates)\n";
  } else {
    emit(out, cfg, {{"q", field_label(f)}, {"n", inst.n()}, {"method", "exhaustive"}, {"solution", nullptr},
                    {"candidates", ex.candidates}, {"message", "no solution (exhaustively confirmed, " +
                                                               std::to_string(ex.candidates) + " candidates)"}});
  }
  return kOk;
}

SdpElement parse_sdp_element(const SdpGroup& g, const Json& j) {
  if (!j.is_object() || !j.contains("k")) throw BadInput("semidirect element needs {\"k\": ..., \"w\": ...}");
  const Elem k = g.K->handle.parse_element(j.at("k"));
  Matrix w = zero_matrix(g.field(), g.u, g.n());
  if (j.contains("w")) {
    const Json& rows = j.at("w");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(g.u)) throw BadInput("\"w\" must have u rows");
    for (int i = 0; i < g.u; ++i) {
      if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(g.n()))
        throw BadInput("each row of \"w\" must have n entries");
      for (int c = 0; c < g.n(); ++c) {
        const int v = rows[i][c].get<int>();
        if (v < 0 || v >= g.field().q()) throw BadInput("vector entry out of range");
        w(i, c) = Fq(g.field(), v);
      }
    }
  }
  return {k, w};
}

Json sdp_json(const SdpGroup& g, const SdpElement& a) {
  return {{"k", g.K->handle.element_json(a.k)}, {"w", matrix_json(a.w)}};
}

int cmd_bridge(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const Json j = read_json_arg(spec);
  if (!j.is_object()) throw BadInput("bridge input must be a JSON object");
  try {
    auto k = std::make_shared<const LinearGroup>(make_linear_group(group_from_json(j.at("K"))));
    const int u = j.contains("delta") ? j.at("delta").get<int>() : j.at("u").get<int>();
    const SdpGroup g = make_sdp(k, u);
    const SdpElement end0 = parse_sdp_element(g, j.at("end0"));
    const SdpElement end3 = parse_sdp_element(g, j.at("end3"));
    const Elem x1 = k->handle.parse_element(j.at("x1"));
    const Elem x2 = k->handle.parse_element(j.at("x2"));
    const BridgeResult r = corfour_bridge(g, end0, x1, x2, end3);

    Json report;
    report["order"] = g.order();
    report["g1"] = sdp_json(g, r.g1);
    report["g2"] = sdp_json(g, r.g2);
    report["criterion"] = r.criterion;
    report["closure"] = r.closure ? Json(*r.closure) : Json(nullptr);
    report["verified"] = r.verified();
    emit(out, cfg, report);
    return r.verified() ? kOk : kFailed;
  } catch (const Json::exception& e) {
    throw BadInput(std::string("malformed bridge input: ") + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generation machinery for finite soluble groups"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Run seed")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));

  auto* example = app.add_subcommand("example", "Certify the order 9216 group with diam(Delta) = 3");
  example->add_flag("--full-diameter", cfg.full_diameter, "Also compute every eccentricity");
  example->add_option("--sample", cfg.sample, "Random pairs for criterion/closure agreement")->capture_default_str();

  std::string spec;
  bool with_ecc = false;
  auto* graph = app.add_subcommand("graph", "Generating graph statistics");
  graph->add_option("group", spec, "Builtin name, JSON file or inline JSON")->required();
  graph->add_flag("--eccentricities", with_ecc, "Report every eccentricity");

  std::string n_spec, x_spec;
  int k = 1;
  auto* prob = app.add_subcommand("probability", "P_{G,N}(X,k) by brute force and by the Moebius sum");
  prob->add_option("group", spec, "Builtin name, JSON file or inline JSON")->required();
  prob->add_option("--normal", n_spec, "Generators of N as a JSON array, or G")->required();
  prob->add_option("--x", x_spec, "Elements of X as a JSON array");
  prob->add_option("--k", k, "Tuple length")->check(CLI::PositiveNumber)->capture_default_str();

  std::string path, q_label = "2";
  bool random = false;
  int n = 2;
  auto* que = app.add_subcommand("lemma-que", "Two-determinant block completion");
  que->add_option("file", path, "Five matrices A B1 B2 D1 D2 in matrix text format");
  que->add_flag("--random", random, "Solve a seeded random instance instead");
  que->add_option("--q", q_label, "Field order for --random")->capture_default_str();
  que->add_option("--n", n, "Dimension for --random")->check(CLI::PositiveNumber)->capture_default_str();
  que->add_flag("--exhaustive-que", cfg.exhaustive_que, "Search every C when the solver refuses");

  auto* bridge = app.add_subcommand("bridge", "Bridge between two vertices of Gamma(V^u x| K)");
  bridge->add_option("input", spec, "JSON file or inline JSON")->required();

  // Global flags may also follow the subcommand.
  for (CLI::App* sub : {example, graph, prob, que, bridge}) {
    sub->add_option("--seed", cfg.seed, "Run seed");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*example) return cmd_example(cfg, out);
    if (*graph) return cmd_graph(cfg, spec, with_ecc, out);
    if (*prob) return cmd_probability(cfg, spec, n_spec, x_spec, k, out);
    if (*que) {
      if (!random && path.empty()) throw BadInput("lemma-que needs a file or --random");
      return cmd_lemma_que(cfg, path, random, q_label, n, out);
    }
    if (*bridge) return cmd_bridge(cfg, spec, out);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::CertificationFailed ? kFailed : kBadInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace gensol::cli
