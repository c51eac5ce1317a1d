// Command-line front end: parse graphs, hypergraphs and ideals; compute
// invariants, symbolic powers, containments, sweeps and resurgence reports.
//
// Exit codes: 0 success, 1 mathematical verification failure, 2 input error,
// 3 resource-guard truncation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "resurgence/acceptance.hpp"
#include "resurgence/builtin_graphs.hpp"
#include "resurgence/classify.hpp"
#include "resurgence/containment.hpp"
#include "resurgence/errors.hpp"
#include "resurgence/graph_ideals.hpp"
#include "resurgence/graph_invariants.hpp"
#include "resurgence/ideal_io.hpp"
#include "resurgence/report_json.hpp"
#include "resurgence/resurgence.hpp"
#include "resurgence/symbolic.hpp"

namespace {

using namespace resurgence;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceGuard = 3;

struct ParsedInput {
  enum class Kind { GraphInput, HypergraphInput, IdealInput } kind;
  Graph graph;
  Hypergraph hypergraph;
  MonomialIdeal ideal;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedInput parse_input(const std::string& spec) {
  ParsedInput out{ParsedInput::Kind::GraphInput, {}, {}, {}};
  if (spec.rfind("graph:", 0) == 0) {
    out.graph = builtin_graph(spec.substr(6));
    return out;
  }
  std::string text = slurp(spec);
  // JSON when it starts with '{'; otherwise the line formats.
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    bool pairs_only = true;
    Hypergraph h = hypergraph_from_json(text);
    for (const auto& e : h.edges())
      if (e.size() != 2) pairs_only = false;
    if (pairs_only) {
      out.graph = graph_from_json(text);
      return out;
    }
    out.kind = ParsedInput::Kind::HypergraphInput;
    out.hypergraph = std::move(h);
    return out;
  }
  if (text.rfind("vertices:", first) == first) {
    std::istringstream ss(text);
    Hypergraph h = read_hypergraph(ss);
    bool pairs_only = true;
    for (const auto& e : h.edges())
      if (e.size() != 2) pairs_only = false;
    if (pairs_only) {
      std::istringstream ss2(text);
      out.graph = read_graph(ss2);
      return out;
    }
    out.kind = ParsedInput::Kind::HypergraphInput;
    out.hypergraph = std::move(h);
    return out;
  }
  std::istringstream ss(text);
  out.kind = ParsedInput::Kind::IdealInput;
  out.ideal = read_ideal(ss);
  return out;
}

MonomialIdeal select_ideal(const ParsedInput& in, bool edge_mode) {
  switch (in.kind) {
    case ParsedInput::Kind::GraphInput:
      return edge_mode ? edge_ideal(in.graph) : cover_ideal(in.graph);
    case ParsedInput::Kind::HypergraphInput:
      if (edge_mode) throw std::invalid_argument("--edge is not defined for hypergraph input");
      return cover_ideal(in.hypergraph);
    case ParsedInput::Kind::IdealInput:
      return in.ideal;
  }
  throw std::logic_error("unreachable");
}

long long node_budget_from_env() {
  const char* env = std::getenv("RESURGENCE_NODE_BUDGET");
  if (!env) return kDefaultNodeBudget;
  return std::atoll(env);
}

int cmd_invariants(const ParsedInput& in, bool json_out) {
  if (in.kind == ParsedInput::Kind::HypergraphInput) {
    const Hypergraph& h = in.hypergraph;
    MonomialIdeal J = cover_ideal(h);
    if (json_out) {
      std::cout << "{\"vertices\": " << h.n() << ", \"edges\": " << h.edges().size()
                << ", \"chromatic_number\": " << hypergraph_chromatic_number(h)
                << ", \"big_height\": " << big_height(J)
                << ", \"cover_generators\": " << J.generators().size() << "}\n";
    } else {
      std::cout << "hypergraph on " << h.n() << " vertices, " << h.edges().size() << " edges\n"
                << "chromatic number: " << hypergraph_chromatic_number(h) << "\n"
                << "big height of J(H): " << big_height(J) << "\n"
                << "minimal covers: " << J.generators().size() << "\n";
    }
    return kExitOk;
  }
  if (in.kind == ParsedInput::Kind::IdealInput) {
    const MonomialIdeal& I = in.ideal;
    std::cout << "ideal with " << I.generators().size() << " minimal generators\n"
              << "alpha: " << alpha(I) << "\n"
              << "squarefree: " << (is_squarefree(I) ? "yes" : "no") << "\n";
    if (is_squarefree(I) && I.is_proper() && !I.is_zero())
      std::cout << "big height: " << big_height(I) << "\n";
    return kExitOk;
  }
  const Graph& g = in.graph;
  GraphClassification c = classify(g);
  if (json_out) {
    std::ostringstream ss;
    ss << "{\"vertices\": " << g.n() << ", \"edges\": " << g.edges().size()
       << ", \"chromatic_number\": " << c.chi << ", \"clique_number\": " << c.omega
       << ", \"independence_number\": " << independence_number(g)
       << ", \"bipartite\": " << (c.bipartition ? "true" : "false")
       << ", \"cactus\": " << (c.cactus ? "true" : "false")
       << ", \"classification\": \"" << kind_name(c.kind) << "\"}";
    std::cout << ss.str() << "\n";
  } else {
    std::cout << "graph on " << g.n() << " vertices, " << g.edges().size() << " edges\n"
              << "chromatic number: " << c.chi << (g.edges().empty() ? " (edgeless)" : "")
              << "\n"
              << "clique number: " << c.omega << "\n"
              << "independence number: " << independence_number(g) << "\n"
              << "bipartite: " << (c.bipartition ? "yes" : "no") << "\n"
              << "cactus: " << (c.cactus ? "yes" : "no") << "\n"
              << "classification: " << kind_name(c.kind) << "\n";
    if (c.class_data) {
      std::cout << "odd cycle half-lengths:";
      for (int n : c.class_data->half_lengths)
        std::cout << " n=" << n << " (k=" << c.class_data->k_by_half_length.at(n) << ")";
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic-power and resurgence computations for graph ideals"};
  app.require_subcommand(1);

  std::string input;
  bool edge_mode = false, cover_mode = false, json_out = false, certify = false,
       cross_check = false;
  int opt_s = 2, opt_t = 1, opt_smax = 6, opt_tmax = 6, opt_c = 1, opt_n = 1;
  int threads = (int)std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input)
      cmd->add_option("input", input, "graph:<builtin>, or a graph/hypergraph/ideal file")
          ->required();
    cmd->add_flag("--edge", edge_mode, "use the edge ideal I(G)");
    cmd->add_flag("--cover", cover_mode, "use the cover ideal J(G) (default)");
    cmd->add_flag("--json", json_out, "JSON output");
    cmd->add_option("--threads", threads, "worker threads for sweeps");
  };

  CLI::App* invariants = app.add_subcommand("invariants", "graph/hypergraph invariants");
  add_common(invariants);

  CLI::App* ideal_cmd = app.add_subcommand("ideal", "print the selected ideal");
  add_common(ideal_cmd);

  CLI::App* symbolic = app.add_subcommand("symbolic", "symbolic power I^(s)");
  add_common(symbolic);
  symbolic->add_option("--s", opt_s, "symbolic exponent")->required();
  symbolic->add_flag("--cross-check", cross_check, "run both engines and compare");

  CLI::App* containment = app.add_subcommand("containment", "does I^(s) lie in I^t?");
  add_common(containment);
  auto* opt_s_flag = containment->add_option("--s", opt_s, "symbolic exponent (b in tech mode)");
  auto* opt_t_flag = containment->add_option("--t", opt_t, "ordinary exponent (r in chi mode)");
  containment->add_flag("--certify", certify, "emit factorization certificates");
  auto* opt_c_flag = containment->add_option(
      "--c", opt_c, "chi-family mode: check J^(2r-2c) and J^(2r-2c-1) against J^r (r from --t)");
  auto* opt_n_flag = containment->add_option(
      "--n", opt_n, "tech mode: check J_n(G)^b against the edge ideal power (b from --s)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "containment sweep over (s, t)");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--s-max", opt_smax);
  sweep_cmd->add_option("--t-max", opt_tmax);

  CLI::App* resurgence_cmd =
      app.add_subcommand("resurgence", "exact value or interval with provenance");
  add_common(resurgence_cmd);
  resurgence_cmd->add_option("--s-max", opt_smax, "sweep box for interval fallbacks");
  resurgence_cmd->add_option("--t-max", opt_tmax);

  CLI::App* suite_cmd = app.add_subcommand("verify-suite",
                                           "run the acceptance suites (optionally on a corpus "
                                           "directory of graph files)");
  std::string corpus_dir;
  suite_cmd->add_option("corpus", corpus_dir, "directory of graph files");
  suite_cmd->add_flag("--json", json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (suite_cmd->parsed()) {
      if (corpus_dir.empty()) {
        int failures = run_acceptance_suite(std::cout);
        return failures == 0 ? kExitOk : kExitVerificationFailure;
      }
      int failures = 0, checked = 0;
      for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        ParsedInput in = parse_input(entry.path().string());
        if (in.kind != ParsedInput::Kind::GraphInput) continue;
        ++checked;
        const Graph& g = in.graph;
        MonomialIdeal I = edge_ideal(g), J = cover_ideal(g);
        bool ok = true;
        // Hypergraph round-trip and Alexander duality on the cover side.
        ok = ok && equals(J, cover_ideal(hypergraph_of_ideal(J)));
        ok = ok && hypergraph_of_ideal(J).edges().size() == g.edges().size();
        // Engine agreement and power containment at small s.
        for (int s = 1; s <= 3 && ok; ++s) {
          MonomialIdeal sym = symbolic_power(I, s, SymbolicEngine::CrossCheck);
          ok = ok && contains_ideal(sym, power(I, s));
        }
        bool bip = is_bipartite(g).bipartite;
        ok = ok && (bip == (chromatic_number(g) <= 2));
        ok = ok && (bip == induced_odd_cycles(g).empty());
        if (!ok) {
          std::cout << "[FAIL] " << entry.path().string() << "\n";
          ++failures;
        } else {
          std::cout << "[PASS] " << entry.path().string() << "\n";
        }
      }
      std::cout << checked << " corpus graphs checked, " << failures << " failures\n";
      return failures == 0 ? kExitOk : kExitVerificationFailure;
    }

    ParsedInput in = parse_input(input);
    if (edge_mode && cover_mode)
      throw std::invalid_argument("choose one of --edge and --cover");

    if (invariants->parsed()) return cmd_invariants(in, json_out);

    if (ideal_cmd->parsed()) {
      write_ideal(std::cout, select_ideal(in, edge_mode));
      return kExitOk;
    }

    if (symbolic->parsed()) {
      MonomialIdeal I = select_ideal(in, edge_mode);
      MonomialIdeal sym = symbolic_power(
          I, opt_s, cross_check ? SymbolicEngine::CrossCheck : SymbolicEngine::Enumeration);
      write_ideal(std::cout, sym);
      return kExitOk;
    }

    if (containment->parsed()) {
      if (opt_c_flag->count() > 0) {
        if (in.kind != ParsedInput::Kind::GraphInput || edge_mode)
          throw std::invalid_argument("--c runs the cover chi family and needs a graph input");
        if (opt_t_flag->count() == 0)
          throw std::invalid_argument("--c needs the target power r via --t");
        auto results = cover_chi_containment_suite(in.graph, opt_c, {opt_t});
        bool truncated = false;
        for (const ContainmentResult& res : results) {
          std::cout << "J^(" << res.s << ") in J^" << res.t << ": "
                    << (res.out_of_hypothesis
                            ? "out of hypothesis (not asserted)"
                            : (res.truncated ? "truncated" : (res.holds ? "holds" : "fails")))
                    << "\n";
          truncated = truncated || res.truncated;
        }
        return truncated ? kExitResourceGuard : kExitOk;
      }
      if (opt_n_flag->count() > 0) {
        if (in.kind != ParsedInput::Kind::GraphInput)
          throw std::invalid_argument("--n runs the odd-cycle power check and needs a graph");
        if (opt_s_flag->count() == 0)
          throw std::invalid_argument("--n needs the exponent b via --s");
        ContainmentResult res = tech3_containment_check(in.graph, opt_n, opt_s);
        std::cout << "J_" << opt_n << "(G)^" << res.s << " in I(G)^" << res.t << ": "
                  << (res.holds ? "holds" : "fails") << "\n";
        if (res.witness)
          std::cout << "witness: " << res.witness->str(in.graph.vertices()) << "\n";
        return kExitOk;
      }
      if (opt_s_flag->count() == 0 || opt_t_flag->count() == 0)
        throw std::invalid_argument("containment needs --s and --t");
      MonomialIdeal I = select_ideal(in, edge_mode);
      ContainmentOptions opts;
      opts.node_budget = node_budget_from_env();
      SymbolicSource source(I);
      if (in.kind == ParsedInput::Kind::GraphInput && !edge_mode)
        source = SymbolicSource::for_cover_ideal(in.graph);
      opts.source = &source;
      ContainmentResult res = check_containment(I, opt_s, opt_t, certify, opts);
      if (json_out) {
        std::cout << containment_to_json(res, I.ambient()) << "\n";
      } else {
        std::cout << "I^(" << opt_s << ") in I^" << opt_t << ": "
                  << (res.truncated ? "truncated" : (res.holds ? "holds" : "fails")) << "\n";
        if (res.witness)
          std::cout << "witness: " << res.witness->str(I.ambient()) << "\n";
        if (res.certificate) {
          for (const auto& [gen, factors] : *res.certificate) {
            std::cout << gen.str(I.ambient()) << " = product of";
            for (const auto& f : factors) std::cout << " [" << f.str(I.ambient()) << "]";
            std::cout << " (times a remainder)\n";
          }
        }
      }
      return res.truncated ? kExitResourceGuard : kExitOk;
    }

    if (sweep_cmd->parsed()) {
      MonomialIdeal I = select_ideal(in, edge_mode);
      SweepOptions opts;
      opts.node_budget = node_budget_from_env();
      opts.threads = threads;
      SymbolicSource source(I);
      if (in.kind == ParsedInput::Kind::GraphInput && !edge_mode)
        source = SymbolicSource::for_cover_ideal(in.graph);
      opts.source = &source;
      SweepResult res = sweep(I, opt_smax, opt_tmax, opts);
      if (json_out) {
        std::cout << sweep_to_json(res, I.ambient()) << "\n";
      } else {
        std::cout << "sweep box: s <= " << opt_smax << ", t <= " << opt_tmax << "\n";
        for (const auto& f : res.failures)
          std::cout << "failure (" << f.s << ", " << f.t
                    << "): " << f.witness.str(I.ambient()) << "\n";
        if (res.lower_bound)
          std::cout << "resurgence lower bound from sweep: " << res.lower_bound->str() << "\n";
        else
          std::cout << "no failures with s/t > 1 in the box\n";
      }
      return res.truncated ? kExitResourceGuard : kExitOk;
    }

    if (resurgence_cmd->parsed()) {
      if (in.kind != ParsedInput::Kind::GraphInput)
        throw std::invalid_argument("resurgence reports need a graph input");
      EngineOptions opts;
      opts.sweep_s_max = opt_smax;
      opts.sweep_t_max = opt_tmax;
      opts.node_budget = node_budget_from_env();
      opts.threads = threads;
      ResurgenceReport rep = edge_mode ? exact_edge_resurgence(in.graph, opts)
                                       : exact_cover_resurgence(in.graph, opts);
      if (json_out) {
        std::cout << report_to_json(rep, in.graph.vertices()) << "\n";
      } else {
        auto show = [&](const char* name, const ValueOrInterval& v) {
          std::cout << name << ": ";
          if (v.is_exact())
            std::cout << v.exact->str() << " (exact)\n";
          else
            std::cout << "[" << v.lower.str() << ", " << v.upper.str() << "]\n";
        };
        std::cout << "ideal: " << rep.ideal << "\n";
        show("rho", rep.rho);
        show("rho_a", rep.rho_a);
        for (const auto& p : rep.provenance) {
          std::cout << "  " << p.quantity << " " << p.bound << " " << p.value.str() << " via "
                    << p.tag;
          if (!p.inputs.empty()) std::cout << " [" << p.inputs << "]";
          std::cout << "\n";
        }
        for (const auto& w : rep.witnesses)
          std::cout << "  witness (" << w.s << ", " << w.t
                    << "): " << w.witness.str(in.graph.vertices()) << "\n";
        for (const auto& f : rep.flags) std::cout << "  note: " << f << "\n";
      }
      return rep.truncated ? kExitResourceGuard : kExitOk;
    }
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
