// Command-line front end: parse an instance, run a solver or verifier, and
// emit a plain-text or JSON report. Exit status: 0 success, 1 verdict
// failure (a guaranteed bound did not hold), 2 usage or input errors.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lec/connectivity.hpp"
#include "lec/edge_cover.hpp"
#include "lec/generators.hpp"
#include "lec/io.hpp"
#include "lec/kcs.hpp"
#include "lec/oracle.hpp"
#include "lec/polytope.hpp"

using namespace lec;
using nlohmann::json;

namespace {

class Report {
 public:
  explicit Report(const std::string& command) { j_["command"] = command; }

  void put(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
    j_[key] = value;
  }
  void put(const std::string& key, long long value) {
    rows_.emplace_back(key, std::to_string(value));
    j_[key] = value;
  }
  void put(const std::string& key, bool value) {
    rows_.emplace_back(key, value ? "yes" : "no");
    j_[key] = value;
  }
  void put(const std::string& key, const Rat& value) { put(key, value.str()); }
  void put(const std::string& key, const EdgeSet& s) {
    std::string out;
    json arr = json::array();
    for (EdgeId e : s.ids()) {
      if (!out.empty()) out += ' ';
      out += std::to_string(e);
      arr.push_back(e);
    }
    rows_.emplace_back(key, out.empty() ? "-" : out);
    j_[key] = arr;
  }

  void print(bool as_json, double ms) {
    rows_.emplace_back("elapsed_ms", std::to_string(ms));
    j_["elapsed_ms"] = ms;
    if (as_json) {
      std::cout << j_.dump(2) << "\n";
      return;
    }
    std::cout << j_["command"].get<std::string>() << "\n";
    for (const auto& [k, v] : rows_) std::cout << "  " << k << ": " << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  json j_;
};

GraphFile load_instance(const std::string& path, Report& rep) {
  GraphFile f = load_graph(path);
  rep.put("instance", path);
  rep.put("digest", instance_digest(f));
  rep.put("nodes", (long long)f.g.node_count());
  rep.put("edges", (long long)f.g.edge_count());
  rep.put("directed", f.g.directed());
  return f;
}

CostVector unit_costs(const MultiGraph& g) {
  return CostVector(g.edge_count(), Rat(1));
}

FracVector load_x(const std::string& spec, int m) {
  if (spec == "ones") return FracVector(m, Rat(1));
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open x-vector file " + spec);
  FracVector x;
  std::string tok;
  while (in >> tok) x.push_back(Rat::parse(tok));
  if ((int)x.size() != m)
    throw std::runtime_error("x-vector has " + std::to_string(x.size()) +
                             " entries, instance has " + std::to_string(m));
  return x;
}

void emit_graph(const GraphFile& f, const std::string& out) {
  if (out.empty())
    std::cout << serialize_graph(f);
  else
    save_graph(out, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact small-edge-cover and k-connected-subgraph toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON");

  std::string file, out_path, x_spec = "ones";
  int k = 0, ell = 0, m_budget = 0, n = 0, extra = 0, max_enum = 24;
  unsigned seed = 1;
  std::string beta_str = "1/2";
  bool full_enum = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance file")->required();
  };

  auto* cover = app.add_subcommand("cover", "minimum-size degree cover");
  add_file(cover);
  cover->add_option("--l", ell, "degree demand")->required();
  cover->add_option("--k", k, "edge connectivity for the cost bound");

  auto* cover_cost = app.add_subcommand("cover-cost",
                                        "minimum-cost degree cover");
  add_file(cover_cost);
  cover_cost->add_option("--l", ell)->required();
  cover_cost->add_option("--k", k);
  cover_cost->add_option("--max-enum", max_enum, "search cap on edge count");

  auto* kcs = app.add_subcommand("kcs", "k-connected spanning subgraph");
  add_file(kcs);
  kcs->add_option("--k", k)->required();

  auto* relaxed = app.add_subcommand("kcs-relaxed",
                                     "(k-1)-connected subgraph within opt(k)");
  add_file(relaxed);
  relaxed->add_option("--k", k)->required();

  auto* maxconn = app.add_subcommand("max-conn",
                                     "most-connected subgraph within a budget");
  add_file(maxconn);
  maxconn->add_option("--m", m_budget, "edge budget")->required();

  auto* conn = app.add_subcommand("conn", "edge and node connectivity");
  add_file(conn);

  auto* thm = app.add_subcommand("verify-thm1",
                                 "scaled cover-polytope membership");
  add_file(thm);
  thm->add_option("--k", k)->required();
  thm->add_option("--l", ell)->required();
  thm->add_option("--x", x_spec, "'ones' or a file of per-edge rationals");
  thm->add_option("--max-enum", max_enum, "node cap for the subset scan");
  thm->add_flag("--full", full_enum, "enumerate every constraint subset");

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* gh = gen->add_subcommand("harary", "circulant k-connected graph");
  gh->add_option("--k", k)->required();
  gh->add_option("--n", n)->required();
  gh->add_option("-o", out_path, "output file (stdout when absent)");
  auto* gr = gen->add_subcommand("random", "random k-edge-connected graph");
  gr->add_option("--k", k)->required();
  gr->add_option("--n", n)->required();
  gr->add_option("--extra", extra);
  gr->add_option("--seed", seed);
  gr->add_option("-o", out_path);
  auto* gb = gen->add_subcommand("beta", "metric-cost complete graph");
  gb->add_option("--n", n)->required();
  gb->add_option("--beta", beta_str, "rational in [1/2, 1)");
  gb->add_option("--seed", seed);
  gb->add_option("-o", out_path);

  auto* orc = app.add_subcommand("oracle", "brute-force reference answers");
  orc->require_subcommand(1);
  auto* oc = orc->add_subcommand("cover", "exhaustive cover optimum");
  add_file(oc);
  oc->add_option("--l", ell)->required();
  auto* ok_ = orc->add_subcommand("kcs", "exhaustive subgraph optimum");
  add_file(ok_);
  ok_->add_option("--k", k)->required();
  auto* om = orc->add_subcommand("max-conn", "exhaustive budget optimum");
  add_file(om);
  om->add_option("--m", m_budget)->required();
  auto* on = orc->add_subcommand("conn", "connectivity by cut enumeration");
  add_file(on);

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  int verdict_failures = 0;

  try {
    if (app.got_subcommand(cover)) {
      Report rep("cover");
      GraphFile f = load_instance(file, rep);
      CoverSpec spec(ell, f.g.directed());
      EdgeSet c = min_size_edge_cover(f.g, spec);
      rep.put("l", (long long)ell);
      rep.put("cover_size", (long long)c.count());
      rep.put("cover_edges", c);
      if (k > 0) {
        CoverBound b = corollary3_bound(f.g, unit_costs(f.g), k, ell);
        rep.put("k", (long long)k);
        rep.put("bound", b.value);
        rep.put("bound_case", std::string(b.bound_case == BoundCase::OddSmall
                                              ? "odd-small"
                                              : "even-or-large"));
        rep.put("bound_relaxed", b.relaxed_value);
        bool ok = Rat(c.count()) <= b.value;
        rep.put("bound_holds", ok);
        if (!ok) ++verdict_failures;
      }
      rep.print(as_json, elapsed());
    } else if (app.got_subcommand(cover_cost)) {
      Report rep("cover-cost");
      GraphFile f = load_instance(file, rep);
      CostVector c = f.costs ? *f.costs : unit_costs(f.g);
      CoverSpec spec(ell, f.g.directed());
      CoverResult r = min_cost_edge_cover(f.g, c, spec, max_enum);
      rep.put("l", (long long)ell);
      rep.put("cover_cost", r.cost);
      rep.put("cover_edges", r.edges);
      if (k > 0) {
        CoverBound b = corollary3_bound(f.g, c, k, ell);
        rep.put("k", (long long)k);
        rep.put("bound", b.value);
        bool ok = r.cost <= b.value;
        rep.put("bound_holds", ok);
        if (!ok) ++verdict_failures;
      }
      rep.print(as_json, elapsed());
    } else if (app.got_subcommand(kcs) || app.got_subcommand(relaxed)) {
      bool is_relaxed = app.got_subcommand(relaxed);
      Report rep(is_relaxed ? "kcs-relaxed" : "kcs");
      GraphFile f = load_instance(file, rep);
      KcsSolution sol = is_relaxed
                            ? kcs_relaxed(f.g, k)
                            : algorithm1(f.g, k, f.costs);
      rep.put("k", (long long)k);
      rep.put("cover_size", (long long)sol.cover.count());
      rep.put("augmentation_size", (long long)sol.augmentation.count());
      rep.put("total_size", (long long)sol.total_size);
      rep.put("total_cost", sol.total_cost);
      rep.put("lower_bound", sol.lower_bound);
      rep.put("solution_edges", sol.solution());
      rep.put("augmentation_is_forest", sol.forest_ok);
      if (!sol.forest_ok) ++verdict_failures;
      rep.print(as_json, elapsed());
    } else if (app.got_subcommand(maxconn)) {
      Report rep("max-conn");
      GraphFile f = load_instance(file, rep);
      BudgetSolution sol = max_connectivity_m_edge_subgraph(f.g, m_budget);
      rep.put("budget", (long long)m_budget);
      rep.put("k_achieved", (long long)sol.k_achieved);
      rep.put("edges_used", (long long)sol.m_used);
      rep.put("subgraph_edges", sol.subgraph);
      bool ok = is_k_connected(edge_subgraph(f.g, sol.subgraph), sol.k_achieved);
      rep.put("connectivity_verified", ok);
      if (!ok) ++verdict_failures;
      rep.print(as_json, elapsed());
    } else if (app.got_subcommand(conn)) {
      Report rep("conn");
      GraphFile f = load_instance(file, rep);
      ConnReport e = edge_connectivity(f.g);
      ConnReport v = node_connectivity(f.g);
      rep.put("edge_connectivity", (long long)e.value);
      rep.put("min_cut_edges", e.cut_edges);
      rep.put("node_connectivity", (long long)v.value);
      std::string sep;
      for (NodeId s : v.separator) sep += (sep.empty() ? "" : " ") + std::to_string(s);
      rep.put("separator", sep.empty() ? "-" : sep);
      rep.print(as_json, elapsed());
    } else if (app.got_subcommand(thm)) {
      Report rep("verify-thm1");
      GraphFile f = load_instance(file, rep);
      FracVector x = load_x(x_spec, f.g.edge_count());
      PolytopeOptions opts;
      opts.max_nodes = max_enum;
      opts.full_enumeration = full_enum;
      Theorem1Report r = verify_theorem1(f.g, x, k, ell, opts);
      rep.put("k", (long long)k);
      rep.put("l", (long long)ell);
      rep.put("x_total", r.xE);
      rep.put("mu", r.mu.mu);
      rep.put("mu_case", std::string(r.mu.mu_case == MuCase::OddSmall
                                         ? "odd-small"
                                         : "even-or-large"));
      rep.put("membership", r.primary.ok);
      if (r.relaxed) rep.put("relaxed_membership", r.relaxed->ok);
      if (!r.ok()) {
        const MembershipVerdict& bad =
            r.primary.ok ? *r.relaxed : r.primary;
        rep.put("violated_s_mask", (long long)bad.violation->s);
        rep.put("violated_f", bad.violation->f);
        rep.put("violation_lhs", bad.violation->lhs);
        rep.put("violation_rhs", bad.violation->rhs);
        ++verdict_failures;
      }
      rep.print(as_json, elapsed());
    } else if (app.got_subcommand(gen)) {
      if (gen->got_subcommand(gh)) {
        emit_graph({harary(k, n), std::nullopt}, out_path);
      } else if (gen->got_subcommand(gr)) {
        emit_graph({random_k_edge_connected(n, k, extra, seed), std::nullopt},
                   out_path);
      } else {
        BetaMetricInstance inst =
            beta_metric_instance(n, Rat::parse(beta_str), seed);
        emit_graph({inst.g, inst.c}, out_path);
      }
    } else if (app.got_subcommand(orc)) {
      Report rep("oracle");
      GraphFile f = load_instance(file, rep);
      if (orc->got_subcommand(oc)) {
        CostVector c = f.costs ? *f.costs : unit_costs(f.g);
        auto a = oracle::brute_min_cost_edge_cover(
            f.g, c, CoverSpec(ell, f.g.directed()));
        rep.put("l", (long long)ell);
        rep.put("optimal_cost", a.cost);
        rep.put("witness_edges", a.witness);
      } else if (orc->got_subcommand(ok_)) {
        auto a = oracle::brute_opt_kcs(f.g, k, f.costs);
        rep.put("k", (long long)k);
        rep.put("optimal_size", (long long)a.size);
        rep.put("optimal_cost", a.cost);
        rep.put("witness_edges", a.witness);
      } else if (orc->got_subcommand(om)) {
        rep.put("budget", (long long)m_budget);
        rep.put("best_connectivity",
                (long long)oracle::brute_max_conn_m_edges(f.g, m_budget));
      } else {
        rep.put("edge_connectivity",
                (long long)oracle::brute_edge_connectivity(f.g));
        rep.put("node_connectivity",
                (long long)oracle::brute_node_connectivity(f.g));
      }
      rep.print(as_json, elapsed());
    }
  } catch (const hypothesis_error& e) {
    std::cerr << "input error: " << e.what() << " (cut value " << e.value.str()
              << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return verdict_failures == 0 ? 0 : 1;
}
