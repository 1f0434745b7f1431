#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <iostream>
#include <sstream>

#include "sic/canonical.hpp"
#include "sic/constructions.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/graph_io.hpp"
#include "sic/si.hpp"
#include "sic/solvers.hpp"
#include "sic/structure.hpp"
#include "sic/suites.hpp"
#include "sic/treewidth.hpp"
#include "sic/witness_io.hpp"

using namespace sic;

namespace {

std::string join(const VertexList& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not an integer list: " + text);
    }
  }
  return out;
}

// A forbidden graph is a file, or family:params such as C:4 or spider:1,1,1.
Graph graph_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  auto colon = arg.find(':');
  if (colon == std::string::npos) return gen_named(arg, {});
  return gen_named(arg.substr(0, colon), parse_ints(arg.substr(colon + 1)));
}

std::vector<Graph> graph_list(const std::string& arg) {
  // Entries are comma-separated; bare integers continue the parameters of
  // the entry before them, so "spider:1,1,1,C:4" is two graphs.
  std::vector<std::string> items;
  std::stringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    bool number = !item.empty() && item.find_first_not_of("0123456789") == std::string::npos;
    if (number && !items.empty() && items.back().find(':') != std::string::npos) items.back() += "," + item;
    else if (!item.empty()) items.push_back(item);
  }
  std::vector<Graph> out;
  for (const auto& i : items) out.push_back(graph_arg(i));
  return out;
}

void emit_graph(const Graph& g, const std::string& out) {
  if (out.empty()) std::cout << serialize_graph(g);
  else write_graph_file(out, g);
}

void print_certificate(const Certificate& c) {
  std::cout << "RESULT certificate=" << certificate_kind(c) << '\n';
  if (auto* r = std::get_if<Refutation>(&c)) std::cout << "RESULT case=" << r->reason << '\n';
}

// Constructions by name, with their numeric ids as aliases.
const std::map<std::string, std::string> kConstructions = {
    {"biclique-path", "3.2"}, {"peel", "3.3"},        {"xy", "3.5"},
    {"biclique-vertex", "3.6"}, {"clique-paths", "3.8"}, {"linegraph-spider", "3.10"}};

SiWitness make_witness(std::string lemma, const std::vector<int>& p, std::uint64_t seed) {
  if (auto it = kConstructions.find(lemma); it != kConstructions.end()) lemma = it->second;
  Rng rng(seed);
  auto param = [&](std::size_t i, int fallback) { return i < p.size() ? p[i] : fallback; };
  if (lemma == "3.2") return witness_biclique_path(random_biclique_path_instance(rng, param(0, 1)));
  if (lemma == "3.3") {
    auto inst = random_peel_instance(rng);
    return witness_peel(inst.h, inst.a, inst.b, inst.v, inst.keep);
  }
  if (lemma == "3.5") {
    const int t = param(0, 1);
    return witness_xy_to_tripods(random_xy_instance(rng, t, param(1, 0) ? 'Y' : 'X', param(2, 0)), t);
  }
  if (lemma == "3.6") {
    const int c = param(1, 0);
    if (c < 0 || c > 2) throw PreconditionError("biclique-vertex case must be 0, 1 or 2");
    auto inst = random_biclique_vertex_instance(rng, param(0, 3), static_cast<BicliqueVertexCase>(c));
    return witness_biclique_plus_vertex(inst.h, inst.a, inst.b, inst.v, inst.p).witness;
  }
  if (lemma == "3.8") return witness_clique_three_paths(random_clique_three_paths_instance(rng, param(0, 1)));
  if (lemma == "3.10") return witness_linegraph_spider(param(0, 1), param(1, 2));
  std::string names;
  for (const auto& [name, id] : kConstructions) names += " " + name + "|" + id;
  throw PreconditionError("unknown construction " + lemma + "; known:" + names);
}

int default_threads() {
  if (const char* env = std::getenv("SIC_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"si-subgraph toolkit: generation, analysis, witnesses, solvers and verification suites"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for the batch loops");

  // gen
  std::string family, out;
  std::vector<int> params;
  auto* gen = app.add_subcommand("gen", "write a named graph");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("-o,--out", out, "file (.g6 for graph6, otherwise edge list)");

  // analyze / tw
  std::string file;
  int t = 1;
  auto* analyze = app.add_subcommand("analyze", "structure report");
  analyze->add_option("file", file)->required();
  analyze->add_option("--t", t);
  bool upper = false, show_bags = false;
  auto* tw = app.add_subcommand("tw", "treewidth");
  tw->add_option("file", file)->required();
  tw->add_flag("--upper", upper, "min-fill upper bound instead of the exact value");
  tw->add_flag("--bags", show_bags, "print the decomposition");

  // mwis / mim
  std::string weights;
  bool trace = false, brute = false;
  auto* mwis_cmd = app.add_subcommand("mwis", "maximum weight independent set");
  mwis_cmd->add_option("file", file)->required();
  mwis_cmd->add_option("--weights", weights, "one rational per line, index order");
  mwis_cmd->add_flag("--trace", trace, "print the decomposition trace");
  mwis_cmd->add_flag("--brute", brute, "exhaustive search instead of the pipeline");
  auto* mim = app.add_subcommand("mim", "maximum induced matching (exhaustive)");
  mim->add_option("file", file)->required();

  // si-check
  std::string host_file, target, witness_out;
  int copies = 0;
  auto* si = app.add_subcommand("si-check", "is the target an si-subgraph of the host");
  si->add_option("host", host_file)->required();
  si->add_option("target", target, "file or family:params")->required();
  si->add_option("--witness", witness_out, "write the witness here when one exists");
  si->add_option("--naive", copies, "also run the definitional search with this many copies");

  // witness
  std::string lemma, lemma_params, witness_file;
  std::uint64_t seed = 1;
  auto* witness = app.add_subcommand("witness", "build or check witnesses");
  witness->require_subcommand(1);
  auto* make = witness->add_subcommand("make", "construct a witness");
  make->add_option("--lemma,--construction", lemma, "construction name or id")->required();
  make->add_option("--params", lemma_params);
  make->add_option("--seed", seed);
  make->add_option("-o,--out", witness_file);
  auto* check = witness->add_subcommand("verify", "evaluate a witness file");
  check->add_option("file", witness_file)->required();

  // certify
  std::string which;
  auto* certify = app.add_subcommand("certify", "module, clique-number or refutation certificates");
  certify->add_option("which", which, "biclique or clique")->required();
  certify->add_option("file", file)->required();
  certify->add_option("--t", t);

  // classify / probe
  std::string forbidden, reference, report;
  int nmax = 5;
  auto* classify = app.add_subcommand("classify", "tripod or S_k verdict for a forbidden set");
  classify->add_option("--forbidden", forbidden)->required();
  auto* probe = app.add_subcommand("probe", "membership table of small graphs");
  probe->add_option("--forbidden", forbidden)->required();
  probe->add_option("--nmax", nmax);
  probe->add_option("--reference", reference, "compare the si column with Free(reference)");
  probe->add_option("--report", report);

  // verify
  std::string suite;
  int q = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--q", q);
  verify->add_option("--report", report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // Results are held back until the command succeeds, so a failing command
  // prints nothing on stdout.
  std::ostringstream held;
  std::streambuf* real = std::cout.rdbuf(held.rdbuf());
  auto release = [&](int code) {
    std::cout.rdbuf(real);
    if (code == 0 || code == 1) std::cout << held.str();
    return code;
  };
  const int code = [&]() -> int {
  try {
    if (*gen) {
      Graph g = gen_named(family, params);
      emit_graph(g, out);
      if (!out.empty()) std::cout << "RESULT order=" << g.order() << " size=" << g.size() << '\n';
      return 0;
    }
    if (*analyze) {
      Graph g = read_graph_file(file);
      std::cout << "order=" << g.order() << "\nsize=" << g.size() << "\nconnected=" << is_connected(g)
                << "\ncut_vertices=" << join(cut_vertices(g)) << "\nclique_number=" << clique_number(g)
                << "\nmodular_root=" << to_string(modular_decomposition(g).nodes[modular_decomposition(g).root].kind)
                << '\n';
      auto small = clique_cutsets_upto(g, 2);
      std::cout << "clique_cutsets_le2=" << small.size() << '\n';
      auto rep = report_theorem39(g, t);
      std::cout << "twin_free=" << rep.twin_free << "\ncomplete=" << rep.complete << '\n';
      for (const auto& n : rep.notes) std::cout << "note " << n << '\n';
      int width = g.order() <= kExactTreewidthMaxOrder ? exact_treewidth(g).width : tw_upper_bound(g).width;
      std::cout << "RESULT width=" << width << '\n';
      if (rep.has_kr) std::cout << "RESULT has_K" << rep.r << '=' << *rep.has_kr << '\n';
      if (rep.has_linegraph) std::cout << "RESULT has_linegraph=" << *rep.has_linegraph << '\n';
      return 0;
    }
    if (*tw) {
      Graph g = read_graph_file(file);
      TreewidthResult r = upper ? tw_upper_bound(g) : exact_treewidth(g);
      if (show_bags)
        for (std::size_t i = 0; i < r.decomposition.bags.size(); ++i)
          std::cout << "bag " << i << ": " << join(r.decomposition.bags[i]) << '\n';
      std::cout << "RESULT width=" << r.width << (upper ? " bound=upper" : " bound=exact") << '\n';
      return 0;
    }
    if (*mwis_cmd) {
      Graph g = read_graph_file(file);
      WeightedGraph wg = weights.empty() ? WeightedGraph::unit(g)
                                         : WeightedGraph(g, parse_weights(read_text_file(weights)));
      Score best;
      if (brute) {
        best = mwis_bruteforce(wg);
      } else {
        MwisResult r = mwis(wg);
        if (trace) std::cout << format_trace(r.trace);
        best = r.best;
        std::cout << "RESULT max_width=" << max_trace_width(r.trace) << '\n';
      }
      std::cout << "RESULT weight=" << format_weight(best.weight) << "\nRESULT set=" << join(best.set) << '\n';
      return 0;
    }
    if (*mim) {
      auto m = mim_bruteforce(read_graph_file(file));
      std::string es;
      for (auto [u, v] : m.edges) es += (es.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
      std::cout << "RESULT size=" << m.edges.size() << "\nRESULT edges=" << es << '\n';
      return 0;
    }
    if (*si) {
      Graph g = read_graph_file(host_file), h = graph_arg(target);
      SiResult r = si_oracle(g, h);
      if (r.holds && r.witness && !witness_out.empty()) write_text_file(witness_out, serialize_witness(*r.witness));
      std::cout << "RESULT holds=" << (r.holds ? "true" : "false") << "\nRESULT patterns=" << r.patterns_seen << '\n';
      if (copies > 0) {
        bool naive = si_oracle_naive(g, h, copies, std::min(2 * g.order(), 11));
        std::cout << "RESULT naive=" << (naive ? "true" : "false") << '\n';
      }
      return 0;
    }
    if (*make) {
      SiWitness w = make_witness(lemma, lemma_params.empty() ? std::vector<int>{} : parse_ints(lemma_params), seed);
      std::string text = serialize_witness(w);
      if (witness_file.empty()) std::cout << text;
      else write_text_file(witness_file, text);
      std::cout << "RESULT host_order=" << w.host.order() << " copies=" << w.maps.size()
                << " claimed_order=" << w.claimed.order() << '\n';
      return 0;
    }
    if (*check) {
      SiWitness w = parse_witness(read_text_file(witness_file));
      std::string why;
      bool ok = verify_witness(w, &why);
      if (!ok) std::cout << "diagnostic " << why << '\n';
      std::cout << "RESULT verified=" << (ok ? "true" : "false") << '\n';
      return ok ? 0 : 1;
    }
    if (*certify) {
      Graph g = read_graph_file(file);
      if (which == "biclique") print_certificate(certify_theorem31(g, t));
      else if (which == "clique") print_certificate(certify_theorem37(g, t));
      else throw PreconditionError("certify expects biclique or clique");
      return 0;
    }
    if (*classify) {
      auto m = graph_list(forbidden);
      DichotomyVerdict v = dichotomy_classify(m);
      if (v.poly) {
        std::cout << "RESULT verdict=POLY\nRESULT index=" << v.index << "\nRESULT t=" << v.t
                  << "\nRESULT embedding=" << join(v.embedding->map) << '\n';
      } else {
        for (std::size_t i = 0; i < v.obstructions.size(); ++i)
          std::cout << "obstruction " << i << ' ' << v.obstructions[i] << '\n';
        std::cout << "RESULT verdict=HARD\nRESULT r=" << v.r << '\n';
      }
      return 0;
    }
    if (*probe) {
      auto m = graph_list(forbidden);
      ProbeReport rep = class_probe(m, nmax);
      std::ostringstream table;
      table << "key induced subgraph si\n";
      for (const auto& row : rep.rows) table << row.key << ' ' << row.induced << ' ' << row.subgraph << ' ' << row.si << '\n';
      if (report.empty()) std::cout << table.str();
      else write_text_file(report, table.str());
      std::cout << "RESULT classes=" << rep.rows.size() << '\n';
      if (!reference.empty()) {
        auto bad = probe_mismatches(rep, Relation::Si, graph_list(reference));
        for (const auto& k : bad) std::cout << "mismatch " << k << '\n';
        std::cout << "RESULT mismatches=" << bad.size() << '\n';
      }
      return 0;
    }
    if (*verify) {
      SuiteOptions o;
      o.seed = seed;
      o.q = q;
      o.threads = threads;
      o.timings = &std::cerr;
      SuiteReport rep = run_suite(suite, o);
      if (report.empty()) std::cout << rep.text();
      else {
        write_text_file(report, rep.text());
        std::cout << "RESULT suite=" << suite << " pass=" << (rep.pass() ? "true" : "false") << '\n';
      }
      return rep.pass() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
  }();
  return release(code);
}
