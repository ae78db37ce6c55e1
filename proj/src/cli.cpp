#include "treenergy/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treenergy/char_poly.hpp"
#include "treenergy/energy.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/errors.hpp"
#include "treenergy/extremal.hpp"
#include "treenergy/quasi_order.hpp"
#include "treenergy/tree_spec.hpp"
#include "treenergy/verify.hpp"

namespace treenergy {

namespace {

using nlohmann::json;

std::string fmt_energy(const EnergyValue& e) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f +/- %.3g", e.midpoint, e.radius);
  return buf;
}

CutEdge parse_edge(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == s.size())
    throw InvalidSpec("edge must be given as u-v: " + s);
  return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

std::vector<std::string> read_input_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string cache_dir_from_env() {
  const char* dir = std::getenv("TREENERGY_CACHE_DIR");
  return dir ? dir : "";
}

int cmd_charpoly(const std::vector<std::string>& inputs, bool as_json) {
  json out = json::array();
  for (const std::string& text : inputs) {
    Forest f = parse_forest(text);
    CharPolyPair cp = char_poly_pair(f);
    if (as_json) {
      out.push_back({{"input", text},
                     {"n", cp.n},
                     {"phi", cp.phi.to_string()},
                     {"phitilde", cp.phi_tilde.to_string()}});
    } else {
      std::cout << "tree: " << text << " (n=" << cp.n << ")\n";
      std::cout << "phi: " << cp.phi.to_string() << "\n";
      std::cout << "phitilde: " << cp.phi_tilde.to_string() << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_energy(const std::vector<std::string>& inputs, double tol, bool as_json) {
  json out = json::array();
  for (const std::string& text : inputs) {
    Forest f = parse_forest(text);
    EnergyValue e = energy(f, tol);
    if (as_json) {
      out.push_back({{"input", text},
                     {"n", f.order()},
                     {"energy", e.midpoint},
                     {"radius", e.radius}});
    } else {
      std::cout << text << ": energy " << fmt_energy(e) << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, bool as_json) {
  Forest fa = parse_forest(a), fb = parse_forest(b);
  QuasiOrderVerdict v = compare_trees(fa, fb);
  if (as_json) {
    json out{{"a", a},
             {"b", b},
             {"relation", relation_name(v.relation)},
             {"less_witness_power", v.less_witness},
             {"greater_witness_power", v.greater_witness}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << relation_name(v.relation) << "\n";
    if (v.less_witness >= 0)
      std::cout << "  coefficient of x^" << v.less_witness << " strictly smaller in A\n";
    if (v.greater_witness >= 0)
      std::cout << "  coefficient of x^" << v.greater_witness << " strictly larger in A\n";
    std::cout << "  phitilde(A) = " << phi_tilde(fa).to_string() << "\n";
    std::cout << "  phitilde(B) = " << phi_tilde(fb).to_string() << "\n";
  }
  return 0;
}

int cmd_prove_dominance(const std::string& gs, const std::string& egs, const std::string& hs,
                        const std::string& ehs, const std::vector<std::string>& double_edges,
                        double tol, bool as_json) {
  Forest g = parse_forest(gs), h = parse_forest(hs);
  CutEdge eg = parse_edge(egs), eh = parse_edge(ehs);
  json out;
  std::string text;
  if (!double_edges.empty()) {
    CutEdge e2 = parse_edge(double_edges[0]), f2 = parse_edge(double_edges[1]);
    auto cert = family_compare_double(g, eg, e2, h, eh, f2);
    if (cert) {
      text = cert->to_text();
      out = {{"method", "family-quasi-order-double"}, {"certificate", text}};
    } else {
      text = "Inconclusive: a base comparison is not dominated\n";
      out = {{"method", "family-quasi-order-double"}, {"result", "Inconclusive"}};
    }
  } else {
    auto cert = family_compare_single(g, eg, h, eh);
    if (cert) {
      text = cert->to_text();
      out = {{"method", "family-quasi-order"}, {"certificate", text}};
    } else {
      DominanceResult dr = classify_dominance(g, eg, h, eh, tol);
      text = dr.to_text();
      out = {{"method", "direct-energy-comparison"},
             {"mode", dominance_mode_name(dr.mode)},
             {"w", dr.w.to_string()},
             {"gap_lower_bound", dr.gap_lower_bound.midpoint},
             {"gap_lower_bound_radius", dr.gap_lower_bound.radius},
             {"certifies_positive_gap", dr.certifies_positive_gap()}};
    }
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

int cmd_rank(int n, int top, const std::string& format, double tol, int jobs) {
  RankingOptions opts;
  opts.tol = tol;
  opts.jobs = jobs;
  opts.cache_dir = cache_dir_from_env();
  std::vector<RankingEntry> entries = rank_by_energy(n, top, opts);
  char buf[96];
  if (format == "csv") {
    std::cout << "rank,code,spec,energy,radius,tie_group\n";
    for (const auto& e : entries) {
      std::snprintf(buf, sizeof(buf), "%.12f,%.3g", e.energy.midpoint, e.energy.radius);
      std::cout << e.rank << "," << e.code << "," << (e.spec ? e.spec->to_string() : "") << ","
                << buf << "," << e.tie_group << "\n";
    }
  } else if (format == "json") {
    json out = json::array();
    for (const auto& e : entries) {
      out.push_back({{"rank", e.rank},
                     {"code", e.code},
                     {"spec", e.spec ? e.spec->to_string() : ""},
                     {"energy", e.energy.midpoint},
                     {"radius", e.energy.radius},
                     {"tie_group", e.tie_group},
                     {"phitilde", e.phi_tilde.to_string()}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : entries) {
      std::snprintf(buf, sizeof(buf), "%-4d %-14s E=%.12f +/- %.3g  tie=%d", e.rank,
                    e.spec ? e.spec->to_string().c_str() : "(unnamed)", e.energy.midpoint,
                    e.energy.radius, e.tie_group);
      std::cout << buf << "  " << e.code << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(int n, const std::string& format, bool count_only) {
  if (count_only) {
    std::cout << free_tree_count(n) << "\n";
    return 0;
  }
  FreeTreeEnumerator en(n);
  while (auto t = en.next()) {
    if (format == "g6") {
      std::cout << to_graph6(*t) << "\n";
    } else if (format == "spec") {
      auto spec = recognize(*t);
      std::cout << (spec ? spec->to_string() : canonical_code(*t)) << "\n";
    } else {
      auto spec = recognize(*t);
      std::cout << canonical_code(*t) << "\t" << (spec ? spec->to_string() : "") << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& theorem, int n, bool as_json) {
  std::vector<std::pair<std::string, int>> targets;
  if (theorem.empty()) {
    for (const auto& entry : verification_catalogue())
      targets.emplace_back(entry.id, n > 0 ? std::max(n, entry.default_n) : entry.default_n);
  } else {
    int use_n = n;
    if (use_n <= 0) {
      for (const auto& entry : verification_catalogue()) {
        if (entry.id == theorem) use_n = entry.default_n;
      }
      if (use_n <= 0) throw Error("unknown verification id: " + theorem);
    }
    targets.emplace_back(theorem, use_n);
  }
  bool all_pass = true;
  json out = json::array();
  for (const auto& [id, use_n] : targets) {
    VerificationReport rep = verify_theorem(id, use_n);
    all_pass = all_pass && rep.passed();
    if (as_json) {
      json items = json::array();
      for (const auto& it : rep.items) {
        items.push_back({{"label", it.label},
                         {"expected", it.expected},
                         {"actual", it.actual},
                         {"pass", it.pass}});
      }
      out.push_back(
          {{"id", rep.id}, {"n", rep.n}, {"passed", rep.passed()}, {"items", items}});
    } else {
      std::cout << rep.to_text() << "\n";
    }
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (all_pass ? "verification suite: PASS" : "verification suite: FAIL") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact characteristic polynomials, certified energies and extremal-order "
               "verification for trees"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string spec_arg, input_file;
  double tol = 1e-9;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "phi and phitilde of a tree spec");
  charpoly_cmd->add_option("spec", spec_arg, "tree spec or graph6");
  charpoly_cmd->add_option("--input", input_file, "newline-delimited spec/graph6 file");

  auto* energy_cmd = app.add_subcommand("energy", "certified graph energy");
  energy_cmd->add_option("spec", spec_arg, "tree spec or graph6");
  energy_cmd->add_option("--input", input_file, "newline-delimited spec/graph6 file");
  energy_cmd->add_option("--tol", tol, "certified radius bound")->capture_default_str();

  std::string a_arg, b_arg;
  auto* compare_cmd = app.add_subcommand("compare", "coefficient-wise phitilde comparison");
  compare_cmd->add_option("a", a_arg, "first tree")->required();
  compare_cmd->add_option("b", b_arg, "second tree")->required();

  std::string g_arg, eg_arg, h_arg, eh_arg;
  std::vector<std::string> double_edges;
  double dom_tol = 1e-7;
  auto* prove_cmd = app.add_subcommand(
      "prove-dominance", "certify E(H(k)) >= E(G(k)) + gap for a subdivision family pair");
  prove_cmd->add_option("G", g_arg, "tree G (expected smaller)")->required();
  prove_cmd->add_option("EG", eg_arg, "cut edge of G as u-v")->required();
  prove_cmd->add_option("H", h_arg, "tree H (expected larger)")->required();
  prove_cmd->add_option("EH", eh_arg, "cut edge of H as u-v")->required();
  prove_cmd->add_option("--double", double_edges, "second cut edges e2 f2 (two-parameter family)")
      ->expected(2);
  prove_cmd->add_option("--tol", dom_tol, "bound tolerance")->capture_default_str();

  int n = 0, top = 10, jobs = 1;
  std::string out_format = "text";
  auto* rank_cmd = app.add_subcommand("rank", "exhaustive certified energy ranking");
  rank_cmd->add_option("--n", n, "tree order")->required();
  rank_cmd->add_option("--top", top, "entries to return")->capture_default_str();
  rank_cmd->add_option("--out", out_format, "text|csv|json")->capture_default_str();
  rank_cmd->add_option("--tol", tol, "energy tolerance")->capture_default_str();
  rank_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  int enum_n = 0;
  std::string enum_format = "both";
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "stream all free trees of order n");
  enum_cmd->add_option("--n", enum_n, "tree order")->required();
  enum_cmd->add_option("--format", enum_format, "both|spec|g6")->capture_default_str();
  enum_cmd->add_flag("--count", count_only, "print only the class count");

  std::string theorem;
  int verify_n = 0;
  auto* verify_cmd =
      app.add_subcommand("verify-paper", "re-run the catalogued extremal-energy claims");
  verify_cmd->add_option("--theorem", theorem, "single claim id (e.g. thm5.5)");
  verify_cmd->add_option("--n", verify_n, "order to verify at (default: per-claim)");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<std::string> inputs;
    if (!input_file.empty()) inputs = read_input_lines(input_file);
    if (!spec_arg.empty()) inputs.insert(inputs.begin(), spec_arg);

    if (charpoly_cmd->parsed()) {
      if (inputs.empty()) throw Error("charpoly needs a spec argument or --input file");
      return cmd_charpoly(inputs, as_json);
    }
    if (energy_cmd->parsed()) {
      if (inputs.empty()) throw Error("energy needs a spec argument or --input file");
      return cmd_energy(inputs, tol, as_json);
    }
    if (compare_cmd->parsed()) return cmd_compare(a_arg, b_arg, as_json);
    if (prove_cmd->parsed())
      return cmd_prove_dominance(g_arg, eg_arg, h_arg, eh_arg, double_edges, dom_tol, as_json);
    if (rank_cmd->parsed()) return cmd_rank(n, top, out_format, tol, jobs);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_n, enum_format, count_only);
    if (verify_cmd->parsed()) return cmd_verify(theorem, verify_n, as_json);
    throw Error("no subcommand given");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"treenergy"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace treenergy
