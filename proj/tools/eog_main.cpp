// Command-line front end. All logic lives in the library; the subcommands are
// thin adapters over it. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include "eog/bruteforce.hpp"
#include "eog/canonical.hpp"
#include "eog/constructions.hpp"
#include "eog/containment.hpp"
#include "eog/core.hpp"
#include "eog/dsword.hpp"
#include "eog/matrix.hpp"
#include "eog/orderchrom.hpp"
#include "eog/search.hpp"
#include "eog/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

namespace {

using nlohmann::json;
using namespace eog;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<int> digits_of(const std::string& s) {
  std::vector<int> perm;
  for (char c : s) {
    if (c < '1' || c > '9') throw CLI::ValidationError("pattern digits must be 1..9");
    perm.push_back(c - '0');
  }
  return perm;
}

// pattern mini-language: path:132, cycle:1243, file:PATH.eog, d4, k9, knncan:N
EdgeOrderedGraph parse_pattern(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "path") return path_pattern(digits_of(rest));
  if (head == "cycle") return cycle_pattern(digits_of(rest));
  if (head == "file") return parse_eog(read_file(rest));
  if (head == "knncan") return knn_can(std::stoi(rest)).graph;
  if (text == "d4") return d_graph(4);
  if (text == "k9") return k9_labeling();
  if (head == "d") return d_graph(std::stoi(rest));
  throw CLI::ValidationError("unknown pattern '" + text + "'");
}

json eog_json(const EdgeOrderedGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return json{{"n", g.n}, {"m", g.edge_count()}, {"edges", edges}};
}

double budget_secs_from_env(double fallback) {
  if (const char* env = std::getenv("EOG_BUDGET_SECS")) {
    try {
      return std::stod(env);
    } catch (...) {
    }
  }
  return fallback;
}

struct Options {
  bool as_json = false;
  int threads = 1;
};

int cmd_lex(const Options& opt, int n, const std::vector<std::string>& pats,
            double secs, const std::string& out_path) {
  std::vector<EdgeOrderedGraph> family;
  for (const auto& s : pats) family.push_back(parse_pattern(s));
  SearchBudget budget;
  budget.seconds = budget_secs_from_env(secs);
  budget.threads = opt.threads;
  LexResult r = lex_exact(n, family, budget);
  if (opt.as_json) {
    json j{{"command", "lex"},
           {"n", n},
           {"value", r.value},
           {"exact", r.exact},
           {"nodes", r.nodes},
           {"witness", eog_json(r.witness)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << r.value << '\n';
    if (!r.exact) std::cout << "status lower-bound (budget exhausted)\n";
    std::cout << "witness\n" << serialize_eog(r.witness);
  }
  if (!out_path.empty()) write_file(out_path, serialize_eog(r.witness));
  return 0;
}

int cmd_contains(const Options& opt, const std::string& host_s,
                 const std::string& pat_s) {
  EdgeOrderedGraph host = parse_pattern(host_s);
  EdgeOrderedGraph pat = parse_pattern(pat_s);
  auto emb = contains(host, pat);
  if (opt.as_json) {
    json j{{"command", "contains"}, {"contained", emb.has_value()}};
    if (emb) {
      j["vertex_map"] = emb->vertex_map;
      j["edge_map"] = emb->edge_map;
    }
    std::cout << j.dump() << '\n';
  } else if (emb) {
    std::cout << "contained\n";
    std::cout << "vertex-map";
    for (int v : emb->vertex_map) std::cout << ' ' << v;
    std::cout << "\nedge-map";
    for (int e : emb->edge_map) std::cout << ' ' << e + 1;
    std::cout << '\n';
  } else {
    std::cout << "avoids\n";
  }
  return 0;
}

int cmd_can_avoid(const Options& opt, const std::string& shape_s,
                  const std::vector<std::string>& pats) {
  EdgeOrderedGraph shape = parse_pattern(shape_s);
  std::vector<EdgeOrderedGraph> family;
  for (const auto& s : pats) family.push_back(parse_pattern(s));
  auto labeling = can_avoid(shape, family);
  if (opt.as_json) {
    json j{{"command", "can-avoid"}, {"avoidable", labeling.has_value()}};
    if (labeling) j["labeling"] = eog_json(*labeling);
    std::cout << j.dump() << '\n';
  } else if (labeling) {
    std::cout << "avoidable\n" << serialize_eog(*labeling);
  } else {
    std::cout << "cannot-avoid\n";
  }
  return 0;
}

int cmd_chi(const Options& opt, const std::vector<std::string>& pats, int kmax) {
  Family family;
  for (const auto& s : pats) family.push_back(parse_pattern(s));
  ChiResult r = order_chromatic(family, kmax);
  if (opt.as_json) {
    json j{{"command", "chi"}, {"kmax", kmax}};
    switch (r.kind) {
      case ChiResult::Kind::Exactly: j["result"] = "exactly"; j["k"] = r.k; break;
      case ChiResult::Kind::ExceedsBudget:
        j["result"] = "exceeds-budget";
        j["k"] = r.k;
        break;
      case ChiResult::Kind::Infinite: j["result"] = "infinite"; break;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << r.to_string() << '\n';
  }
  return 0;
}

EdgeOrderedGraph parse_construct(const std::string& text, bool& sided,
                                 SidedPattern& sided_out) {
  sided = false;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto num = [&]() { return std::stoi(rest); };
  if (head == "star_plus_matching") return star_plus_matching(num());
  if (head == "disjoint_k4") return disjoint_k4(num());
  if (head == "recursive_g") return recursive_g(num());
  if (head == "recursive_g_prime") return recursive_g_prime(num());
  if (head == "d") return d_graph(num());
  if (text == "k9") return k9_labeling();
  if (head == "explower") return explower_order(num());
  if (head == "clique") {
    auto colon2 = rest.find(':');
    if (colon2 == std::string::npos)
      throw CLI::ValidationError("clique:KIND:N expected");
    std::string kind_s = rest.substr(0, colon2);
    int n = std::stoi(rest.substr(colon2 + 1));
    for (CliqueKind kind : kAllCliqueKinds)
      if (kind_s == to_string(kind)) return canonical_clique(n, kind);
    throw CLI::ValidationError("unknown clique kind '" + kind_s + "'");
  }
  if (head == "knncan") {
    sided = true;
    sided_out = knn_can(num());
    return sided_out.graph;
  }
  if (head == "rightright") {
    sided = true;
    sided_out = rightright(num());
    return sided_out.graph;
  }
  throw CLI::ValidationError("unknown construction '" + text + "'");
}

int cmd_construct(const Options& opt, const std::string& name,
                  const std::string& out_path) {
  bool sided = false;
  SidedPattern sp;
  EdgeOrderedGraph g = parse_construct(name, sided, sp);
  std::string text = sided ? serialize_eog(sp) : serialize_eog(g);
  if (opt.as_json) {
    json j{{"command", "construct"}, {"name", name}, {"graph", eog_json(g)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text;
  }
  if (!out_path.empty()) write_file(out_path, text);
  return 0;
}

int cmd_canonical(const Options& opt, int k, int n, bool count_only,
                  std::uint64_t limit) {
  std::set<CanonicalKey> iso;
  std::uint64_t listed = 0;
  auto stats = enumerate_canonical(k, n, [&](const CanonicalSpec& spec,
                                             const EdgeOrderedGraph& g) {
    iso.insert(canonical_key(g));
    if (!count_only && listed < limit) {
      std::cout << spec.to_string() << '\n';
      ++listed;
    }
    return true;
  });
  if (opt.as_json) {
    json j{{"command", "canonical"}, {"k", k},
           {"n", n},                 {"total", stats.realized},
           {"iso", iso.size()},      {"interleaved", stats.interleaved},
           {"warning_small_n", stats.small_n_warning}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "total=" << stats.realized << " iso=" << iso.size() << '\n';
    if (stats.small_n_warning)
      std::cerr << "warning: class size 2; counts differ from n >= 3\n";
  }
  return 0;
}

int cmd_ds(const Options& opt, const std::string& mode, const std::string& arg,
           int n, int max_len) {
  if (mode == "exds") {
    DsResult r = ds_bruteforce(n, word_from_string(arg), max_len);
    if (opt.as_json) {
      json j{{"command", "ds"}, {"mode", "exds"},  {"n", n},
             {"forbidden", arg}, {"length", r.length}, {"exact", r.exact}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (r.exact ? "" : ">=") << r.length << '\n';
    }
    return 0;
  }
  EdgeOrderedGraph g = parse_pattern(arg);
  Word w;
  if (mode == "u")
    w = u_of(g);
  else if (mode == "w")
    w = w_of(g);
  else if (mode == "wprime")
    w = w_prime_of(g);
  else
    throw CLI::ValidationError("ds mode must be exds|u|w|wprime");
  if (opt.as_json) {
    json j{{"command", "ds"}, {"mode", mode}, {"word", w.letters}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << word_to_string(w) << '\n';
  }
  return 0;
}

int cmd_matrix(const Options& opt, const std::string& mode, const std::string& m_path,
               const std::string& p_path, const std::string& order,
               const std::string& out_path) {
  ZeroOnePattern m = parse_mat(read_file(m_path));
  if (mode == "contains") {
    ZeroOnePattern q = parse_mat(read_file(p_path));
    bool got = contains_pattern(m, q);
    if (opt.as_json)
      std::cout << json{{"command", "matrix"}, {"contains", got}}.dump() << '\n';
    else
      std::cout << (got ? "contains" : "avoids") << '\n';
    return 0;
  }
  if (mode == "to-graph") {
    SidedPattern sp =
        order == "col" ? graph_from_matrix_col(m) : graph_from_matrix_rowcol(m);
    std::string text = serialize_eog(sp);
    if (opt.as_json)
      std::cout << json{{"command", "matrix"}, {"graph", eog_json(sp.graph)}}.dump()
                << '\n';
    else
      std::cout << text;
    if (!out_path.empty()) write_file(out_path, text);
    return 0;
  }
  throw CLI::ValidationError("matrix mode must be contains|to-graph");
}

int cmd_verify(const Options& opt, const std::string& which) {
  std::vector<int> ids;
  if (which != "all") ids.push_back(std::stoi(which));
  auto results = eog::verify::run_criteria(ids, opt.as_json ? nullptr : &std::cout);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;
  if (opt.as_json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    std::cout << json{{"command", "verify"}, {"pass", all_pass}, {"criteria", arr}}.dump()
              << '\n';
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-ordered graph Turan toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json/--threads after the subcommand
  Options opt;
  app.add_flag("--json", opt.as_json, "emit one JSON object per command");
  app.add_option("--threads", opt.threads, "parallelism hint for the search modules")
      ->default_val(1);

  // lex
  int lex_n = 0;
  std::vector<std::string> lex_pats;
  double lex_secs = 60.0;
  std::string lex_out;
  auto* lex = app.add_subcommand("lex", "exact Turan number lex(n, family)");
  lex->add_option("--n", lex_n, "vertex count")->required();
  lex->add_option("--pattern", lex_pats, "forbidden pattern(s)")->required();
  lex->add_option("--budget-secs", lex_secs, "time budget per call");
  lex->add_option("-o,--out", lex_out, "write the witness .eog here");

  // contains
  std::string host_s, pat_s;
  auto* cont = app.add_subcommand("contains", "pattern containment with witness");
  cont->add_option("--host", host_s, "host graph")->required();
  cont->add_option("--pattern", pat_s, "pattern")->required();

  // can-avoid
  std::string shape_s;
  std::vector<std::string> avoid_pats;
  auto* avoid = app.add_subcommand("can-avoid", "find an avoiding labeling of a graph");
  avoid->add_option("--graph", shape_s, "underlying graph (ranks ignored)")->required();
  avoid->add_option("--pattern", avoid_pats, "forbidden pattern(s)")->required();

  // chi
  std::vector<std::string> chi_pats;
  int chi_kmax = 3;
  auto* chi = app.add_subcommand("chi", "order chromatic number of a family");
  chi->add_option("--pattern", chi_pats, "family member(s)")->required();
  chi->add_option("--kmax", chi_kmax, "search budget for the exact value");

  // construct
  std::string cons_name, cons_out;
  auto* cons = app.add_subcommand("construct", "emit a named construction");
  cons->add_option("name", cons_name, "construction name[:params]")->required();
  cons->add_option("-o,--out", cons_out, "write .eog here");

  // canonical
  int can_k = 0, can_n = 0;
  bool can_count = false;
  std::uint64_t can_limit = 50;
  auto* can = app.add_subcommand("canonical", "enumerate canonical edge-orders");
  can->add_option("--k", can_k, "class count")->required();
  can->add_option("--n", can_n, "class size")->required();
  can->add_flag("--count", can_count, "print only the totals");
  can->add_option("--limit", can_limit, "max specs to list");

  // ds
  std::string ds_mode, ds_arg;
  int ds_n = 2, ds_maxlen = 64;
  auto* ds = app.add_subcommand("ds", "Davenport-Schinzel words");
  ds->add_option("mode", ds_mode, "exds|u|w|wprime")->required();
  ds->add_option("arg", ds_arg, "word (exds) or graph (u/w/wprime)")->required();
  ds->add_option("--n", ds_n, "alphabet budget for exds");
  ds->add_option("--max-len", ds_maxlen, "search guard for exds");

  // matrix
  std::string mat_mode, mat_m, mat_p, mat_order = "rowcol", mat_out;
  auto* mat = app.add_subcommand("matrix", "0-1 matrix tools");
  mat->add_option("mode", mat_mode, "contains|to-graph")->required();
  mat->add_option("--m", mat_m, ".mat file")->required();
  mat->add_option("--p", mat_p, "pattern .mat file (contains)");
  mat->add_option("--order", mat_order, "rowcol|col (to-graph)");
  mat->add_option("-o,--out", mat_out, "write .eog here");

  // verify
  std::string verify_which = "all";
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  ver->add_option("which", verify_which, "'all' or a criterion number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lex->parsed()) return cmd_lex(opt, lex_n, lex_pats, lex_secs, lex_out);
    if (cont->parsed()) return cmd_contains(opt, host_s, pat_s);
    if (avoid->parsed()) return cmd_can_avoid(opt, shape_s, avoid_pats);
    if (chi->parsed()) return cmd_chi(opt, chi_pats, chi_kmax);
    if (cons->parsed()) return cmd_construct(opt, cons_name, cons_out);
    if (can->parsed()) return cmd_canonical(opt, can_k, can_n, can_count, can_limit);
    if (ds->parsed()) return cmd_ds(opt, ds_mode, ds_arg, ds_n, ds_maxlen);
    if (mat->parsed())
      return cmd_matrix(opt, mat_mode, mat_m, mat_p, mat_order, mat_out);
    if (ver->parsed()) return cmd_verify(opt, verify_which);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
