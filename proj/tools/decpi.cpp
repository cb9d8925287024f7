// decpi: command-line front end for the decpi library.
//
// Exit codes: 0 success, 1 input error, 2 invalid circuit or unsupported
// structure, 3 refused query or search cap exceeded, 4 --verify mismatch.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "decpi/explain.hpp"
#include "decpi/families.hpp"
#include "decpi/formats.hpp"
#include "decpi/oracle.hpp"
#include "decpi/pi_batch.hpp"
#include "decpi/pi_incremental.hpp"
#include "decpi/queries.hpp"

namespace {

using namespace decpi;

enum Exit { kOk = 0, kInput = 1, kInvalid = 2, kRefused = 3, kMismatch = 4 };

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  bool quiet = false;
  std::string format = "auto";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_c2d(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c") continue;
    return first == "nnf";
  }
  return false;
}

Circuit load_circuit(const std::string& path, const Globals& g) {
  const std::string text = read_input(path);
  if (g.format == "c2d" || (g.format == "auto" && looks_like_c2d(text))) return import_c2d_nnf(text);
  return parse_circuit(text);
}

void print_terms(const std::vector<Term>& terms) {
  for (const Term& t : terms) std::cout << t.to_string() << '\n';
  std::cout.flush();
}

std::vector<Var> parse_var_list(const std::string& text) {
  std::vector<Var> vars;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!is_valid_var_name(item)) throw ParseError(0, "invalid variable name '" + item + "'");
    vars.emplace_back(item);
  }
  return vars;
}

int cmd_check(const std::string& path, const Globals& g) {
  const Circuit c = load_circuit(path, g);
  std::cout << (c.is_reduced() ? "valid reduced dec-dnnf, " : "valid dec-dnnf (not reduced), ")
            << c.vars().size() << " vars\n";
  return kOk;
}

struct PiOptions {
  bool all = false;
  std::optional<std::size_t> limit;
  std::string mode;
  bool verify = false;
};

int cmd_pi(const std::string& path, const PiOptions& o, const Globals& g) {
  const Circuit c = load_circuit(path, g);
  std::string mode = o.mode;
  if (mode.empty()) mode = o.limit ? "incremental" : "batch";

  if (mode == "batch") {
    const TermSet all = ip_all(c);
    std::vector<Term> out(all.begin(), all.end());
    if (o.limit && out.size() > *o.limit) out.resize(*o.limit);
    print_terms(out);
    if (o.verify) {
      const std::vector<Term> inc = enumerate_ip(c);
      if (TermSet(inc) != all) throw VerifyMismatch("incremental enumeration disagrees with batch");
    }
    return kOk;
  }

  IpEnumerator e(c);
  while (!o.limit || e.found().size() < *o.limit) {
    auto t = e.next();
    if (!t) break;
    std::cout << t->to_string() << '\n' << std::flush;
  }
  if (o.verify) {
    const TermSet all = ip_all(c);
    const bool ok = o.limit && e.found().size() < all.size() ? e.found().is_subset_of(all)
                                                             : e.found() == all;
    if (!ok) throw VerifyMismatch("batch construction disagrees with incremental enumeration");
  }
  return kOk;
}

int cmd_sr(const std::string& path, const std::string& instance, bool one,
           const std::string& method, const Globals& g) {
  const Circuit c = load_circuit(path, g);
  const Assignment a = parse_assignment(instance);
  if (one) {
    print_terms({sr_greedy(c, a)});
    return kOk;
  }
  const TermSet all = sr_all(c, a, method == "filter" ? SrMethod::Filter : SrMethod::Recursive);
  print_terms({all.begin(), all.end()});
  return kOk;
}

int cmd_abduce(const std::string& path, const std::string& hyp, const std::string& manifest,
               std::size_t cap, const Globals& g) {
  AbductionInstance inst{load_circuit(path, g), parse_var_list(hyp), parse_term(manifest)};
  if (auto t = abduction_exists(inst, cap)) {
    print_terms({*t});
  } else if (!g.quiet) {
    std::cerr << "no abductive explanation\n";
  }
  return kOk;
}

int cmd_transversals(const std::string& path, const std::string& method) {
  const Hypergraph h = parse_hypergraph(read_input(path));
  const auto sets = method == "oracle" ? oracle::tt_min_transversals(h) : min_transversals_via_sr(h);
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i].name();
    std::cout << '\n';
  }
  return kOk;
}

int cmd_reduce_cnf(const std::string& path, bool decide, std::size_t cap) {
  const Cnf cnf = parse_dimacs(read_input(path));
  const ChainCircuit chain = cnf_to_obdd_chain(cnf);
  if (!decide) {
    std::cout << print_circuit(chain.circuit);
    return kOk;
  }
  if (auto t = restricted_implicant_exists(chain.circuit, chain.y, cap)) {
    std::cout << "satisfiable\n" << t->to_string() << '\n';
  } else {
    std::cout << "unsatisfiable\n";
  }
  return kOk;
}

int cmd_count(const std::string& path, const Globals& g) {
  std::cout << count_models(load_circuit(path, g)) << '\n';
  return kOk;
}

int cmd_reduce(const std::string& path, const Globals& g) {
  std::cout << print_circuit(reduce(load_circuit(path, g)));
  return kOk;
}

int cmd_oracle(const std::string& what, const std::string& path, int vars, int nodes,
               const Globals& g) {
  if (what == "random") {
    std::cout << print_circuit(oracle::random_circuit(g.seed, vars, nodes));
    return kOk;
  }
  const oracle::TruthTable tt = oracle::tt_of_circuit(load_circuit(path, g));
  if (what == "pi") {
    const TermSet pis = oracle::tt_prime_implicants(tt);
    print_terms({pis.begin(), pis.end()});
    return kOk;
  }
  for (const Var& v : tt.vars) std::cout << v.name() << ' ';
  std::cout << "| f\n";
  for (std::uint64_t r = 0; r < tt.rows(); ++r) {
    for (std::size_t j = 0; j < tt.vars.size(); ++j) {
      std::cout << std::string(tt.vars[j].name().size() - 1, ' ') << ((r >> j) & 1) << ' ';
    }
    std::cout << "| " << tt.values[r] << '\n';
  }
  return kOk;
}

int cmd_bench(const std::string& family, int n, std::size_t k) {
  const Circuit c = family == "chain" ? chain_family(n) : gadget_family(n);
  std::cout << "family=" << family << '\n'
            << "n=" << n << '\n'
            << "k=" << k << '\n'
            << "nodes=" << c.node_count() << '\n';
  if (k == 0) return kOk;

  using clock = std::chrono::steady_clock;
  std::vector<double> delays;
  IpEnumerator e(c);
  const auto start = clock::now();
  auto last = start;
  while (delays.size() < k) {
    auto t = e.next();
    const auto now = clock::now();
    if (!t) break;
    delays.push_back(std::chrono::duration<double, std::milli>(now - last).count());
    last = now;
  }
  const double total = std::chrono::duration<double, std::milli>(last - start).count();
  std::cout << "items=" << delays.size() << '\n';
  if (delays.empty()) return kOk;
  std::vector<double> sorted = delays;
  std::sort(sorted.begin(), sorted.end());
  std::cout << "first_ms=" << delays.front() << '\n'
            << "median_ms=" << sorted[sorted.size() / 2] << '\n'
            << "max_ms=" << sorted.back() << '\n'
            << "total_ms=" << total << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime implicants, sufficient reasons and abductive explanations for dec-DNNF circuits"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for random generation");
  app.add_flag("--quiet", g.quiet, "Suppress diagnostics on stderr");
  app.add_option("--format", g.format, "Circuit input format")
      ->check(CLI::IsMember({"auto", "native", "c2d"}));

  std::string path = "-";
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "Parse and validate a circuit");
  check->add_option("file", path, "Circuit file, - for stdin");
  check->callback([&] { run = [&] { return cmd_check(path, g); }; });

  PiOptions pi;
  std::size_t limit = 0;
  auto* pic = app.add_subcommand("pi", "Enumerate prime implicants");
  pic->add_option("file", path, "Circuit file, - for stdin");
  auto* all_flag = pic->add_flag("--all", pi.all, "All prime implicants (default)");
  auto* limit_opt = pic->add_option("--limit", limit, "Stop after this many implicants");
  all_flag->excludes(limit_opt);
  pic->add_option("--mode", pi.mode, "batch or incremental")->check(CLI::IsMember({"batch", "incremental"}));
  pic->add_flag("--verify", pi.verify, "Cross-check against the other mode");
  pic->callback([&] {
    if (limit_opt->count()) pi.limit = limit;
    run = [&] { return cmd_pi(path, pi, g); };
  });

  std::string instance;
  bool one = false;
  std::string sr_method = "recursive";
  auto* src = app.add_subcommand("sr", "Sufficient reasons of an instance");
  src->add_option("file", path, "Circuit file, - for stdin");
  src->add_option("--instance", instance, "Assignment, e.g. h=1,b=0")->required();
  auto* one_flag = src->add_flag("--one", one, "One sufficient reason, greedily");
  src->add_flag("--all", "All sufficient reasons (default)")->excludes(one_flag);
  src->add_option("--method", sr_method, "recursive or filter")->check(CLI::IsMember({"recursive", "filter"}));
  src->callback([&] { run = [&] { return cmd_sr(path, instance, one, sr_method, g); }; });

  std::string hyp;
  std::string manifest;
  std::size_t cap = kDefaultSearchCap;
  auto* abd = app.add_subcommand("abduce", "Find a subset-minimal abductive explanation");
  abd->add_option("file", path, "Circuit file, - for stdin");
  abd->add_option("--hyp", hyp, "Comma-separated hypothesis variables")->required();
  abd->add_option("--manifest", manifest, "Manifestation term, e.g. 'e -p'")->required();
  abd->add_option("--cap", cap, "Largest hypothesis set to search");
  abd->callback([&] { run = [&] { return cmd_abduce(path, hyp, manifest, cap, g); }; });

  std::string tr_method = "sr";
  auto* tr = app.add_subcommand("transversals", "Minimal transversals of a hypergraph");
  tr->add_option("file", path, "Hypergraph file, - for stdin");
  tr->add_option("--method", tr_method, "sr or oracle")->check(CLI::IsMember({"sr", "oracle"}));
  tr->callback([&] { run = [&] { return cmd_transversals(path, tr_method); }; });

  bool decide = false;
  auto* rc = app.add_subcommand("reduce-cnf", "Build the decision chain of a DIMACS CNF");
  rc->add_option("file", path, "DIMACS file, - for stdin");
  rc->add_flag("--decide", decide, "Search for an implicant over the CNF variables");
  rc->add_option("--cap", cap, "Largest variable set to search");
  rc->callback([&] { run = [&] { return cmd_reduce_cnf(path, decide, cap); }; });

  auto* cnt = app.add_subcommand("count", "Count models over the declared variables");
  cnt->add_option("file", path, "Circuit file, - for stdin");
  cnt->callback([&] { run = [&] { return cmd_count(path, g); }; });

  auto* red = app.add_subcommand("reduce", "Print the reduced circuit");
  red->add_option("file", path, "Circuit file, - for stdin");
  red->callback([&] { run = [&] { return cmd_reduce(path, g); }; });

  std::string what;
  int vars = 8;
  int nodes = 40;
  auto* orc = app.add_subcommand("oracle", "Brute-force truth-table tools");
  orc->add_option("what", what, "pi, tt or random")->required()->check(CLI::IsMember({"pi", "tt", "random"}));
  orc->add_option("file", path, "Circuit file, - for stdin");
  orc->add_option("--vars", vars, "Variables for random circuits")->check(CLI::Range(1, 12));
  orc->add_option("--nodes", nodes, "Node budget for random circuits")->check(CLI::PositiveNumber);
  orc->callback([&] { run = [&] { return cmd_oracle(what, path, vars, nodes, g); }; });

  std::string family = "gadget";
  int n = 10;
  std::size_t k = 100;
  auto* bench = app.add_subcommand("bench", "Time incremental enumeration on a circuit family");
  bench->add_option("--family", family, "gadget or chain")->check(CLI::IsMember({"gadget", "chain"}));
  bench->add_option("--n", n, "Family size")->check(CLI::Range(2, 100000));
  bench->add_option("--k", k, "Implicants to produce");
  bench->callback([&] { run = [&] { return cmd_bench(family, n, k); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  auto fail = [&](int code, const std::string& what) {
    if (!g.quiet) std::cerr << "decpi: " << what << '\n';
    return code;
  };
  try {
    return run();
  } catch (const InvalidCircuit& e) {
    return fail(kInvalid, e.what());
  } catch (const UnsupportedStructure& e) {
    return fail(kInvalid, e.what());
  } catch (const Unsupported& e) {
    return fail(kRefused, e.what());
  } catch (const VerifyMismatch& e) {
    return fail(kMismatch, e.what());
  } catch (const std::exception& e) {
    return fail(kInput, e.what());
  }
}
