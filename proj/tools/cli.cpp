#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "bnested/common_enum.hpp"
#include "bnested/conserved_enum.hpp"
#include "bnested/generate.hpp"
#include "bnested/oracle.hpp"

namespace bnested::cli {

namespace {

struct Options {
  std::string mode = "common";
  int b = 1;
  int min_size = 2;
  bool frame = false;
  bool sort = false;
  bool original_labels = false;
  bool count_only = false;
  bool json = false;
  bool diff = false;
  int max_n = oracle::kDefaultMaxN;
  std::string input;

  int n = 10;
  int k = 3;
  std::uint64_t seed = 1;
  std::string model = "uniform";
  int depth = 2;
  int span = 3;
  int reversals = 3;
  std::vector<int> sizes{1000, 10000, 100000};
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool conserved(const Options& o) { return o.mode == "conserved"; }
MinSize min_size_of(const Options& o) { return o.min_size == 1 ? MinSize::One : MinSize::Two; }

PermutationSet load(const Options& o, std::istream& in) {
  std::vector<RawSequence> raw;
  if (o.input.empty() || o.input == "-") {
    raw = parse_permutations(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw IoError("cannot open " + o.input);
    raw = parse_permutations(file);
  }
  auto set = normalize(raw);
  return conserved(o) ? prepare_conserved(set, o.frame) : set;
}

std::string label(const PermutationSet& set, int v, bool original) {
  if (!original) return std::to_string(v);
  const auto orig = set.original_label(v);
  if (!orig) return v == 1 ? "^" : "$";
  return std::to_string(*orig);
}

void print_interval(std::ostream& out, const PermutationSet& set, Interval iv, bool original) {
  out << label(set, iv.lo, original) << ' ' << label(set, iv.hi, original) << '\n';
}

std::vector<Interval> fast_path(const PermutationSet& set, const Options& o) {
  if (conserved(o)) return enumerate_b_nested_conserved(build_conserved_tree(set), o.b, min_size_of(o));
  return enumerate_b_nested_common(build_pqtree(set), o.b, min_size_of(o));
}

int cmd_tree(const Options& o, std::istream& in, std::ostream& out) {
  const auto set = load(o, in);
  if (conserved(o)) {
    const auto tree = build_conserved_tree(set);
    o.json ? dump_json(out, tree) : dump_text(out, tree);
  } else {
    const auto tree = build_pqtree(set);
    o.json ? dump_json(out, tree) : dump_text(out, tree);
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out) {
  const auto set = load(o, in);
  auto intervals = fast_path(set, o);
  if (o.count_only) {
    out << intervals.size() << '\n';
    return kOk;
  }
  if (o.sort) std::sort(intervals.begin(), intervals.end());
  for (const auto& iv : intervals) print_interval(out, set, iv, o.original_labels);
  return kOk;
}

int cmd_count(const Options& o, std::istream& in, std::ostream& out) {
  const auto set = load(o, in);
  const std::uint64_t count = conserved(o) ? count_b_nested_conserved(build_conserved_tree(set), o.b, min_size_of(o))
                                           : count_b_nested_common(build_pqtree(set), o.b, min_size_of(o));
  out << count << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto set = load(o, in);
  const auto family = conserved(o) ? oracle::all_conserved(set, o.max_n) : oracle::all_common(set, o.max_n);
  std::vector<Interval> expected;
  for (const auto& iv : oracle::all_b_nested(family, o.b).members()) {
    if (iv.size() >= o.min_size) expected.push_back(iv);
  }
  auto got = fast_path(set, o);
  std::sort(got.begin(), got.end());

  std::vector<Interval> only_oracle, only_fast;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(only_oracle));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(only_fast));

  if (o.diff) {
    for (const auto& iv : only_oracle) {
      out << "+ ";
      print_interval(out, set, iv, o.original_labels);
    }
    for (const auto& iv : only_fast) {
      out << "- ";
      print_interval(out, set, iv, o.original_labels);
    }
  } else if (o.count_only) {
    out << expected.size() << '\n';
  } else {
    for (const auto& iv : expected) print_interval(out, set, iv, o.original_labels);
  }
  if (only_oracle.empty() && only_fast.empty()) return kOk;
  err << "oracle mismatch: " << only_oracle.size() << " missing, " << only_fast.size() << " spurious\n";
  return kOracleMismatch;
}

int cmd_gen(const Options& o, std::ostream& out) {
  std::vector<RawSequence> rows;
  bool with_signs = false;
  if (o.model == "uniform") {
    rows = gen::uniform(o.n, o.k, o.seed);
  } else if (o.model == "planted") {
    rows = gen::planted(o.n, o.k, o.seed, {o.depth, o.span});
  } else if (o.model == "signed-reversals") {
    rows = gen::signed_reversals(o.n, o.k, o.seed, o.reversals);
    with_signs = true;
  } else {
    rows = gen::signed_uniform(o.n, o.k, o.seed);
    with_signs = true;
  }
  write_permutations(out, normalize(rows), with_signs);
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto micros = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
  };
  out << "n,K,b,nocc,build_us,enum_us,scan_iters\n";
  for (int n : o.sizes) {
    if (n < 1) throw std::invalid_argument("bench sizes must be >= 1");
    std::uint64_t nocc = 0;
    ScanStats stats;
    auto sink = [&nocc](Interval) { ++nocc; };
    Clock::time_point t0, t1, t2;
    if (conserved(o)) {
      const auto set = normalize(gen::signed_reversals(n, o.k, o.seed, std::max(1, n / 10)));
      t0 = Clock::now();
      const auto tree = build_conserved_tree(set);
      t1 = Clock::now();
      for_each_b_nested_conserved(tree, o.b, min_size_of(o), sink, &stats);
      t2 = Clock::now();
    } else {
      const auto set = normalize(gen::planted(n, o.k, o.seed, {o.depth, o.span}));
      t0 = Clock::now();
      const auto tree = build_pqtree(set);
      t1 = Clock::now();
      for_each_b_nested_common(tree, o.b, min_size_of(o), sink, &stats);
      t2 = Clock::now();
    }
    out << n << ',' << o.k << ',' << o.b << ',' << nocc << ',' << micros(t0, t1) << ',' << micros(t1, t2) << ','
        << stats.q_iterations << '\n';
  }
  return kOk;
}

void add_mode(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "Interval family")->check(CLI::IsMember({"common", "conserved"}));
}

void add_instance_options(CLI::App* sub, Options& o, bool with_mode) {
  if (with_mode) add_mode(sub, o);
  sub->add_option("input", o.input, "Permutation file (default: standard input)");
  sub->add_flag("--frame", o.frame, "Conserved mode: add +1/+(n+2) sentinels instead of requiring a frame");
}

void add_query_options(CLI::App* sub, Options& o) {
  add_instance_options(sub, o, true);
  sub->add_option("--b", o.b, "Nesting parameter b >= 1")->check(CLI::Range(1, std::numeric_limits<int>::max()));
  sub->add_option("--min-size", o.min_size, "Smallest reported interval size")->check(CLI::IsMember({1, 2}));
  sub->add_flag("--sort", o.sort, "Sort output by (lo, hi)");
  sub->add_flag("--original-labels", o.original_labels, "Print input labels instead of renumbered ones");
  sub->add_flag("--count-only", o.count_only, "Print only the number of intervals");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"b-nested common and conserved intervals of permutations", "bnested"};
  app.require_subcommand(1);

  auto* tree = app.add_subcommand("tree", "Dump the PQ-tree or the conserved interval tree");
  auto* common_tree = app.add_subcommand("common-tree", "Dump the PQ-tree of common intervals");
  auto* conserved_tree = app.add_subcommand("conserved-tree", "Dump the strong conserved interval tree");
  add_instance_options(tree, o, true);
  add_instance_options(common_tree, o, false);
  add_instance_options(conserved_tree, o, false);
  for (auto* t : {tree, common_tree, conserved_tree}) t->add_flag("--json", o.json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "List b-nested intervals, one `lo hi` per line");
  add_query_options(enumerate, o);
  auto* count = app.add_subcommand("count", "Count b-nested intervals without listing them");
  add_query_options(count, o);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force b-nested intervals, checked against the tree path");
  oracle_cmd->alias("oracle-check");
  add_query_options(oracle_cmd, o);
  oracle_cmd->add_flag("--diff", o.diff, "Print only the symmetric difference (+ oracle only, - tree only)");
  oracle_cmd->add_option("--max-n", o.max_n, "Refuse instances larger than this")->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", o.n, "Number of elements")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", o.k, "Number of permutations")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--model", o.model, "Instance model")
      ->check(CLI::IsMember({"uniform", "planted", "signed-reversals", "signed-uniform"}));
  gen_cmd->add_option("--depth", o.depth, "Planted levels below the root")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--span", o.span, "Children per planted block")->check(CLI::Range(2, 1 << 20));
  gen_cmd->add_option("--reversals", o.reversals, "Maximum signed reversals per permutation")
      ->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "Time tree construction and enumeration on generated instances (CSV)");
  add_mode(bench, o);
  bench->add_option("--sizes", o.sizes, "Instance sizes n")->delimiter(',');
  bench->add_option("--k", o.k, "Number of permutations")->check(CLI::PositiveNumber);
  bench->add_option("--b", o.b, "Nesting parameter")->check(CLI::Range(1, std::numeric_limits<int>::max()));
  bench->add_option("--min-size", o.min_size, "Smallest reported interval size")->check(CLI::IsMember({1, 2}));
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_option("--depth", o.depth, "Planted levels below the root")->check(CLI::NonNegativeNumber);
  bench->add_option("--span", o.span, "Children per planted block")->check(CLI::Range(2, 1 << 20));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  // Subcommand-specific defaults that differ from the shared ones.
  if (bench->parsed() && bench->count("--k") == 0) o.k = 4;
  if (common_tree->parsed()) o.mode = "common";
  if (conserved_tree->parsed()) o.mode = "conserved";

  try {
    if (tree->parsed() || common_tree->parsed() || conserved_tree->parsed()) return cmd_tree(o, in, out);
    if (enumerate->parsed()) return cmd_enumerate(o, in, out);
    if (count->parsed()) return cmd_count(o, in, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, in, out, err);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const oracle::BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace bnested::cli
