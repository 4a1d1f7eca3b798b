#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gtseq/json_io.hpp"
#include "gtseq/labelings.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/operators.hpp"
#include "gtseq/paths.hpp"
#include "gtseq/patterns.hpp"
#include "gtseq/verify.hpp"

using namespace gtseq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Config files hold one key=value per line; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError("config key " + key + " expects an integer, got '" + v + "'");
  }
}

void apply_config(VerifyConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, v] : kv) {
    if (key == "n") cfg.n = to_int(key, v);
    else if (key == "max_n") cfg.max_n = to_int(key, v);
    else if (key == "grid") cfg.grid = parse_range(v);
    else if (key == "trees") cfg.trees = to_int(key, v);
    else if (key == "restricted_trees") cfg.restricted_trees = to_int(key, v);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(std::stoull(v));
    else if (key == "threads") cfg.exec.threads = to_int(key, v);
    else if (key == "memo_cap") cfg.memo_cap = static_cast<std::size_t>(std::stoull(v));
    else if (key == "mode") {
      if (v == "serial") cfg.exec.mode = ExecutionMode::kSerial;
      else if (v == "parallel") cfg.exec.mode = ExecutionMode::kParallel;
      else throw UsageError("config key mode expects serial or parallel");
    } else {
      throw UsageError("unknown config key: " + key);
    }
  }
}

Json read_json_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return Json::parse(text);
}

TreeSequence family_sequence(const std::string& family, int n, int i, int j, std::uint64_t seed) {
  return canonical_trees(parse_tree_family(family), n, {i, j, seed});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed Gelfand-Tsetlin enumeration and identity checker"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  // count
  auto* count = app.add_subcommand("count", "Print one exact count");
  std::string count_what;
  std::string k_text;
  int count_n = 0;
  std::string family = "basic";
  int fam_i = 1, fam_j = 0;
  std::uint64_t fam_seed = 0;
  std::string variant = "classic";
  std::string grammar = "below-axis";
  std::string op_text;
  std::string op_target = "product";
  std::string ext_name = "1";
  bool adjacent = false;
  count->add_option("what", count_what, "product | det | gtseq | patterns | alpha | paths | operator | ext")
      ->required()
      ->check(CLI::IsMember({"product", "det", "gtseq", "patterns", "alpha", "paths", "operator", "ext"}));
  count->add_option("--k", k_text, "Shifted bottom labels, e.g. 0,2 (use --k=-1,2 for a leading minus)")->required();
  count->add_option("--n", count_n, "Order; must match the length of --k when given");
  count->add_option("--family", family, "Tree family for gtseq: basic | swap | leafchain | random");
  count->add_option("--i", fam_i, "First family parameter (swap sink or leafchain leaf)");
  count->add_option("--j", fam_j, "Second family parameter (swap sink)");
  count->add_option("--seed", fam_seed, "Seed of the random family");
  count->add_option("--variant", variant, "Path variant: classic | general");
  count->add_option("--grammar", grammar, "Step grammar of the general variant below the x-axis");
  count->add_option("--op", op_text, std::string("Operator to apply (count operator):\n") + operator_grammar());
  count->add_option("--target", op_target, "Function the operator acts on: product | alpha | gtseq");
  count->add_option("--ext", ext_name, "Monotone-triangle extension: 1 | 2 | 3 | 4");
  count->add_flag("--adjacent", adjacent, "Allow adjacent specials in the third extension");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  std::string suite;
  std::optional<int> v_n, v_max_n, v_trees, v_restricted, v_threads;
  std::optional<std::string> v_grid, v_config;
  std::optional<std::uint64_t> v_seed;
  std::optional<std::size_t> v_memo_cap;
  bool v_serial = false, v_no_time = false;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", v_n, "Check only this order");
  verify->add_option("--max-n", v_max_n, "Largest order checked");
  verify->add_option("--grid", v_grid, "Coordinate range lo..hi (write --grid=-2..2)");
  verify->add_option("--trees", v_trees, "Random tree sequences per order");
  verify->add_option("--restricted-trees", v_restricted, "Random tree sequences for the restricted suites");
  verify->add_option("--seed", v_seed, "Base seed of the random tree sequences");
  verify->add_option("--threads", v_threads, "Worker threads (0: OpenMP default)");
  verify->add_option("--memo-cap", v_memo_cap, "Memo entries kept per counter before it is flushed (0: unbounded)");
  verify->add_option("--config", v_config, "key=value config file (default: $GTSEQ_CONFIG)");
  verify->add_flag("--serial", v_serial, "Use the serial reference kernel");
  verify->add_flag("--no-time", v_no_time, "Omit wallTime so identical runs print identical reports");

  // emit
  auto* emit = app.add_subcommand("emit", "Write artifacts as JSON, DOT or SVG");
  std::string emit_what;
  std::string format = "json";
  int emit_n = 0;
  std::string shape_text;
  int max_entry = 0;
  std::size_t index = 0;
  bool nonint = false;
  emit->add_option("what", emit_what, "tree | pattern | ssyt | paths | sequences")
      ->required()
      ->check(CLI::IsMember({"tree", "pattern", "ssyt", "paths", "sequences"}));
  emit->add_option("--format", format, "tree: json | dot; paths: json | svg");
  emit->add_option("--n", emit_n, "Order of the tree sequence");
  emit->add_option("--k", k_text, "Bottom row / shifted labels");
  emit->add_option("--family", family, "Tree family: basic | swap | leafchain | random");
  emit->add_option("--i", fam_i, "First family parameter");
  emit->add_option("--j", fam_j, "Second family parameter");
  emit->add_option("--seed", fam_seed, "Seed of the random family");
  emit->add_option("--shape", shape_text, "Partition for ssyt, e.g. 3,1");
  emit->add_option("--max", max_entry, "Largest tableau entry for ssyt");
  emit->add_option("--variant", variant, "Path variant: classic | general");
  emit->add_option("--index", index, "Which family to draw with --format svg");
  emit->add_flag("--nonintersecting", nonint, "Only non-intersecting classic families");

  // convert
  auto* convert = app.add_subcommand("convert", "Convert one JSON object between representations");
  std::string direction;
  std::string input;
  int conv_n = 0;
  convert->add_option("direction", direction, "pattern-to-ssyt | ssyt-to-pattern | pattern-to-treeseq | treeseq-to-pattern")
      ->required()
      ->check(CLI::IsMember({"pattern-to-ssyt", "ssyt-to-pattern", "pattern-to-treeseq", "treeseq-to-pattern"}));
  convert->add_option("--input", input, "Input file (default: standard input)");
  convert->add_option("--n", conv_n, "Number of pattern rows for ssyt-to-pattern");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      const Point k = parse_point(k_text);
      if (count_n != 0 && count_n != static_cast<int>(k.size())) {
        throw UsageError("--n " + std::to_string(count_n) + " does not match --k of length " + std::to_string(k.size()));
      }
      const int n = static_cast<int>(k.size());
      BigInt value;
      if (count_what == "product") value = product_formula(k);
      else if (count_what == "det") value = binomial_determinant(k);
      else if (count_what == "gtseq") value = signed_count(family_sequence(family, n, fam_i, fam_j, fam_seed), k);
      else if (count_what == "patterns") value = pattern_signed_count(k);
      else if (count_what == "alpha") value = alpha(k);
      else if (count_what == "paths") value = signed_families(k, parse_path_variant(variant), parse_step_grammar(grammar));
      else if (count_what == "ext") value = extension_signed_count(parse_extension(ext_name), k, ExtOptions{adjacent});
      else {
        if (op_text.empty()) throw UsageError("count operator needs --op");
        const OperatorExpression op = parse_operator(op_text, n);
        LatticeFunction f = [&]() {
          if (op_target == "product") return LatticeFunction(n, product_formula);
          if (op_target == "alpha") return alpha_function(n);
          if (op_target == "gtseq") {
            auto c = std::make_shared<SignedCounter>(family_sequence(family, n, fam_i, fam_j, fam_seed));
            return LatticeFunction(n, [c](const Point& p) { return c->count(p); }, 0, false);
          }
          throw UsageError("unknown --target " + op_target);
        }();
        value = apply_operator(op, f, k);
      }
      std::cout << to_string(value) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      VerifyConfig cfg;
      std::string config_path;
      if (v_config) config_path = *v_config;
      else if (const char* env = std::getenv("GTSEQ_CONFIG"); env && *env) config_path = env;
      if (!config_path.empty()) apply_config(cfg, read_config(config_path));
      if (v_n) cfg.n = *v_n;
      if (v_max_n) cfg.max_n = *v_max_n;
      if (v_grid) cfg.grid = parse_range(*v_grid);
      if (v_trees) cfg.trees = *v_trees;
      if (v_restricted) cfg.restricted_trees = *v_restricted;
      if (v_seed) cfg.seed = *v_seed;
      if (v_threads) cfg.exec.threads = *v_threads;
      if (v_memo_cap) cfg.memo_cap = *v_memo_cap;
      if (v_serial) cfg.exec.mode = ExecutionMode::kSerial;
      const VerificationReport rep = run_suite(suite, cfg);
      std::cout << to_json(rep, !v_no_time).dump(2) << "\n";
      return rep.ok() ? kExitOk : kExitViolations;
    }

    if (emit->parsed()) {
      if (emit_what == "tree") {
        if (emit_n < 1) throw UsageError("emit tree needs --n");
        const TreeSequence ts = family_sequence(family, emit_n, fam_i, fam_j, fam_seed);
        if (format == "json") {
          std::cout << to_json(ts).dump(2) << "\n";
        } else if (format == "dot") {
          for (int m = 1; m <= ts.order(); ++m) std::cout << tree_to_dot(ts.tree(m), "T" + std::to_string(m));
        } else {
          throw UsageError("emit tree supports --format json or dot");
        }
      } else if (emit_what == "pattern") {
        enumerate_patterns(parse_point(k_text), [](const GTPattern& p) { std::cout << to_json(p).dump() << "\n"; });
      } else if (emit_what == "ssyt") {
        std::vector<int> shape = parse_point(shape_text);
        enumerate_ssyt(shape, max_entry, [](const SSYT& t) { std::cout << to_json(t).dump() << "\n"; });
      } else if (emit_what == "sequences") {
        const Point k = parse_point(k_text);
        const TreeSequence ts = family_sequence(family, static_cast<int>(k.size()), fam_i, fam_j, fam_seed);
        enumerate_sequences(ts, k, [](const GTTreeSequence& s) { std::cout << to_json(s).dump() << "\n"; });
      } else {
        const Point k = parse_point(k_text);
        std::vector<PathFamily> fams;
        if (nonint) {
          fams = nonintersecting_families(k);
        } else {
          enumerate_families(k, parse_path_variant(variant), [&](const PathFamily& f) { fams.push_back(f); });
        }
        if (format == "json") {
          for (const auto& f : fams) std::cout << to_json(f).dump() << "\n";
        } else if (format == "svg") {
          if (index >= fams.size()) throw UsageError("--index out of range (" + std::to_string(fams.size()) + " families)");
          std::cout << family_to_svg(fams[index]);
        } else {
          throw UsageError("emit paths supports --format json or svg");
        }
      }
      return kExitOk;
    }

    const Json in = read_json_input(input);
    if (direction == "pattern-to-ssyt") {
      std::cout << to_json(pattern_to_ssyt(pattern_from_json(in))).dump() << "\n";
    } else if (direction == "ssyt-to-pattern") {
      const SSYT t = ssyt_from_json(in);
      const int n = conv_n > 0 ? conv_n : static_cast<int>(t.shape.size());
      std::cout << to_json(ssyt_to_pattern(t, n)).dump() << "\n";
    } else if (direction == "pattern-to-treeseq") {
      std::cout << to_json(pattern_to_tree_sequence(pattern_from_json(in))).dump() << "\n";
    } else {
      std::cout << to_json(tree_sequence_to_pattern(gt_sequence_from_json(in))).dump() << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "gtseq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gtseq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "gtseq: bad JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
}
