// Command-line front end for the hfock library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfock/hfock.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvariant = 3,
  kAnnihilated = 4,
  kSuiteFailure = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output '" + path + "'");
  out << text;
}

int parse_int_token(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("malformed " + what + " '" + s + "'");
  return v;
}

hfock::Partition parse_part_list(const std::string& s) {
  std::vector<int> parts;
  if (s.empty()) return {};
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    const int p = parse_int_token(tok, "part");
    if (p <= 0) throw UsageError("parts must be positive in '" + s + "'");
    if (!parts.empty() && p > parts.back()) throw UsageError("parts must be weakly decreasing in '" + s + "'");
    parts.push_back(p);
  }
  return hfock::Partition(std::move(parts));
}

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::optional<int> e;
  std::optional<int> l;
};

hfock::ChargedMultipartition load(const Options& o) {
  const hfock::Document doc = hfock::parse_document(read_input(o.input));
  hfock::ChargedMultipartition x = hfock::as_multipartition(doc);
  if (o.e && *o.e != x.e) {
    throw std::invalid_argument("--e " + std::to_string(*o.e) + " differs from the document's e " + std::to_string(x.e));
  }
  if (o.l && *o.l != x.level()) {
    throw std::invalid_argument("--l " + std::to_string(*o.l) + " differs from the document's level " +
                                std::to_string(x.level()));
  }
  return x;
}

/// Applies one op-spec; empty on annihilation.
std::optional<hfock::ChargedMultipartition> apply_op(const hfock::ChargedMultipartition& x, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("op-spec '" + spec + "' lacks ':'");
  const std::string op = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto residue = [&](int modulus) {
    const int i = parse_int_token(arg, "residue");
    if (i < 0 || i >= modulus) {
      throw UsageError("residue " + arg + " out of range 0.." + std::to_string(modulus - 1));
    }
    return i;
  };
  if (op == "f") return hfock::f_tilde(x, residue(x.e));
  if (op == "e") return hfock::e_tilde(x, residue(x.e));
  if (op == "df") return hfock::dual_f_tilde(x, residue(x.level()));
  if (op == "de") return hfock::dual_e_tilde(x, residue(x.level()));
  if (op == "b") return hfock::tc(x, parse_part_list(arg));
  if (op == "binv") return hfock::b_minus(x, parse_part_list(arg));
  if (op == "b1") return hfock::b_one(x, parse_int_token(arg, "content"));
  if (op == "bm1") return hfock::b_minus_one(x, parse_int_token(arg, "content"));
  throw UsageError("unknown operator '" + op + "'");
}

std::string box_text(const hfock::Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.column) + "," + std::to_string(b.component) + ")";
}

std::string ints_text(const std::vector<int>& xs) {
  std::string out;
  for (int v : xs) out += " " + std::to_string(v);
  return out;
}

int run_verify(const std::string& suite, int bound, const std::string& output) {
  std::vector<hfock::SuiteCheck> checks;
  if (suite == "identities" || suite == "all") {
    for (auto& c : hfock::identities_suite(bound).checks) checks.push_back(c);
  }
  if (suite == "crystals" || suite == "all") {
    for (auto& c : hfock::crystals_suite(bound).checks) checks.push_back(c);
  }
  std::string text;
  int passed = 0;
  int failed = 0;
  for (const auto& c : checks) {
    text += (c.failed ? "FAIL " : "PASS ") + c.name + ": " + std::to_string(c.passed) + " passed, " +
            std::to_string(c.failed) + " failed";
    if (c.failed) text += " (first: " + c.first_failure + ")";
    text += "\n";
    passed += c.passed;
    failed += c.failed;
  }
  text += "total: " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
  write_output(output, text);
  return failed ? kSuiteFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals and Heisenberg operators on charged multipartitions"};
  app.require_subcommand(1);
  Options o;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "input document, '-' for stdin");
    cmd->add_option("--output", o.output, "output path, '-' for stdout");
    cmd->add_option("--e", o.e, "expected modulus e of the input");
    cmd->add_option("--l", o.l, "expected level of the input");
  };

  std::string target;
  auto* convert = app.add_subcommand("convert", "convert between document kinds");
  add_io(convert);
  convert->add_option("--to", target, "multipartition | abacus | level1 | dual")
      ->required()
      ->check(CLI::IsMember({"multipartition", "abacus", "level1", "dual"}));

  std::vector<std::string> ops;
  auto* apply = app.add_subcommand("apply", "apply operators in order");
  add_io(apply);
  apply->add_option("ops", ops, "f:i e:i df:j de:j b:σ binv:σ b1:c bm1:d")->required();

  std::string graph_type = "ue";
  std::string format = "dot";
  int depth = 3;
  auto* graph = app.add_subcommand("graph", "crystal graph from a seed");
  add_io(graph);
  graph->add_option("--type", graph_type, "ue | ul | h")->check(CLI::IsMember({"ue", "ul", "h"}));
  graph->add_option("--depth", depth, "breadth-first depth")->check(CLI::NonNegativeNumber);
  graph->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  auto* kappa_cmd = app.add_subcommand("kappa", "κ and the doubly highest weight vertex");
  add_io(kappa_cmd);

  std::string algebra = "ue";
  auto* hw = app.add_subcommand("hw", "highest weight test");
  add_io(hw);
  hw->add_option("--algebra", algebra, "ue | ul | h | double")->check(CLI::IsMember({"ue", "ul", "h", "double"}));

  int count = 1;
  auto* strips = app.add_subcommand("strips", "list the first good vertical strips");
  add_io(strips);
  strips->add_option("--count", count, "number of strips")->check(CLI::NonNegativeNumber);

  std::string suite = "all";
  int bound = 6;
  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("--output", o.output, "output path, '-' for stdout");
  verify->add_option("--suite", suite, "identities | crystals | all")
      ->check(CLI::IsMember({"identities", "crystals", "all"}));
  verify->add_option("--bound", bound, "degree or size bound")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (convert->parsed()) {
      const hfock::ChargedMultipartition x = load(o);
      write_output(o.output, hfock::emit(hfock::convert(x, *hfock::document_kind_from_string(target))));
    } else if (apply->parsed()) {
      std::optional<hfock::ChargedMultipartition> x = load(o);
      for (const auto& spec : ops) {
        x = apply_op(*x, spec);
        if (!x) {
          write_output(o.output, "annihilated\n");
          return kAnnihilated;
        }
      }
      write_output(o.output, hfock::emit(*x));
    } else if (graph->parsed()) {
      const hfock::ChargedMultipartition x = load(o);
      hfock::LabeledGraph g;
      if (graph_type == "h") {
        if (!hfock::is_h_hw(x)) {
          throw std::invalid_argument("seed is not Heisenberg highest weight; run 'hfock kappa' to find one");
        }
        g = hfock::to_labeled(hfock::h_crystal_graph(x, depth));
      } else {
        const auto alg = graph_type == "ue" ? hfock::Algebra::Ue : hfock::Algebra::Ul;
        g = hfock::to_labeled(hfock::crystal_graph(x, alg, depth), alg);
      }
      write_output(o.output, format == "dot" ? hfock::to_dot(g) : hfock::to_json(g));
    } else if (kappa_cmd->parsed()) {
      const auto k = hfock::kappa(load(o));
      std::string text = "# kappa" + ints_text(k.kappa.parts()) + "\n";
      text += "# ue-path" + ints_text(k.ue_path) + "\n";
      text += "# ul-path" + ints_text(k.ul_path) + "\n";
      write_output(o.output, text + hfock::emit(k.doubly_hw));
    } else if (hw->parsed()) {
      const hfock::ChargedMultipartition x = load(o);
      bool result = false;
      if (algebra == "ue") result = hfock::is_hw(x, hfock::Algebra::Ue);
      if (algebra == "ul") result = hfock::is_hw(x, hfock::Algebra::Ul);
      if (algebra == "h") result = hfock::is_h_hw(x);
      if (algebra == "double") result = hfock::is_hw(x, hfock::Algebra::Ue) && hfock::is_hw(x, hfock::Algebra::Ul);
      write_output(o.output, result ? "true\n" : "false\n");
    } else if (strips->parsed()) {
      const hfock::ChargedMultipartition x = load(o);
      std::string text;
      for (const auto& s : hfock::good_strips(x, count)) {
        for (const auto& b : s.boxes) text += box_text(b) + " ";
        text += "contents" + ints_text(hfock::strip_contents(s, x)) + "\n";
      }
      write_output(o.output, text);
    } else if (verify->parsed()) {
      return run_verify(suite, bound, o.output);
    }
  } catch (const UsageError& e) {
    std::cerr << "hfock: " << e.what() << "\n";
    return kUsage;
  } catch (const hfock::ParseError& e) {
    std::cerr << "hfock: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hfock: invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::logic_error& e) {
    std::cerr << "hfock: internal consistency error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
