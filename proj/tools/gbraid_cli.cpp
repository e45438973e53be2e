// gbraid: command-line front end for G_n^3 words, braid programs, projections
// and cylindrical reconstruction.
//
// Exit codes: 0 success, 1 domain/validation error, 2 parse or usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbraid/gbraid.hpp"

namespace {

using namespace gbraid;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& arg) {
  if (arg == "-") return read_all(std::cin);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + arg + "'");
  return read_all(in);
}

GWord read_word(const std::string& arg, int n) {
  return parse_word(arg == "-" ? read_all(std::cin) : arg, n);
}

MoveProgram read_program(const std::string& arg, int n_flag) {
  auto p = parse_program(read_source(arg));
  if (n_flag != 0 && n_flag != p.n()) {
    throw Error(ErrorCode::ParseError,
                "--n " + std::to_string(n_flag) + " does not match the program's n=" + std::to_string(p.n()));
  }
  return p;
}

void print_classification(const ClassifiedWord& cw) {
  std::cout << "#\tletter\tstatus\n";
  for (std::size_t t = 0; t < cw.word.size(); ++t) {
    std::cout << t + 1 << '\t' << to_string(cw.word[t]) << '\t' << to_string(cw.statuses[t]) << '\n';
  }
  std::cout << "realisable: " << (cw.realisable() ? "yes" : "no") << '\n';
}

int run_selftest() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    failures += ok ? 0 : 1;
  };
  const auto tetra = relation_census(4, Relation::Tetra);
  bool counts_agree = true;
  for (const auto& row : tetra.rows) counts_agree = counts_agree && row.note.find("counts differ") == std::string::npos;
  check("tetrahedron LHS/RHS good counts agree (n=4)", counts_agree);
  check("square census (n=4)", relation_census(4, Relation::Square).violations() == 0);
  check("commute census (n=5)", relation_census(5, Relation::Commute).violations() == 0);
  check("full twist compiles to the empty word", compile(full_twist_program(4, 1)).word.empty());
  const auto a13 = compile(pure_braid_generator_program(4, 1, 3)).word;
  check("A13 word is realisable", is_realisable(a13));
  check("A13 word returns to the initial state", run_word(initial_state(4), a13) == initial_state(4));
  const auto inv = annular_invariants(reconstruct_axis(a13, 4));
  check("A13 linking(1,3) = 1 around axis 4", inv.linking(1, 3) == 1 && inv.linking(1, 2) == 0);
  const auto tetra_lhs = parse_word("a123 a124 a134 a234", 4);
  const auto tetra_rhs = parse_word("a234 a134 a124 a123", 4);
  check("tetrahedron relation found by bounded search",
        bounded_equal(tetra_lhs, tetra_rhs, 1000, 8).kind == EqualityVerdict::Kind::Equal);
  return failures == 0 ? 0 : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gbraid: free 3-braid groups, braid programs and realisability"};
  app.require_subcommand(1);

  int n = 0;
  std::string input;

  auto* compile_cmd = app.add_subcommand("compile", "compile a program JSON file into a G_n^3 word");
  bool events = false;
  bool check_closed = false;
  compile_cmd->add_option("program", input, "program file, or - for stdin")->required();
  compile_cmd->add_flag("--events", events, "also print the collinearity events");
  compile_cmd->add_flag("--check-closed", check_closed, "fail unless the motion returns to its start");
  compile_cmd->add_option("--n", n, "expected strand count");

  auto* classify_cmd = app.add_subcommand("classify", "classify every letter as good or bad");
  classify_cmd->add_option("--n", n, "strand count")->required();
  classify_cmd->add_option("word", input, "word, or - for stdin")->required();

  auto* project_cmd = app.add_subcommand("project", "delete bad letters");
  bool stable = false;
  project_cmd->add_flag("--stable", stable, "iterate to the fixed point");
  project_cmd->add_option("--n", n, "strand count")->required();
  project_cmd->add_option("word", input, "word, or - for stdin")->required();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "cylindrical braid around an axis strand");
  int axis = 0;
  reconstruct_cmd->add_option("--axis", axis, "axis strand")->required();
  reconstruct_cmd->add_option("--n", n, "strand count")->required();
  reconstruct_cmd->add_option("word", input, "word, or - for stdin")->required();

  auto* equal_cmd = app.add_subcommand("equal", "bounded search for a relation path between two words");
  std::size_t depth = 0;
  std::size_t max_len = 0;
  std::string second;
  equal_cmd->add_option("--n", n, "strand count")->required();
  equal_cmd->add_option("--depth", depth, "maximum number of expanded words")->required();
  equal_cmd->add_option("--max-len", max_len, "maximum word length reached by insertions")->required();
  equal_cmd->add_option("w1", input, "first word")->required();
  equal_cmd->add_option("w2", second, "second word")->required();

  auto* parity_cmd = app.add_subcommand("parity", "generators occurring an odd number of times");
  parity_cmd->add_option("--n", n, "strand count")->required();
  parity_cmd->add_option("word", input, "word, or - for stdin")->required();

  auto* witness_cmd = app.add_subcommand("witness", "look for evidence that a word is not a full-twist image");
  witness_cmd->add_option("--n", n, "strand count")->required();
  witness_cmd->add_option("word", input, "word, or - for stdin")->required();

  auto* census_cmd = app.add_subcommand("census", "status census over orientation states");
  std::string lemma;
  census_cmd->add_option("--lemma", lemma, "tetra | square | commute")
      ->required()
      ->check(CLI::IsMember({"tetra", "square", "commute"}));
  census_cmd->add_option("--n", n, "strand count")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate a program JSON");
  std::vector<int> braid;
  int twist = 0;
  std::string embed;
  int power = 1;
  auto* braid_opt = gen_cmd->add_option("--braid", braid, "pure braid generator A_ij as i,j")->delimiter(',')->expected(2);
  auto* twist_opt = gen_cmd->add_option("--full-twist", twist, "full twist with m turns");
  auto* embed_opt = gen_cmd->add_option("--embed", embed, "add a far stationary strand to a program file");
  gen_cmd->add_option("--power", power, "repeat the A_ij program (negative: inverse)");
  gen_cmd->add_option("--n", n, "strand count");
  braid_opt->excludes(twist_opt)->excludes(embed_opt);
  twist_opt->excludes(embed_opt);

  auto* selftest_cmd = app.add_subcommand("selftest", "run built-in sanity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (compile_cmd->parsed()) {
      auto program = read_program(input, n);
      if (check_closed) program.closed = true;
      const auto out = compile(program);
      std::cout << to_string(out.word) << '\n';
      if (events) {
        for (const auto& e : out.events) std::cout << to_string(e) << '\n';
        std::cout << "twist_turns " << out.twist_turns << '\n';
      }
    } else if (classify_cmd->parsed()) {
      print_classification(classify_word(read_word(input, n)));
    } else if (project_cmd->parsed()) {
      const auto w = read_word(input, n);
      if (stable) {
        const auto sp = stable_projection(w);
        std::cout << to_string(sp.word) << '\n';
        std::cerr << "passes " << sp.passes << '\n';
      } else {
        std::cout << to_string(project_once(w)) << '\n';
      }
    } else if (reconstruct_cmd->parsed()) {
      const auto cyl = reconstruct_axis(read_word(input, n), axis);
      std::cout << to_string(cyl) << '\n' << to_string(annular_invariants(cyl));
    } else if (equal_cmd->parsed()) {
      const auto v = bounded_equal(parse_word(input, n), parse_word(second, n), depth, max_len);
      std::cout << to_string(v.kind);
      if (v.kind == EqualityVerdict::Kind::Equal) {
        std::cout << " path:";
        for (const auto& m : v.path) std::cout << ' ' << to_string(m);
      } else if (v.kind == EqualityVerdict::Kind::Distinct) {
        std::cout << " (" << v.witness << ")";
      } else {
        std::cout << " (explored " << v.explored << " words)";
      }
      std::cout << '\n';
    } else if (parity_cmd->parsed()) {
      std::cout << to_string(generator_parity(read_word(input, n))) << '\n';
    } else if (witness_cmd->parsed()) {
      std::cout << to_string(kernel_witness(read_word(input, n))) << '\n';
    } else if (census_cmd->parsed()) {
      const Relation which = lemma == "tetra" ? Relation::Tetra : (lemma == "square" ? Relation::Square : Relation::Commute);
      std::cout << to_table(relation_census(n, which));
    } else if (gen_cmd->parsed()) {
      MoveProgram program = [&] {
        if (!braid.empty()) {
          if (n == 0) throw Error(ErrorCode::ParseError, "--braid needs --n");
          return program_power(pure_braid_generator_program(n, braid[0], braid[1]), power);
        }
        if (twist_opt->count() > 0) {
          if (n == 0) throw Error(ErrorCode::ParseError, "--full-twist needs --n");
          return full_twist_program(n, twist);
        }
        if (!embed.empty()) return embed_at_infinity(read_program(embed, n));
        throw Error(ErrorCode::ParseError, "gen needs one of --braid, --full-twist, --embed");
      }();
      std::cout << program_to_json(program).dump() << '\n';
    } else if (selftest_cmd->parsed()) {
      return run_selftest();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kUsageError : kDomainError;
  }
  return 0;
}
