#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "augsimp/errors.hpp"
#include "augsimp/extend.hpp"
#include "augsimp/json_io.hpp"
#include "augsimp/kernels.hpp"
#include "augsimp/named_matrices.hpp"
#include "augsimp/sset.hpp"
#include "augsimp/verify.hpp"

using namespace augsimp;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxTableIndex = 1000;
constexpr int kMaxOeisCount = 1000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_all(in);
}

AugSSet read_complex(const std::string& text, const std::string& source) {
  AugSSet x = augsset_from_json(text);
  if (auto report = validate(x); !report.ok) throw ParseError(source + " is not a valid complex: " + report.message);
  return x;
}

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw UsageError("bad integer in " + what + ": " + std::string(s));
  return v;
}

kernels::IndexRange parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(what + " must look like a..b, got " + text);
  kernels::IndexRange r{parse_int(std::string_view(text).substr(0, dots), what),
                        parse_int(std::string_view(text).substr(dots + 2), what)};
  if (r.lo < -1 || r.hi < r.lo || r.hi > kMaxTableIndex)
    throw UsageError(what + " must satisfy -1 <= a <= b <= " + std::to_string(kMaxTableIndex));
  return r;
}

void print_report(const SuiteReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = "report";
    j["passed"] = report.passed();
    j["failures"] = report.failures();
    j["waivers"] = report.waivers();
    j["complexes_validated"] = report.complexes_validated;
    j["complexes_invalid"] = report.complexes_invalid;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"id", c.id}, {"passed", c.passed}, {"waived", c.waived}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& c : report.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << (c.waived ? "[waiver] " : "") << c.id << "  " << c.detail << '\n';
  std::cout << report.checks.size() << " checks, " << report.failures() << " failed, " << report.waivers()
            << " waivers, " << report.complexes_validated << " complexes validated (" << report.complexes_invalid
            << " invalid)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Augmented semi-simplicial sets, their actions and cardinal matrices"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Emit a complex as JSON");
  std::string build_kind;
  std::string build_arg;
  build->add_option("kind", build_kind, "gamma N | boundary N | hexagon | subcomplex FILE")
      ->required()
      ->check(CLI::IsMember({"gamma", "boundary", "hexagon", "subcomplex"}));
  build->add_option("arg", build_arg, "N, or a FILE (- for stdin)");

  auto* transform = app.add_subcommand("transform", "Apply a construction to the complex on stdin");
  std::string op;
  std::string join_file;
  int repeat = 1;
  transform->add_option("op", op, "cil | cil0 | cil2 | sd | cone-l | cone-r | join FILE")
      ->required()
      ->check(CLI::IsMember({"cil", "cil0", "cil2", "sd", "cone-l", "cone-r", "join"}));
  transform->add_option("file", join_file, "right factor for join");
  transform->add_option("--repeat", repeat, "apply k times")->check(CLI::Range(1, 64));

  auto* card = app.add_subcommand("cardinal", "Print the cardinal sequence of the complex on stdin");
  std::string card_format = "text";
  card->add_option("--format", card_format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "Print a window of a named matrix");
  std::string table_name;
  std::string rows_text = "-1..6";
  std::string cols_text = "-1..6";
  std::string table_format = "text";
  table->add_option("name", table_name)->required()->check(CLI::IsMember(named_matrix_names()));
  table->add_option("--rows", rows_text, "a..b");
  table->add_option("--cols", cols_text, "a..b");
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<int> verify_n;
  std::optional<std::size_t> verify_count;
  std::uint64_t seed = 1;
  std::string verify_format = "text";
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", verify_n, "size bound")->check(CLI::Range(0, 6));
  verify->add_option("--count", verify_count, "random cases")->check(CLI::Range(1, 100000));
  verify->add_option("--seed", seed);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  auto* oeis = app.add_subcommand("oeis", "Compare matrix columns with closed forms");
  std::string check = "all";
  int oeis_count = 50;
  std::vector<std::string> oeis_choices = oeis_check_names();
  oeis_choices.push_back("all");
  oeis->add_option("check", check)->check(CLI::IsMember(oeis_choices));
  oeis->add_option("--count", oeis_count)->check(CLI::Range(1, kMaxOeisCount));
  std::string oeis_format = "text";
  oeis->add_option("--format", oeis_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      AugSSet x;
      if (build_kind == "hexagon") {
        if (!build_arg.empty()) throw UsageError("hexagon takes no argument");
        x = hexagon();
      } else if (build_kind == "subcomplex") {
        if (build_arg.empty()) throw UsageError("subcomplex needs a FILE");
        auto spec = subcomplex_spec_from_json(read_file(build_arg));
        x = subcomplex_of_gamma(spec.n, spec.generators);
      } else {
        if (build_arg.empty()) throw UsageError(build_kind + " needs N");
        const int n = parse_int(build_arg, build_kind);
        x = build_kind == "gamma" ? augsimp::gamma(n) : boundary(n);
      }
      std::cout << augsset_to_json(x) << '\n';
    } else if (*transform) {
      if ((op == "join") != !join_file.empty()) throw UsageError("a FILE is required by join and only by join");
      AugSSet x = read_complex(read_all(std::cin), "stdin");
      const AugSSet right = op == "join" ? read_complex(read_file(join_file), join_file) : AugSSet();
      for (int k = 0; k < repeat; ++k) {
        if (op == "cil") x = cylinder(x);
        else if (op == "cil0") x = cylinder0(x);
        else if (op == "cil2") x = cylinder2(x);
        else if (op == "sd") x = subdivision(x);
        else if (op == "cone-l") x = cone_left(x);
        else if (op == "cone-r") x = cone_right(x);
        else x = join(x, right);
      }
      if (auto report = validate(x); !report.ok) {
        std::cerr << "output fails validation: " << report.message << '\n';
        return kExitFailure;
      }
      std::cout << augsset_to_json(x) << '\n';
    } else if (*card) {
      const AugSequence c = cardinal(read_complex(read_all(std::cin), "stdin"));
      std::cout << (card_format == "json" ? sequence_to_json(c) : c.str()) << '\n';
    } else if (*table) {
      auto m = named_matrix(table_name);
      auto w = kernels::materialize(*m, parse_range(rows_text, "--rows"), parse_range(cols_text, "--cols"));
      w.name = table_name;
      if (table_format == "json") std::cout << window_to_json(w) << '\n';
      else std::cout << window_to_text(w);
    } else if (*verify) {
      SuiteOptions options{verify_n, verify_count, seed};
      SuiteReport report = *run_suite(suite, options);
      print_report(report, verify_format);
      return report.passed() ? 0 : kExitFailure;
    } else if (*oeis) {
      SuiteReport report;
      for (const auto& name : oeis_check_names())
        if (check == "all" || check == name) report += *oeis_suite(name, oeis_count);
      print_report(report, oeis_format);
      return report.passed() ? 0 : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VertexOutOfRange& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
