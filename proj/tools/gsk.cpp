#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "gsk/commands.hpp"
#include "gsk/error.hpp"

namespace {

std::vector<std::int64_t> parse_coords(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::logic_error&) {
      throw gsk::ParseError("bad coordinate list '" + s + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gsk::cli;
  CLI::App app{"Finite-group equivariant Euler characteristics, Burnside rings, Mackey functors and K0 of squares"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the report as JSON");

  std::string file, file2, a, b, invariant;
  std::vector<std::string> classes;
  int p = 5;
  std::uint64_t seed = 0;

  auto* euler = app.add_subcommand("euler", "Equivariant Euler characteristic of a complex, two ways");
  euler->add_option("complex", file, "Complex file")->required()->check(CLI::ExistingFile);
  auto* marks = app.add_subcommand("marks", "Table of marks of a group");
  marks->add_option("group", file, "Group file")->required()->check(CLI::ExistingFile);
  auto* bmul = app.add_subcommand("burnside-mul", "Product in the Burnside ring");
  bmul->add_option("group", file, "Group file")->required()->check(CLI::ExistingFile);
  bmul->add_option("--a", a, "Orbit-basis coordinates, comma separated")->required();
  bmul->add_option("--b", b, "Orbit-basis coordinates, comma separated")->required();
  auto* mackey = app.add_subcommand("mackey-check", "Verify the Burnside Mackey functor");
  mackey->add_option("group", file, "Group file")->required()->check(CLI::ExistingFile);
  auto* spans = app.add_subcommand("span-compose", "Compose two spans by pullback");
  spans->add_option("first", file, "Span file")->required()->check(CLI::ExistingFile);
  spans->add_option("second", file2, "Span file")->required()->check(CLI::ExistingFile);
  auto* k0 = app.add_subcommand("k0", "K0 of a squares presentation");
  k0->add_option("presentation", file, "Presentation file")->required()->check(CLI::ExistingFile);
  k0->add_option("--classes", classes, "Two objects to compare")->expected(2);
  k0->add_option("--invariant", invariant, "Invariant assignment file")->check(CLI::ExistingFile);
  auto* slice = app.add_subcommand("slice-counterexample", "Equal Euler characteristics, different slice types");
  slice->add_option("--p", p, "Prime, at least 5");
  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");
  selftest->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  gsk::RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*euler) report = cmd_euler(file);
    else if (*marks) report = cmd_marks(file);
    else if (*bmul) report = cmd_burnside_mul(file, parse_coords(a), parse_coords(b));
    else if (*mackey) report = cmd_mackey_check(file);
    else if (*spans) report = cmd_span_compose(file, file2);
    else if (*k0) {
      std::optional<std::pair<std::string, std::string>> pair;
      if (!classes.empty()) pair = std::make_pair(classes[0], classes[1]);
      std::optional<fs::path> inv;
      if (!invariant.empty()) inv = invariant;
      report = cmd_k0(file, pair, inv);
    } else if (*slice) report = cmd_slice(p);
    else if (*selftest) report = cmd_selftest(seed);
  } catch (const gsk::Error& e) {
    std::cerr << "gsk: " << e.what() << "\n";
    return 1;
  }
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << render_text(report);
  return report.all_pass() ? 0 : 2;
}
