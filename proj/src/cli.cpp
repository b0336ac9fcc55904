#include "eqc/cli.hpp"

#include "eqc/diagram_file.hpp"
#include "eqc/error.hpp"
#include "eqc/report.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>

namespace eqc {

namespace {

struct Flags {
  std::string path;
  std::optional<int> max_degree;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  bool oracle = false;
  bool timings = false;
};

void add_flags(CLI::App* sub, Flags& flags) {
  sub->add_option("diagram", flags.path, "Group diagram file")->required();
  sub->add_option("--max-degree", flags.max_degree, "Truncation degree (even, default 40)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", flags.seed, "Seed for generic regular-sequence candidates");
  sub->add_flag("--oracle", flags.oracle, "Cross-check every kernel slice against the brute-force solver");
  sub->add_flag("--timings", flags.timings, "Record elapsed time in the report");
}

AnalysisOptions options_for(Command command) {
  AnalysisOptions o;
  switch (command) {
    case Command::Analyze: break;
    case Command::Kernel:
      o.generators = false;
      o.freeness = false;
      o.cohen_macaulay = false;
      break;
    case Command::Hilbert:
    case Command::Basis:
      o.cohen_macaulay = false;
      break;
    case Command::CheckFormality:
      o.kernel = false;
      break;
  }
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant cohomology of cohomogeneity-one actions from group diagrams", "eqcohom"};
  app.require_subcommand(1);

  Flags flags;
  const std::map<std::string, Command> commands{{"analyze", Command::Analyze},
                                                {"hilbert", Command::Hilbert},
                                                {"kernel", Command::Kernel},
                                                {"check-formality", Command::CheckFormality},
                                                {"basis", Command::Basis}};
  const std::map<std::string, std::string> help{
      {"analyze", "Full report: kernel module, freeness, Hilbert series, Cohen-Macaulay certificate"},
      {"hilbert", "Hilbert series of the equivariant cohomology module"},
      {"kernel", "Degree slices of the kernel of (f, g) -> pi1(f) - pi2(g)"},
      {"check-formality", "Rank-based formality verdict and Krull dimension"},
      {"basis", "Module generators and free basis search"}};
  for (const auto& [name, cmd] : commands) add_flags(app.add_subcommand(name, help.at(name)), flags);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Command command = Command::Analyze;
  for (const auto& [name, cmd] : commands) {
    if (app.got_subcommand(name)) command = cmd;
  }

  try {
    const ParsedDiagram parsed = parse_diagram(flags.path);
    AnalysisOptions options = options_for(command);
    options.max_degree = flags.max_degree.value_or(parsed.options.max_degree.value_or(40));
    if (options.max_degree % 2 != 0) {
      err << "error: --max-degree must be even, got " << options.max_degree << "\n";
      return kExitInvalid;
    }
    options.seed = flags.seed.value_or(parsed.options.seed.value_or(1));
    options.hsop = parsed.options.hsop;
    options.oracle = flags.oracle;
    options.timings = flags.timings;
    const std::string format = flags.format.value_or(parsed.options.format.value_or("text"));

    const AnalysisReport report = analyze(parsed.diagram, options);
    const auto j = to_json(report, command);
    out << (format == "json" ? render_json(j) : render_text(j));
    if (!report.issues.empty()) {
      for (const auto& issue : report.issues) err << "cross-check failed: " << issue << "\n";
      return kExitCrossCheck;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "invalid diagram:\n";
    for (const auto& p : e.problems()) err << "  " << p << "\n";
    return kExitInvalid;
  } catch (const IncompatibleSetup& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace eqc
