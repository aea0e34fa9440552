#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbe/eval.hpp"
#include "nbe/surface.hpp"
#include "nbe/syntax.hpp"

namespace {

struct UsageError {
  std::string message;
};

struct Options {
  std::string input_path;
  std::vector<std::string> free_decls;
  std::uint64_t fuel = nbe::default_fuel;
  bool json = false;
  bool show_steps = false;
  bool show_de_bruijn = false;
};

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("input", opt.input_path, "Input file (defaults to stdin)");
  cmd->add_option("--free", opt.free_decls,
                  "Free variable declaration name:type (repeatable, outermost first)");
  cmd->add_option("--fuel", opt.fuel, "Delay-step budget (default 1000000)");
  cmd->add_flag("--json", opt.json, "Machine-readable output");
  cmd->add_flag("--show-steps", opt.show_steps, "Also print the step report");
  cmd->add_flag("--show-de-bruijn", opt.show_de_bruijn, "Also print the de Bruijn form");
}

std::string read_input(const Options& opt) {
  std::ostringstream buffer;
  if (opt.input_path.empty()) {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(opt.input_path);
    if (!in) throw UsageError{"cannot open input file: " + opt.input_path};
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<nbe::FreeVar> parse_free_decls(const std::vector<std::string>& decls) {
  std::vector<nbe::FreeVar> free;
  free.reserve(decls.size());
  for (const std::string& decl : decls) {
    const std::size_t colon = decl.find(':');
    if (colon == std::string::npos || colon == 0) {
      throw UsageError{"malformed --free declaration (want name:type): " + decl};
    }
    try {
      free.push_back({decl.substr(0, colon), nbe::parse_type(decl.substr(colon + 1))});
    } catch (const nbe::ParseError& e) {
      throw UsageError{"malformed --free type in '" + decl + "': " + e.what()};
    }
  }
  return free;
}

std::string step_line(const nbe::NormalizeReport& report) {
  std::ostringstream os;
  os << "steps: eval=" << report.eval_steps << " readback=" << report.readback_steps
     << " total=" << report.total_steps;
  return os.str();
}

enum class Command { Normalize, Check, Steps };

int run(Command command, const Options& opt) {
  const std::vector<nbe::FreeVar> free = parse_free_decls(opt.free_decls);
  std::vector<nbe::Ty> free_types;
  std::vector<std::string> free_names;
  for (const nbe::FreeVar& fv : free) {
    free_names.push_back(fv.name);
    free_types.push_back(fv.type);
  }
  const nbe::Cxt ctx(free_types);

  const std::string source = read_input(opt);
  const nbe::Tm term = nbe::resolve(free, nbe::parse(source));
  const nbe::CheckedTm checked = nbe::infer_type(ctx, term);

  if (command == Command::Check) {
    if (opt.json) {
      nlohmann::ordered_json j{{"type", nbe::to_string(checked.type())}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << nbe::to_string(checked.type()) << "\n";
    }
    return 0;
  }

  const nbe::NormalizeOutcome outcome = nbe::normalize(checked, opt.fuel);
  if (const auto* exhausted = std::get_if<nbe::FuelExhausted>(&outcome)) {
    std::cerr << "fuel exhausted after " << exhausted->fuel_spent << " steps\n";
    return 2;
  }
  const nbe::NormalizeReport& report = std::get<nbe::NormalizeReport>(outcome);
  const std::string printed = nbe::print_nf(free_names, ctx, checked.type(), report.normal);

  if (command == Command::Steps) {
    if (opt.json) {
      nlohmann::ordered_json j{{"evalSteps", report.eval_steps},
                               {"readbackSteps", report.readback_steps},
                               {"totalSteps", report.total_steps}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << step_line(report) << "\n";
    }
    return 0;
  }

  if (opt.json) {
    nlohmann::ordered_json j{{"normal", printed},
                             {"type", nbe::to_string(checked.type())},
                             {"evalSteps", report.eval_steps},
                             {"readbackSteps", report.readback_steps},
                             {"totalSteps", report.total_steps}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << printed << "\n";
  if (opt.show_de_bruijn) {
    const nbe::Tm embedded = nbe::embed_nf(ctx, checked.type(), report.normal);
    std::cout << "de-bruijn: " << nbe::print_tm_de_bruijn(embedded) << "\n";
  }
  if (opt.show_steps) std::cout << step_line(report) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalizer for the simply-typed lambda calculus with explicit delay steps"};
  app.require_subcommand(1);

  Options normalize_opt;
  Options check_opt;
  Options steps_opt;
  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "Parse, typecheck, and normalize a term");
  add_common_options(cmd_normalize, normalize_opt);
  CLI::App* cmd_check = app.add_subcommand("check", "Parse and typecheck only; print the type");
  add_common_options(cmd_check, check_opt);
  CLI::App* cmd_steps =
      app.add_subcommand("steps", "Normalize and print only the step report");
  add_common_options(cmd_steps, steps_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (cmd_normalize->parsed()) return run(Command::Normalize, normalize_opt);
    if (cmd_check->parsed()) return run(Command::Check, check_opt);
    return run(Command::Steps, steps_opt);
  } catch (const nbe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const nbe::ScopeError& e) {
    std::cerr << "scope error: " << e.what() << "\n";
    return 1;
  } catch (const nbe::TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << e.message << "\n";
    return 64;
  }
}
