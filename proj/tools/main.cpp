// yoklab: command-line front end for the Yokonuma-Hecke toolkit.
//
// Exit status: 0 every check passed, 1 a check failed, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace yoklab;
using namespace yoklab::cli;

constexpr int kDefaultMaxR = 4;
constexpr int kDefaultMaxN = 4;

void check_limits(const Config& cfg) {
  if (cfg.r < 1 || cfg.n < 1) throw UsageError("--r and --n must be at least 1");
  if (!cfg.allow_large && (cfg.r > kDefaultMaxR || cfg.n > kDefaultMaxN))
    throw UsageError("instance exceeds r <= 4, n <= 4; pass --allow-large to run it anyway");
}

template <class Command>
int dispatch(const Config& cfg, Command&& command) {
  check_limits(cfg);
  AnyField field = make_field(parse_field_spec(cfg.field, cfg.r));
  Outcome out;
  std::visit(
      [&](const auto& f) {
        parse_q(f, cfg);  // reject a malformed --q even where it is unused
        command(f, cfg, out);
      },
      field);
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw UsageError("cannot write " + cfg.output);
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;
  if (cfg.json) {
    out.data["ok"] = out.ok;
    os << out.data.dump(2) << "\n";
  } else {
    os << out.text.str();
  }
  return out.ok ? 0 : 1;
}

#define YOKLAB_COMMAND(fn) [](const auto& f, const Config& c, Outcome& o) { fn(f, c, o); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in 0-Yokonuma-Hecke, fourth-presentation and nil Yokonuma-Hecke algebras"};
  app.require_subcommand(1);
  Config cfg;
  std::string exec = "parallel";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "order of the cyclic group")->capture_default_str();
    sub->add_option("--n", cfg.n, "number of strands")->capture_default_str();
    sub->add_option("--q", cfg.q, "deformation parameter, e.g. 0, 2, 1/2*z^1")->capture_default_str();
    sub->add_option("--field", cfg.field, "cyclotomic | fp:<p> with p = 1 mod r")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--output", cfg.output, "write output to a file");
    sub->add_flag("--allow-large", cfg.allow_large, "lift the r <= 4, n <= 4 limit");
    sub->add_option("--exec", exec, "parallel | serial")
        ->check(CLI::IsMember({"parallel", "serial"}))
        ->capture_default_str();
  };

  std::map<CLI::App*, std::function<int()>> actions;
  auto add = [&](const char* name, const char* help, auto command) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    actions[sub] = [&cfg, command] { return dispatch(cfg, command); };
    return sub;
  };

  add("dim", "dimension and basis sizes", YOKLAB_COMMAND(cmd_dim));
  auto* verify = add("verify", "relation residuals of a presentation", YOKLAB_COMMAND(cmd_verify));
  verify->add_option("--presentation", cfg.presentation, "1 | 2 | 4 | nil")->required();
  auto* mult = add("mult", "product of two elements given as JSON files", YOKLAB_COMMAND(cmd_mult));
  mult->add_option("--lhs", cfg.lhs_file, "left factor")->required();
  mult->add_option("--rhs", cfg.rhs_file, "right factor")->required();
  auto* simples = add("simples", "simple modules at q = 0", YOKLAB_COMMAND(cmd_simples));
  simples->add_flag("--list", cfg.list, "list labels and representations");
  simples->add_flag("--count", cfg.count, "print the count only");
  simples->add_flag("--bruteforce", cfg.bruteforce, "compare with a brute-force enumeration");
  simples->add_flag("--nil", cfg.nil, "nil algebra");
  auto* radical = add("radical", "commutator ideal, its powers and the semisimplicity certificate",
                      YOKLAB_COMMAND(cmd_radical));
  radical->add_flag("--nil", cfg.nil, "nil algebra");
  auto* gram = add("gram", "Gram matrix of the trace form", YOKLAB_COMMAND(cmd_gram));
  gram->add_flag("--nil", cfg.nil, "nil algebra");
  gram->add_option("--export", cfg.export_file, "write the matrix as JSON");
  gram->add_option("--form", cfg.form, "sum (all t-coefficients on w_0) | identity (coefficient of g_{w_0})")
      ->capture_default_str();
  auto* nakayama = add("nakayama", "twisted trace identity", YOKLAB_COMMAND(cmd_nakayama));
  nakayama->add_flag("--nil", cfg.nil, "nil algebra");
  auto* ex = nakayama->add_flag("--exhaustive", cfg.exhaustive, "all basis pairs");
  nakayama->add_option("--samples", cfg.samples, "number of random pairs")->excludes(ex);
  nakayama->add_option("--form", cfg.form, "sum | identity")->capture_default_str();
  auto* cells = add("cells", "beta values of the standard basis cells", YOKLAB_COMMAND(cmd_cells));
  cells->add_flag("--nil", cfg.nil, "nil algebra");
  add("aks-compare", "invariants of Y(0) and of the fourth presentation", YOKLAB_COMMAND(cmd_aks_compare));
  add("report", "every check as one JSON bundle", YOKLAB_COMMAND(cmd_report));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.exec = exec == "serial" ? Exec::Serial : Exec::Parallel;
  try {
    for (auto* sub : app.get_subcommands()) {
      if (sub->get_name() == "report") cfg.json = true;
      return actions.at(sub)();
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
