// vgreen: Green's relations of variant semigroups of IS_n and T_n.

#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace vgreen;
using namespace vgreen::cli;

namespace {

void add_family(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "element family")
      ->check(CLI::IsMember({"is", "t"}));
}

void add_selection(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "degree")->check(CLI::Range(1, 8));
  cmd->add_option("--a", cfg.a, "deformation, e.g. \"2,-,1\"");
}

void add_sweep(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--all-a", cfg.all_a, "every deformation of degree n (n <= 4)");
  cmd->add_flag("--rank-reps", cfg.rank_reps, "one partial identity per rank (IS only)");
  cmd->add_option("--sample", cfg.sample, "number of seeded random deformations");
  cmd->add_option("--seed", cfg.seed, "seed for --sample");
}

void add_output(CLI::App* cmd, RunConfig& cfg, const std::vector<std::string>& formats) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_flag("--full", cfg.full, "never elide member lists");
  cmd->add_option("--threshold", cfg.threshold, "elide member lists above this size");
}

template <template <class> class Fn>
int dispatch(const RunConfig& cfg) {
  if (cfg.family == "is") return Fn<PartialPerm>{}(cfg);
  return Fn<Transformation>{}(cfg);
}

template <class E>
struct Green {
  int operator()(const RunConfig& c) const { return cmd_green<E>(c, std::cout); }
};
template <class E>
struct Verify {
  int operator()(const RunConfig& c) const { return cmd_verify<E>(c, std::cout); }
};
template <class E>
struct Count {
  int operator()(const RunConfig& c) const { return cmd_count<E>(c, std::cout); }
};
template <class E>
struct Eggbox {
  int operator()(const RunConfig& c) const { return cmd_eggbox<E>(c, std::cout); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's relations of variant semigroups of IS_n and T_n"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.format.clear();

  auto* green = app.add_subcommand("green", "classes of one relation for one deformation");
  add_family(green, cfg);
  add_selection(green, cfg);
  green->add_option("--relation", cfg.relation, "r|l|h|d|j")
      ->check(CLI::IsMember({"r", "l", "h", "d", "j"}));
  green->add_option("--method", cfg.method, "brute|closed|both")
      ->check(CLI::IsMember({"brute", "closed", "both"}));
  green->add_option("--mode", cfg.mode, "closed-form mode: paper-literal|corrected|both")
      ->check(CLI::IsMember({"paper-literal", "corrected", "both"}));
  add_output(green, cfg, {"text", "json", "csv"});

  auto* verify = app.add_subcommand("verify", "closed forms and counts against brute force");
  add_family(verify, cfg);
  add_selection(verify, cfg);
  add_sweep(verify, cfg);
  verify->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* count = app.add_subcommand("count", "class counts: formulas against enumeration");
  add_family(count, cfg);
  add_selection(count, cfg);
  add_sweep(count, cfg);
  count->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* eggbox = app.add_subcommand("eggbox", "egg-box diagrams of every D-class");
  add_family(eggbox, cfg);
  add_selection(eggbox, cfg);
  add_output(eggbox, cfg, {"dot", "json"});

  auto* iso = app.add_subcommand("iso", "isomorphism witness between two IS_n variants");
  add_selection(iso, cfg);
  iso->add_option("--b", cfg.b, "second deformation");
  iso->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* dual = app.add_subcommand("dual", "inverse-map duality check on IS_n");
  add_selection(dual, cfg);
  add_sweep(dual, cfg);
  dual->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (cfg.format.empty()) cfg.format = eggbox->parsed() ? "dot" : "text";

  try {
    cfg.engine = engine_options_from_env();
    if (green->parsed()) return dispatch<Green>(cfg);
    if (verify->parsed()) return dispatch<Verify>(cfg);
    if (count->parsed()) return dispatch<Count>(cfg);
    if (eggbox->parsed()) return dispatch<Eggbox>(cfg);
    if (iso->parsed()) return cmd_iso(cfg, std::cout);
    if (dual->parsed()) return cmd_dual(cfg, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << " (|S| = " << e.cardinality() << ")\n";
    return 2;
  } catch (const InvalidElement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
