#include "commands.hpp"

#include "cusg/error.hpp"

#include <iostream>

#include "CLI11.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitReplay = 70;

}  // namespace

int main(int argc, char** argv) {
  using namespace cusg::cli;
  CLI::App app{"Exact computations on positively ordered monoids and Cu-semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "human";
  app.add_option("--bound", opt.bound, "Multiplier bound B (K = 2B), or the tensor size bound");
  app.add_option("--depth", opt.depth, "Rewriting depth for tensor searches")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
  app.add_flag("--replay", opt.replay, "Re-verify every emitted witness and certificate");
  app.add_option("--seed", opt.seed, "Seed for random:<size> inputs")->capture_default_str();

  std::string input, right;
  std::vector<std::string> props, at, maps, stage_inputs;

  auto* check = app.add_subcommand("check", "Decide properties of a semigroup");
  check->add_option("input", input, "File, random:<size>, or named semiring")->required();
  check->add_option("--props", props, "Comma-separated property names")->delimiter(',');

  auto* tensor = app.add_subcommand("tensor", "Tensor products");
  TensorArgs targs;
  std::vector<std::string> leq_args, aux_args;
  bool saturate = false, identity = false;
  tensor->add_option("left", input)->required();
  tensor->add_option("right", right)->required();
  auto* sat_flag = tensor->add_flag("--saturate", saturate, "Enumerate the tensor product of finite carriers");
  auto* id_flag = tensor->add_flag("--identity", identity, "Closed-form identity for named semirings");
  auto* leq_opt = tensor->add_option("--leq", leq_args, "Decide F <= G for formal sums `a@b + ...`")->expected(2);
  auto* aux_opt = tensor->add_option("--aux", aux_args, "Decide the auxiliary relation F < G")->expected(2);
  tensor->add_option("--cap", targs.cap, "Truncation of nat")->capture_default_str();
  sat_flag->excludes(id_flag)->excludes(leq_opt)->excludes(aux_opt);
  id_flag->excludes(leq_opt)->excludes(aux_opt);
  leq_opt->excludes(aux_opt);

  auto* complete = app.add_subcommand("complete", "W- and Cu-completions");
  bool use_mu = false, use_gamma = false;
  complete->add_option("input", input)->required();
  auto* mu_flag = complete->add_flag("--mu", use_mu);
  auto* gamma_flag = complete->add_flag("--gamma", use_gamma);
  mu_flag->excludes(gamma_flag);

  auto* classify = app.add_subcommand("classify", "Classify a solid or simple Cu-semiring");
  classify->add_option("input", input)->required();

  auto* limit = app.add_subcommand("limit", "Inductive limits at a finite stage");
  LimitArgs largs;
  limit->add_option("stages", stage_inputs, "Stage documents, in order");
  limit->add_option("--map", maps, "Targets of each element of stage i, space separated");
  limit->add_option("--stage", largs.stage, "Stage to read the limit at");
  limit->add_option("--doubling", largs.doubling, "E_{2^i} stages under j -> 2j, compared with r(2^inf)");

  auto* functional = app.add_subcommand("functional", "Functionals and their values");
  functional->add_option("input", input)->required();
  functional->add_option("--at", at, "Normalization elements (finite) or evaluation points (named)")->delimiter(',');

  auto* compare = app.add_subcommand("compare", "Comparison relations between two elements");
  std::string ea, eb;
  std::optional<std::string> over;
  compare->add_option("input", input)->required();
  compare->add_option("a", ea)->required();
  compare->add_option("b", eb)->required();
  compare->add_option("--over", over, "Also compare 1(x)a and 1(x)b over pureinf, r(q) or interval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  opt.machine = format == "machine";

  try {
    Report rep;
    if (*check) {
      rep = cmd_check(load_input(input, opt), props, opt);
    } else if (*tensor) {
      if (identity) {
        targs.mode = TensorArgs::Mode::Identity;
      } else if (!leq_args.empty()) {
        targs.mode = TensorArgs::Mode::Leq;
        targs.f = leq_args[0];
        targs.g = leq_args[1];
      } else if (!aux_args.empty()) {
        targs.mode = TensorArgs::Mode::Aux;
        targs.f = aux_args[0];
        targs.g = aux_args[1];
      } else if (!saturate) {
        throw cusg::InputError("tensor needs one of --saturate, --identity, --leq, --aux");
      }
      rep = cmd_tensor(load_input(input, opt), load_input(right, opt), targs, opt);
    } else if (*complete) {
      if (!use_mu && !use_gamma) throw cusg::InputError("complete needs --mu or --gamma");
      rep = cmd_complete(load_input(input, opt), use_gamma, opt);
    } else if (*classify) {
      rep = cmd_classify(load_input(input, opt), opt);
    } else if (*limit) {
      std::vector<Input> stages;
      for (const auto& s : stage_inputs) stages.push_back(load_input(s, opt));
      largs.maps = maps;
      rep = cmd_limit(stages, largs, opt);
    } else if (*functional) {
      rep = cmd_functional(load_input(input, opt), at, opt);
    } else if (*compare) {
      rep = cmd_compare(load_input(input, opt), ea, eb, over, opt);
    }
    rep.command.assign(argv + 1, argv + argc);
    rep.print(std::cout, opt.machine);
    return rep.exit_code();
  } catch (const cusg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ReplayMismatch& e) {
    std::cerr << "REPLAY FAILED: " << e.what() << '\n';
    return kExitReplay;
  }
}
