#include <iostream>

#include <CLI11.hpp>

#include "thetanull/cli/classify.hpp"
#include "thetanull/cli/selftest.hpp"

int main(int argc, char** argv) {
  using namespace thetanull::cli;

  CLI::App app{"Theta constants, tangent-cone ranks and theta-null strata of period matrices"};
  ClassifyFlags classify;
  SelftestFlags selftest;
  bool run_tests = false;
  double target_eps = 0.0, vanish_tol = 0.0, rank_tol = 0.0;

  auto* input = app.add_option("--input", classify.input_path, "JSON input document")->check(CLI::ExistingFile);
  app.add_option("--out", classify.out_path, "write the report here instead of stdout");
  auto* eps_opt = app.add_option("--target-eps", target_eps, "truncation target per theta value")
                      ->check(CLI::PositiveNumber);
  auto* vanish_opt = app.add_option("--vanish-tol", vanish_tol, "vanishing threshold for theta constants")
                         ->check(CLI::PositiveNumber);
  auto* rank_opt = app.add_option("--rank-tol", rank_tol, "relative singular value cut-off")
                       ->check(CLI::PositiveNumber);
  auto* selftest_flag = app.add_flag("--selftest", run_tests, "run the acceptance criteria");
  app.add_option("--filter", selftest.filter, "run only criteria whose key contains NAME")->needs(selftest_flag);
  app.add_option("--seed", selftest.seed, "seed for the random draws of the self-test")->needs(selftest_flag);
  app.add_option("--threads", classify.threads, "worker threads")->check(CLI::PositiveNumber);
  input->excludes(selftest_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (run_tests) {
    selftest.threads = classify.threads;
    return run_selftest(selftest, std::cout, std::cerr);
  }
  if (classify.input_path.empty()) {
    std::cerr << "error: --input or --selftest is required\n";
    return kExitValidation;
  }
  if (*eps_opt) classify.target_eps = target_eps;
  if (*vanish_opt) classify.vanish_tol = vanish_tol;
  if (*rank_opt) classify.rank_tol = rank_tol;
  return run_classify(classify, std::cout, std::cerr);
}
