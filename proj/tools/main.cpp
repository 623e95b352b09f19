#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace htc::cli;
  CLI::App app{"Transition cocycles, nerves, bundles and classifying maps"};
  app.set_version_flag("--version", kToolVersion);
  Job job;
  app.add_option("command", job.command, "Verb to run")->required()->check(CLI::IsMember(verbs()));
  app.add_option("--input,-i", job.inputs, "Input JSON documents")->required();
  app.add_option("--output,-o", job.output, "Report path (stdout when omitted)");
  app.add_option("--budget", job.budget, "Step budget for exhaustive searches");
  app.add_option("--max-degree", job.maxDegree, "Highest homology degree");
  app.add_option("--mode", job.mode, "Bundle construction")->check(CLI::IsMember({"direct", "skeletal"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }
  const auto outcome = run(job);
  if (outcome.exitCode == kInputError || outcome.exitCode == kBudgetExceeded) {
    std::cerr << htc::io::Json{{"error", outcome.exitCode == kBudgetExceeded ? "budget-exceeded" : "input"},
                               {"message", outcome.error},
                               {"toolVersion", kToolVersion}}
                     .dump()
              << "\n";
    return outcome.exitCode;
  }
  if (!job.output) std::cout << render(outcome.report);
  return outcome.exitCode;
}
