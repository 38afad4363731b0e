#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seshadri/cli.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string params_text = "{}";
  std::uint64_t seed = 0;
  bool seed_set = false;
  long trials = 5;
  long m_max = -1;
  long size_budget = -1;
  bool pretty = false;
};

std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("SESHADRI_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

int env_parallel(int fallback) {
  if (const char* s = std::getenv("SESHADRI_PARALLEL")) return std::atoi(s);
  return fallback;
}

int emit(const seshadri::cli::JobOutcome& outcome, bool pretty) {
  if (pretty)
    std::cout << outcome.envelope.dump(2) << "\n";
  else
    std::cout << outcome.envelope.dump() << "\n";
  return outcome.status;
}

int run_single(const std::string& command, const CommonOpts& opts) {
  json params = json::parse(opts.params_text, nullptr, false);
  if (params.is_discarded()) {
    std::cerr << "error: --params is not valid JSON\n";
    return 2;
  }
  if (opts.m_max >= 0 && !params.contains("m_max")) params["m_max"] = opts.m_max;
  if (opts.size_budget >= 0 && !params.contains("size_budget"))
    params["size_budget"] = opts.size_budget;
  json job = {{"command", command}, {"params", params}};
  job["seed"] = env_seed(opts.seed);
  job["trials"] = opts.trials;
  return emit(seshadri::cli::run_job(job, env_seed(opts.seed), opts.trials),
              opts.pretty);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculator for Seshadri constants, plane interpolation "
      "certificates, and symbolic-power containments"};
  app.require_subcommand(1);

  static const std::vector<std::string> kCommands = {
      "toric",    "delzant",   "abelian",   "ruled",          "delpezzo",
      "k3",       "gentype",   "enriques",  "slope",          "zariski",
      "destab",   "linsys",    "certify-p2", "table-verify",  "symbolic",
      "star",     "generic-points",          "pell",          "eps-rl",
      "sslope"};

  CommonOpts common;
  std::vector<CLI::App*> subs;
  for (const std::string& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, "Run the " + name + " calculator");
    sub->add_option("--params", common.params_text,
                    "Command parameters as a JSON object");
    sub->add_option("--seed", common.seed, "Seed for randomized probes");
    sub->add_option("--trials", common.trials, "Trial count for generic probes");
    sub->add_option("--m-max", common.m_max, "Multiplicity cutoff (certify-p2)");
    sub->add_option("--size-budget", common.size_budget,
                    "Matrix dimension budget (certify-p2)");
    sub->add_flag("--pretty", common.pretty, "Indent the JSON output");
    subs.push_back(sub);
  }

  std::string batch_input;
  std::uint64_t batch_seed = 0;
  long batch_trials = 5;
  int batch_parallel = 1;
  bool batch_pretty = false;
  CLI::App* batch = app.add_subcommand(
      "batch", "Run one JSON job per line of a file, results in input order");
  batch->add_option("--input", batch_input, "Job file, one JSON object per line")
      ->required();
  batch->add_option("--seed", batch_seed, "Batch seed; jobs derive sub-seeds");
  batch->add_option("--trials", batch_trials, "Default trial count");
  batch->add_option("--parallel", batch_parallel, "Concurrent jobs");
  batch->add_flag("--pretty", batch_pretty, "Indent the JSON output");

  CLI11_PARSE(app, argc, argv);

  if (batch->parsed()) {
    std::ifstream in(batch_input);
    if (!in) {
      std::cerr << "error: cannot open " << batch_input << "\n";
      return 2;
    }
    seshadri::cli::BatchOptions opts;
    opts.seed = env_seed(batch_seed);
    opts.trials = batch_trials;
    opts.parallelism = env_parallel(batch_parallel);
    if (batch_pretty) {
      // Pretty mode re-renders each envelope; data is identical.
      std::ostringstream buf;
      int status = seshadri::cli::run_batch(in, buf, opts);
      std::istringstream lines(buf.str());
      std::string line;
      while (std::getline(lines, line))
        std::cout << json::parse(line).dump(2) << "\n";
      return status;
    }
    return seshadri::cli::run_batch(in, std::cout, opts);
  }

  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) return run_single(kCommands[i], common);
  return 2;
}
