#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kwb/pipeline.hpp"

namespace {

std::vector<std::string> split_tasks(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (std::getline(in, t, ','))
    if (!t.empty()) out.push_back(t);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for bigraded dg algebras: Koszul "
               "duals, Hochschild and cyclic theories, Chern pairings"};
  app.require_subcommand(1);

  kwb::PipelineOptions opt;
  std::string tasks;
  std::string format = "tsv";

  CLI::App* compute = app.add_subcommand("compute", "Run tasks over one algebra");
  compute->add_option("--algebra", opt.algebra_path, "Presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  compute->add_option("--adams-max", opt.adams_max,
                      "Adams truncation (window is [-J, J])")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--hmin", opt.hmin, "Lower homological bound");
  compute->add_option("--hmax", opt.hmax, "Upper homological bound");
  {
    std::string all;
    for (const auto& t : kwb::pipeline_tasks()) all += (all.empty() ? "" : ", ") + t;
    compute->add_option("--tasks", tasks, "Comma-separated tasks (" + all + ")");
  }
  compute->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  compute->add_option("--cache", opt.cache_dir,
                      "Cache directory (default: $KWB_CACHE_DIR if set)");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.tasks = split_tasks(tasks);
    const kwb::ReportBundle report = kwb::run_pipeline(opt);
    std::cout << (format == "json" ? kwb::to_json(report) : kwb::to_tsv(report));
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "kwb: " << e.what() << "\n";
    return 2;
  }
}
