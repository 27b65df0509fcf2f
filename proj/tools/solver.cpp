// Command-line driver: solver --config <path> [--output-dir <dir>] [--override key=value ...]

#include <iostream>

#include <CLI11.hpp>

#include "lrvp/errors.hpp"
#include "lrvp/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Low-rank Vlasov-Poisson solver with conservative corrections"};
  std::string config_path;
  std::string output_dir;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "Run configuration (key = value)")->required();
  app.add_option("--output-dir", output_dir, "Directory for CSV and snapshot output");
  app.add_option("--override", overrides, "Override a configuration entry, key=value");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  lrvp::RunConfig config;
  try {
    if (!output_dir.empty()) overrides.push_back("output_dir=" + output_dir);
    config = lrvp::parse_config(config_path, overrides);
  } catch (const lrvp::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  }

  try {
    return lrvp::run(config, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
