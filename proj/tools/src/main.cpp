#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
  using namespace majorana::cli;

  CLI::App app{"Majorana spinor algebra, transforms and verification"};
  std::string command;
  std::string config_path;
  std::string out_dir;
  bool quiet = false;
  app.add_option("command", command, "verify | evolve | transform | spectrum")
      ->required()
      ->check(CLI::IsMember(known_commands()));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "output directory (overrides output.directory)");
  app.add_flag("--quiet", quiet, "suppress the summary on stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig config = load_config(config_path);
    if (!config.command.empty() && config.command != command)
      throw ConfigError("config names command '" + config.command + "' but '" + command + "' was requested");
    config.command = command;
    if (!out_dir.empty()) config.output.directory = out_dir;
    const CommandResult result = run_command(config);
    if (!quiet) std::cout << result.summary;
    return result.status;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
