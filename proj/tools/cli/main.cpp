#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "config.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  using namespace steklov::cli;

  CLI::App app{"Boundary evolution and semiflow toolkit"};
  std::string subcommand;
  std::string config_path;
  std::string out_dir = ".";
  app.add_option("subcommand", subcommand, "flow | evolve | map | cocycle | pairing | verify")->required();
  app.add_option("--config", config_path, "configuration file")->required();
  app.add_option("--out", out_dir, "output directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!subcommand_from_string(subcommand)) throw ConfigError("unknown subcommand '" + subcommand + "'");
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + config_path);
    std::stringstream text;
    text << in.rdbuf();
    const RunConfig config = parse_config(text.str());
    if (to_string(config.subcommand) != subcommand) {
      throw ConfigError("invalid field 'subcommand': config says '" +
                        std::string(to_string(config.subcommand)) + "', command line says '" +
                        subcommand + "'");
    }
    return run(config, out_dir, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
