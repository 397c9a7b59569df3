#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orbiquiver/cli.hpp"
#include "orbiquiver/config.hpp"

namespace {

void emit(const orbi::Json& j, const std::string& out_path) {
  const std::string text = j.dump() + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw orbi::Error(orbi::ErrorKind::Schema, "cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor-labeled quiver path algebras over P^1: bases, resolutions, orbifold checks."};
  std::string command;
  std::string config_path;
  std::string out_path;
  bool pretty = false;
  std::uint64_t seed = 0;
  int max_twist = 2;
  app.add_option("command", command,
                 "quiver-check | basis | matrix | hom-table | resolve | certify-hd | sdim | exccol | stability")
      ->required();
  app.add_option("config", config_path, "JSON or TOML config file, - for stdin")->required();
  app.add_flag("--pretty", pretty, "human-readable report on stderr");
  app.add_option("--seed", seed, "seed for randomized runs");
  app.add_option("--max-twist", max_twist, "largest |twist| in hom tables")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "write JSON here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    orbi::Json config = orbi::load_config(config_path);
    if (!config.is_object()) throw orbi::Error(orbi::ErrorKind::Schema, "config must be an object");
    if (!config.contains("command")) config["command"] = command;
    if (config["command"] != command)
      throw orbi::Error(orbi::ErrorKind::Schema, "config is for command " + config["command"].dump());
    const orbi::Report report = orbi::run(config, {seed, max_twist});
    emit(report.json, out_path);
    if (pretty) std::cerr << report.text;
    return 0;
  } catch (const orbi::Error& e) {
    std::cout << orbi::error_json(e).dump() << "\n";
    if (pretty) std::cerr << e.what() << "\n";
    return orbi::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cout << orbi::Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 4;
  }
}
