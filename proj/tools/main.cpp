#include "commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  using namespace xxff::cli;

  RunConfig cfg;
  CLI::App app{"Formfactors, prefactors and correlator asymptotics of the XX spin chain"};
  app.require_subcommand(1);
  app.add_option("--L", cfg.L, "chain length (even)");
  app.add_option("--m-max", cfg.m_max, "highest harmonic");
  app.add_option("--x-max", cfg.x_max, "largest distance");
  app.add_option("--order", cfg.order, "highest power of 1/x in the exact series (even)");
  app.add_option("--cutoff", cfg.cutoff, "highest excitation level in the sum identities");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "write to this file instead of stdout");

  const std::pair<const char*, const char*> commands[] = {
      {"constants", "A, zeta'(-1), G(1/2), C0 and their cross-checks"},
      {"prefactors", "C_m and y_m for m <= --m-max"},
      {"formfactor", "lattice formfactors: ED comparison, scaling table, golden rows"},
      {"series", "exact rational asymptotic series of the correlator"},
      {"exact", "thermodynamic correlator from the Cauchy product and the determinant oracle"},
      {"sum-identity", "particle-hole sum identities against their closed forms"},
      {"compare", "Luttinger prediction against the exact correlator"},
      {"verify", "run every check; level quick or full"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
    if (std::string(name) == "formfactor") {
      sub->add_flag("--golden", cfg.golden, "emit the (L, M, state, |psi|^2) golden table for L <= --L");
    }
    if (std::string(name) == "verify") {
      sub->add_option("level", cfg.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
  cfg.echo = echo.str();

  Report report;
  try {
    report = run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  if (cfg.out) {
    file.open(*cfg.out);
    if (!file) {
      std::cerr << "error: cannot open " << *cfg.out << '\n';
      return 2;
    }
  }
  std::ostream& os = cfg.out ? static_cast<std::ostream&>(file) : std::cout;
  if (cfg.format == "json") {
    os << to_json(report).dump(2) << '\n';
  } else {
    write_csv(os, report);
  }
  return report.ok() ? 0 : 1;
}
