#ifndef STEKLOV_CLI_CONFIG_HPP
#define STEKLOV_CLI_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "steklov/analytic_core.hpp"

namespace steklov::cli {

/// Parse or validation failure; exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { flow, evolve, map, cocycle, pairing, verify };

const char* to_string(Subcommand s);
std::optional<Subcommand> subcommand_from_string(const std::string& name);

struct DomainSpec {
  enum class Kind { disk, polynomial, starlike, starlike_cos } kind = Kind::disk;
  std::vector<Complex> coefficients;  // c_2, c_3, ... for polynomial maps
  std::vector<double> radii;          // rho samples for star-like domains
  double amplitude = 0.0;             // rho = 1 + amplitude cos(phi)
  int max_iter = 200;
  double map_tol = 1e-14;
};

/// A holomorphic function given as a constant or a finite power series.
struct SeriesSpec {
  std::vector<Complex> coefficients;
};

struct GeneratorSpec {
  enum class Kind { dilation, rotation, parabolic, bp, series } kind = Kind::dilation;
  SeriesSpec F{{Complex{1.0}}};
  Complex b{};
  SeriesSpec series;
};

struct DataSpec {
  enum class Kind { monomial, coefficients, named } kind = Kind::monomial;
  int degree = 1;
  std::vector<Complex> coefficients;
  std::string name;
};

struct CocycleSpecConfig {
  enum class Kind { exponential, coboundary, derivative } kind = Kind::exponential;
  SeriesSpec omega{{Complex{1.0}, Complex{1.0}}};
};

struct PairingConfig {
  enum class Kind { geometric, coefficients } kind = Kind::geometric;
  int degree = 511;
  std::vector<Complex> coefficients;
  double p = 1.0;
  int max_mode = 8;
  std::vector<double> radii{0.9, 0.99, 0.999, 0.9999};
};

struct RunConfig {
  Subcommand subcommand = Subcommand::verify;
  DomainSpec domain;
  GeneratorSpec generator;
  std::optional<SeriesSpec> weight;
  DataSpec data;
  std::vector<double> times{1.0};
  Index grid_size = 256;
  double tol = 1e-10;
  Complex z0{0.5};
  CocycleSpecConfig cocycle;
  PairingConfig pairing;
};

/// Parses key=value lines with optional [section] headers. '#' starts a
/// comment. Unknown keys and sections are errors.
RunConfig parse_config(const std::string& text);

}  // namespace steklov::cli

#endif  // STEKLOV_CLI_CONFIG_HPP
