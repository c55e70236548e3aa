#include "config.hpp"

#include <cerrno>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace steklov::cli {

namespace {

const std::map<std::string, std::set<std::string>> kKeys{
    {"", {"subcommand", "domain", "generator", "weight", "data", "t", "N", "tol", "z0"}},
    {"bp", {"F", "b"}},
    {"series", {"coeffs"}},
    {"map", {"max_iter", "tol"}},
    {"cocycle", {"kind", "omega"}},
    {"pairing", {"f", "p", "max_mode", "radii"}},
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(trim(item));
  return parts;
}

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw ConfigError("invalid field '" + field + "': " + why);
}

double parse_double(const std::string& field, const std::string& text) {
  if (text.empty()) invalid(field, "empty number");
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (errno != 0 || end != text.c_str() + text.size()) invalid(field, "'" + text + "' is not a number");
  return value;
}

long parse_integer(const std::string& field, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || errno != 0 || end != text.c_str() + text.size()) {
    invalid(field, "'" + text + "' is not an integer");
  }
  return value;
}

// "re" or "re:im"
Complex parse_complex(const std::string& field, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {parse_double(field, text), 0.0};
  return {parse_double(field, trim(text.substr(0, colon))),
          parse_double(field, trim(text.substr(colon + 1)))};
}

std::vector<Complex> parse_complex_list(const std::string& field, const std::string& text) {
  std::vector<Complex> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_complex(field, part));
  if (values.empty()) invalid(field, "empty list");
  return values;
}

std::vector<double> parse_double_list(const std::string& field, const std::string& text) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_double(field, part));
  if (values.empty()) invalid(field, "empty list");
  return values;
}

// "kind" or "kind:argument"
std::pair<std::string, std::string> parse_tagged(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {trim(text.substr(0, colon)), trim(text.substr(colon + 1))};
}

SeriesSpec parse_function(const std::string& field, const std::string& text) {
  const auto [tag, arg] = parse_tagged(text);
  if (tag == "constant") return {{parse_complex(field, arg)}};
  if (tag == "series") return {parse_complex_list(field, arg)};
  invalid(field, "expected constant:c or series:a0,a1,...");
}

DomainSpec parse_domain(const std::string& text) {
  DomainSpec d;
  const auto [tag, arg] = parse_tagged(text);
  if (tag == "disk") {
    d.kind = DomainSpec::Kind::disk;
  } else if (tag == "polynomial") {
    d.kind = DomainSpec::Kind::polynomial;
    d.coefficients = parse_complex_list("domain", arg);
  } else if (tag == "starlike") {
    d.kind = DomainSpec::Kind::starlike;
    d.radii = parse_double_list("domain", arg);
    if (d.radii.size() < 8) invalid("domain", "need at least 8 radius samples");
  } else if (tag == "starlike-cos") {
    d.kind = DomainSpec::Kind::starlike_cos;
    d.amplitude = parse_double("domain", arg);
  } else {
    invalid("domain", "unknown domain '" + tag + "'");
  }
  return d;
}

DataSpec parse_data(const std::string& text) {
  DataSpec d;
  const auto [tag, arg] = parse_tagged(text);
  if (tag == "monomial") {
    d.kind = DataSpec::Kind::monomial;
    d.degree = static_cast<int>(parse_integer("data", arg));
  } else if (tag == "coeffs") {
    d.kind = DataSpec::Kind::coefficients;
    d.coefficients = parse_complex_list("data", arg);
  } else if (tag == "named") {
    d.kind = DataSpec::Kind::named;
    d.name = arg;
    if (arg != "cosine" && arg != "sine" && arg != "bump") {
      invalid("data", "unknown named signal '" + arg + "' (cosine, sine, bump)");
    }
  } else {
    invalid("data", "expected monomial:n, coeffs:... or named:...");
  }
  return d;
}

}  // namespace

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::flow: return "flow";
    case Subcommand::evolve: return "evolve";
    case Subcommand::map: return "map";
    case Subcommand::cocycle: return "cocycle";
    case Subcommand::pairing: return "pairing";
    case Subcommand::verify: return "verify";
  }
  return "?";
}

std::optional<Subcommand> subcommand_from_string(const std::string& name) {
  for (auto s : {Subcommand::flow, Subcommand::evolve, Subcommand::map, Subcommand::cocycle,
                 Subcommand::pairing, Subcommand::verify}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> entries;  // "section.key" -> value
  std::string section;
  std::istringstream stream(text);
  std::string raw;
  for (int line_no = 1; std::getline(stream, raw); ++line_no) {
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!kKeys.count(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kKeys.at(section).count(key)) {
      throw ConfigError(where + "unknown key '" + key + "'" +
                        (section.empty() ? "" : " in section [" + section + "]"));
    }
    const std::string full = section.empty() ? key : section + "." + key;
    if (!entries.emplace(full, value).second) throw ConfigError(where + "duplicate key '" + full + "'");
  }

  auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  };

  RunConfig config;
  const auto sub = get("subcommand");
  if (!sub) throw ConfigError("missing required field 'subcommand'");
  const auto parsed = subcommand_from_string(*sub);
  if (!parsed) invalid("subcommand", "unknown subcommand '" + *sub + "'");
  config.subcommand = *parsed;

  if (auto v = get("domain")) config.domain = parse_domain(*v);
  if (auto v = get("map.max_iter")) {
    config.domain.max_iter = static_cast<int>(parse_integer("map.max_iter", *v));
    if (config.domain.max_iter < 1) invalid("map.max_iter", "must be positive");
  }
  if (auto v = get("map.tol")) {
    config.domain.map_tol = parse_double("map.tol", *v);
    if (!(config.domain.map_tol > 0.0)) invalid("map.tol", "must be > 0");
  }

  if (auto v = get("generator")) {
    GeneratorSpec& g = config.generator;
    if (*v == "dilation") {
      g.kind = GeneratorSpec::Kind::dilation;
    } else if (*v == "rotation") {
      g.kind = GeneratorSpec::Kind::rotation;
    } else if (*v == "parabolic") {
      g.kind = GeneratorSpec::Kind::parabolic;
    } else if (*v == "bp") {
      g.kind = GeneratorSpec::Kind::bp;
    } else if (*v == "series") {
      g.kind = GeneratorSpec::Kind::series;
      const auto coeffs = get("series.coeffs");
      if (!coeffs) throw ConfigError("missing required field 'series.coeffs' for generator=series");
      g.series = {parse_complex_list("series.coeffs", *coeffs)};
    } else {
      invalid("generator", "unknown generator '" + *v + "'");
    }
  }
  if (auto v = get("bp.F")) config.generator.F = parse_function("bp.F", *v);
  if (auto v = get("bp.b")) config.generator.b = parse_complex("bp.b", *v);

  if (auto v = get("weight")) {
    if (*v != "zero") config.weight = parse_function("weight", *v);
  }
  if (auto v = get("data")) config.data = parse_data(*v);
  if (auto v = get("t")) {
    config.times = parse_double_list("t", *v);
    for (double t : config.times) {
      if (!(t >= 0.0)) invalid("t", "times must be >= 0");
    }
  }
  if (auto v = get("N")) {
    const long n = parse_integer("N", *v);
    if (n < 8 || !is_power_of_two(n)) invalid("N", "must be a power of two >= 8");
    config.grid_size = n;
  }
  if (auto v = get("tol")) {
    config.tol = parse_double("tol", *v);
    if (!(config.tol > 0.0)) invalid("tol", "must be > 0");
  }
  if (auto v = get("z0")) config.z0 = parse_complex("z0", *v);

  if (auto v = get("cocycle.kind")) {
    if (*v == "exponential") {
      config.cocycle.kind = CocycleSpecConfig::Kind::exponential;
    } else if (*v == "coboundary") {
      config.cocycle.kind = CocycleSpecConfig::Kind::coboundary;
    } else if (*v == "derivative") {
      config.cocycle.kind = CocycleSpecConfig::Kind::derivative;
    } else {
      invalid("cocycle.kind", "unknown kind '" + *v + "'");
    }
  }
  if (auto v = get("cocycle.omega")) config.cocycle.omega = parse_function("cocycle.omega", *v);

  if (auto v = get("pairing.f")) {
    const auto [tag, arg] = parse_tagged(*v);
    if (tag == "geometric") {
      config.pairing.kind = PairingConfig::Kind::geometric;
      config.pairing.degree = static_cast<int>(parse_integer("pairing.f", arg));
      if (config.pairing.degree < 0) invalid("pairing.f", "degree must be >= 0");
    } else if (tag == "series") {
      config.pairing.kind = PairingConfig::Kind::coefficients;
      config.pairing.coefficients = parse_complex_list("pairing.f", arg);
    } else {
      invalid("pairing.f", "expected geometric:degree or series:a0,a1,...");
    }
  }
  if (auto v = get("pairing.p")) {
    config.pairing.p = parse_double("pairing.p", *v);
    if (!(config.pairing.p >= 1.0)) invalid("pairing.p", "must be >= 1");
  }
  if (auto v = get("pairing.max_mode")) {
    config.pairing.max_mode = static_cast<int>(parse_integer("pairing.max_mode", *v));
    if (config.pairing.max_mode < 0 || config.pairing.max_mode > config.grid_size / 4) {
      invalid("pairing.max_mode", "must lie in [0, N/4]");
    }
  }
  if (auto v = get("pairing.radii")) {
    config.pairing.radii = parse_double_list("pairing.radii", *v);
    for (std::size_t i = 0; i < config.pairing.radii.size(); ++i) {
      const double r = config.pairing.radii[i];
      if (!(r > 0.0 && r < 1.0) || (i > 0 && !(r > config.pairing.radii[i - 1]))) {
        invalid("pairing.radii", "must increase strictly inside (0, 1)");
      }
    }
  }

  if (config.data.kind == DataSpec::Kind::monomial &&
      std::abs(config.data.degree) >= config.grid_size / 2) {
    invalid("data", "monomial degree outside the grid band");
  }
  if (config.data.kind == DataSpec::Kind::coefficients &&
      static_cast<Index>(config.data.coefficients.size()) > config.grid_size / 2) {
    invalid("data", "more coefficients than the grid resolves");
  }
  if (config.subcommand == Subcommand::cocycle && config.times.size() != 1) {
    invalid("t", "cocycle takes exactly one time");
  }
  return config;
}

}  // namespace steklov::cli
