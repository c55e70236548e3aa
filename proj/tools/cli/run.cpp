#include "run.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "csv.hpp"

namespace steklov::cli {

namespace {

AnalyticFunction domain_generator(const RunConfig& config, const ConformalMap& map) {
  const AnalyticFunction disk = build_disk_generator(config.generator);
  return map.is_identity() ? disk : transplant_generator(disk, map);
}

std::optional<AnalyticFunction> build_weight(const RunConfig& config) {
  if (!config.weight) return std::nullopt;
  return build_function(*config.weight);
}

void write_signal(const std::filesystem::path& path, const BoundarySignal& h) {
  CsvWriter csv(path, "index,theta,re_sample,im_sample");
  for (Index j = 0; j < h.grid().size(); ++j) {
    const Complex s = h.samples()(j);
    csv.row({static_cast<double>(j), h.grid().angle(j), s.real(), s.imag()});
  }
}

int run_flow(const RunConfig& config, const std::filesystem::path& out) {
  const BoundaryGrid grid(config.grid_size);
  const ConformalMap map = build_map(config, grid);
  const AnalyticFunction G = domain_generator(config, map);
  const double t_end = *std::max_element(config.times.begin(), config.times.end());

  CsvWriter csv(out / "flow.csv", "t,re_z,im_z,re_dz,im_dz");
  csv.row({0.0, config.z0.real(), config.z0.imag(), 1.0, 0.0});
  flow_integrate(G, config.z0, t_end, config.tol, {}, [&](double t, const FlowResult& r) {
    csv.row({t, r.endpoint.real(), r.endpoint.imag(), r.derivative.real(), r.derivative.imag()});
  });
  return kExitOk;
}

int run_evolve(const RunConfig& config, const std::filesystem::path& out) {
  const BoundaryGrid grid(config.grid_size);
  const ConformalMap map = build_map(config, grid);
  const BoundarySignal u0 = build_data(config.data, grid);
  const RobinProblem problem =
      map.is_identity()
          ? RobinProblem::on_disk(build_disk_generator(config.generator), build_weight(config), u0)
          : RobinProblem::on_domain(map, domain_generator(config, map), build_weight(config), u0);

  write_signal(out / "initial.csv", u0);
  CsvWriter csv(out / "evolve.csv", "t,theta,re_u,im_u");
  for (double t : config.times) {
    const BoundarySignal u = robin_evolve(problem, t, config.tol);
    for (Index j = 0; j < grid.size(); ++j) {
      csv.row({t, grid.angle(j), u.samples()(j).real(), u.samples()(j).imag()});
    }
  }
  return kExitOk;
}

int run_map(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  const BoundaryGrid grid(config.grid_size);
  const ConformalMap map = build_map(config, grid);
  const BoundaryCorrespondence& table = map.table();
  CsvWriter csv(out / "map.csv", "theta,sigma,re_x,im_x,re_nu,im_nu");
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex nu = unit_normal_at_node(map, j);
    csv.row({grid.angle(j), table.sigma(j), table.points(j).real(), table.points(j).imag(),
             nu.real(), nu.imag()});
  }
  log << "iterations " << map.diagnostics().iterations << ", round-trip error "
      << CsvWriter::number(map.round_trip_error()) << '\n';
  return kExitOk;
}

int run_cocycle(const RunConfig& config, const std::filesystem::path& out) {
  const BoundaryGrid grid(config.grid_size);
  const ConformalMap map = build_map(config, grid);
  const AnalyticFunction G = domain_generator(config, map);
  const auto make_spec = [&]() {
    switch (config.cocycle.kind) {
      case CocycleSpecConfig::Kind::exponential: {
        const auto weight = build_weight(config);
        if (!weight) throw ConfigError("invalid field 'weight': exponential cocycles need a weight");
        return CocycleSpec::exponential(G, weight->with_domain(G.domain()));
      }
      case CocycleSpecConfig::Kind::coboundary:
        return CocycleSpec::coboundary(G, build_function(config.cocycle.omega).with_domain(G.domain()));
      case CocycleSpecConfig::Kind::derivative:
        break;
    }
    return CocycleSpec::derivative(G);
  };
  const CocycleSpec spec = make_spec();
  const double t = config.times.front();

  CsvWriter csv(out / "cocycle.csv", "theta,re_m,im_m");
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex m = cocycle_eval(spec, map.table().points(j), t, config.tol);
    csv.row({grid.angle(j), m.real(), m.imag()});
  }
  return kExitOk;
}

int run_pairing(const RunConfig& config, const std::filesystem::path& out) {
  const BoundaryGrid grid(config.grid_size);
  const PairingConfig& pc = config.pairing;
  PowerSeries f = pc.kind == PairingConfig::Kind::geometric
                      ? PowerSeries::geometric(pc.degree)
                      : PowerSeries(Eigen::Map<const ComplexVector>(
                            pc.coefficients.data(), static_cast<Index>(pc.coefficients.size())));
  const BoundaryDistributionPairing pairing = make_distribution_pairing(std::move(f), pc.p, pc.radii);

  CsvWriter csv(out / "pairing.csv", "test_mode_index,re_pairing,im_pairing,converged_flag");
  for (int k = 0; k <= pc.max_mode; ++k) {
    const PairingResult r = distributional_pairing(pairing, BoundarySignal::mode(grid, -k));
    csv.row({static_cast<double>(-k), r.value.real(), r.value.imag(), r.converged ? 1.0 : 0.0});
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  const std::vector<CheckResult> results = run_verify_battery(config);
  CsvWriter csv(out / "verify.csv", "check_name,residual,tolerance,pass_flag");
  int failures = 0;
  for (const auto& r : results) {
    csv.row(r.name, {r.residual, r.tolerance, r.pass ? 1.0 : 0.0});
    if (!r.pass) {
      ++failures;
      log << "FAILED " << r.name << ": residual " << CsvWriter::number(r.residual) << " > "
          << CsvWriter::number(r.tolerance) << (r.message.empty() ? "" : " (" + r.message + ")")
          << '\n';
    }
  }
  log << results.size() - failures << " of " << results.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

ConformalMap build_map(const RunConfig& config, const BoundaryGrid& grid) {
  const DomainSpec& d = config.domain;
  switch (d.kind) {
    case DomainSpec::Kind::disk:
      return identity_map(grid);
    case DomainSpec::Kind::polynomial:
      return make_polynomial_map(d.coefficients, grid);
    case DomainSpec::Kind::starlike: {
      const Eigen::VectorXd rho =
          Eigen::Map<const Eigen::VectorXd>(d.radii.data(), static_cast<Index>(d.radii.size()));
      return theodorsen_solve(StarLikeDomain::from_samples(rho), grid, d.max_iter, d.map_tol);
    }
    case DomainSpec::Kind::starlike_cos: {
      const double a = d.amplitude;
      return theodorsen_solve(
          StarLikeDomain::from_function([a](double phi) { return 1.0 + a * std::cos(phi); }), grid,
          d.max_iter, d.map_tol);
    }
  }
  return identity_map(grid);
}

AnalyticFunction build_function(const SeriesSpec& spec) {
  if (spec.coefficients.size() == 1) return AnalyticFunction::constant(spec.coefficients.front());
  return AnalyticFunction::from_series(PowerSeries(Eigen::Map<const ComplexVector>(
      spec.coefficients.data(), static_cast<Index>(spec.coefficients.size()))));
}

AnalyticFunction build_disk_generator(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::dilation:
      return bp_generator(AnalyticFunction::constant(1.0), 0.0);
    case GeneratorSpec::Kind::rotation:
      return Complex{0.0, 1.0} * AnalyticFunction::identity();
    case GeneratorSpec::Kind::parabolic:
      return bp_generator(AnalyticFunction::constant(1.0), 1.0);
    case GeneratorSpec::Kind::bp:
      return bp_generator(build_function(spec.F), spec.b);
    case GeneratorSpec::Kind::series:
      return build_function(spec.series);
  }
  return AnalyticFunction::identity();
}

BoundarySignal build_data(const DataSpec& spec, const BoundaryGrid& grid) {
  switch (spec.kind) {
    case DataSpec::Kind::monomial:
      return BoundarySignal::mode(grid, spec.degree);
    case DataSpec::Kind::coefficients: {
      ComplexVector c = ComplexVector::Zero(grid.size());
      for (std::size_t n = 0; n < spec.coefficients.size(); ++n) {
        c(static_cast<Index>(n) + grid.size() / 2) = spec.coefficients[n];
      }
      return BoundarySignal::from_coefficients(grid, std::move(c));
    }
    case DataSpec::Kind::named:
      break;
  }
  if (spec.name == "cosine") {
    return BoundarySignal::from_angle_function(grid, [](double t) { return Complex{std::cos(t)}; });
  }
  if (spec.name == "sine") {
    return BoundarySignal::from_angle_function(grid, [](double t) { return Complex{std::sin(t)}; });
  }
  // exp(e^{i theta}) truncated to the lower half of the band
  ComplexVector c = ComplexVector::Zero(grid.size());
  double term = 1.0;
  for (Index n = 0; n < grid.size() / 4; ++n) {
    c(n + grid.size() / 2) = term;
    term /= static_cast<double>(n + 1);
  }
  return BoundarySignal::from_coefficients(grid, std::move(c));
}

int run(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log) {
  std::filesystem::create_directories(out_dir);
  switch (config.subcommand) {
    case Subcommand::flow: return run_flow(config, out_dir);
    case Subcommand::evolve: return run_evolve(config, out_dir);
    case Subcommand::map: return run_map(config, out_dir, log);
    case Subcommand::cocycle: return run_cocycle(config, out_dir);
    case Subcommand::pairing: return run_pairing(config, out_dir);
    case Subcommand::verify: return run_verify(config, out_dir, log);
  }
  return kExitConfig;
}

}  // namespace steklov::cli
