// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphdft/atlas.hpp"
#include "graphdft/fock.hpp"
#include "graphdft/functionals.hpp"
#include "graphdft/graph.hpp"
#include "graphdft/io.hpp"
#include "graphdft/operators.hpp"
#include "graphdft/repr.hpp"
#include "graphdft/spectra.hpp"

namespace gdft {

namespace {

struct Options {
  std::string graph;
  int n = 1;
  std::string v_text;
  std::string rho_text;
  std::string base_text;
  std::vector<std::string> axis_text;
  std::string csv_path;
  std::string manifest_path;
  std::string state_path;
  std::string scan_grid = "log";
  double t_min = 1e-3;
  double t_max = 1e3;
  int points = 64;
  double cluster_tol = 1e-8;
  double degeneracy_tol = 1e-8;
  double residual_tol = 1e-7;
  int max_iterations = 0;
  int restarts = 32;
  int resolution = 12;
  int jobs = 0;
  std::uint64_t seed = 0;
  bool surface = false;
};

double parse_cli_number(const std::string& field, const char* where) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin) {
    throw invalid_input(std::string("bad number \"") + field + "\" in " + where);
  }
  while (*end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (*end != '\0') {
    throw invalid_input(std::string("bad number \"") + field + "\" in " + where);
  }
  return value;
}

RVector parse_cli_list(const std::string& text, const char* where) {
  std::vector<double> values;
  std::string current;
  auto flush = [&] {
    values.push_back(parse_cli_number(current, where));
    current.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  RVector out(static_cast<Eigen::Index>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
  return out;
}

Graph resolve_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return read_graph_file(spec);
  try {
    return builtin_graph(spec);
  } catch (const invalid_input&) {
    throw invalid_input("--graph \"" + spec + "\": no such builtin graph or file");
  }
}

RVector load_density(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    std::ifstream file(spec);
    std::stringstream buffer;
    buffer << file.rdbuf();
    if (!file) throw invalid_input("cannot read density file \"" + spec + "\"");
    return parse_density_csv(buffer.str());
  }
  return parse_cli_list(spec, "--rho");
}

/// Densities quoted to a few decimals can miss the particle-number sum by
/// more than the functional evaluators accept. A gauge-fixed potential never
/// sees the off-plane component, so shifting it away is harmless.
RVector prepared_density(RVector rho, int n, std::ostream& err) {
  const double off = rho.sum() - n;
  if (std::abs(off) > 1e-8 && std::abs(off) <= 1e-3) {
    rho.array() -= off / static_cast<double>(rho.size());
    err << "note: density shifted onto the sum-" << n << " plane (was off by "
        << off << ")\n";
  }
  return rho;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  file << text;
  if (!file) throw invalid_input("cannot write \"" + path + "\"");
}

ManyBodyOperator assemble_from_options(const Options& o, const Graph& g) {
  const int m = g.vertex_count();
  const RVector v =
      o.v_text.empty() ? RVector::Zero(m) : parse_cli_list(o.v_text, "--v").eval();
  const auto basis = FockBasis::build(m, o.n);
  return assemble(OneBodyHamiltonian::from_graph(g), TwoBodyInteraction::zero(m),
                  Potential{v}, basis);
}

TScanSpec scan_from_options(const Options& o) {
  TScanSpec scan;
  scan.grid =
      o.scan_grid == "log" ? TScanSpec::Grid::log : TScanSpec::Grid::linear;
  scan.t_min = o.t_min;
  scan.t_max = o.t_max;
  scan.points = o.points;
  return scan;
}

nlohmann::json json_vector(const RVector& v) {
  auto j = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

void run_spectrum(const Options& o, std::ostream& out) {
  const auto op = assemble_from_options(o, resolve_graph(o.graph));
  out << format_spectrum_json(eigendecompose(op).eigenvalues, o.cluster_tol);
}

void run_density(const Options& o, std::ostream& out, std::ostream& err) {
  const auto op = assemble_from_options(o, resolve_graph(o.graph));
  const auto gm = ground_manifold(op, o.degeneracy_tol);
  if (gm.degeneracy > 1) {
    err << "warning: ground level is " << gm.degeneracy
        << "-fold degenerate; reporting the density of one member state\n";
  }
  out << format_density_csv(density_of(gm.states[0]).rho);
}

void run_uvcheck(const Options& o, std::ostream& out) {
  const auto op = assemble_from_options(o, resolve_graph(o.graph));
  const auto gm = ground_manifold(op, o.degeneracy_tol);
  out << format_verdict_json(
      certify(op, gm.states[0], scan_from_options(o), o.degeneracy_tol));
}

void run_lieb(const Options& o, std::ostream& out, std::ostream& err) {
  const auto op = assemble_from_options(o, resolve_graph(o.graph));
  LiebOptions options;
  options.seed = o.seed;
  if (o.max_iterations > 0) options.max_iterations = o.max_iterations;
  const auto result =
      lieb_f(op, prepared_density(load_density(o.rho_text), o.n, err), options);
  nlohmann::json j;
  j["value"] = result.value;
  j["maximizer"] = json_vector(result.maximizer);
  j["iterations"] = result.iterations;
  j["certificate_gap"] = result.certificate_gap;
  out << j.dump(2) << "\n";
}

void run_pure(const Options& o, std::ostream& out, std::ostream& err) {
  const auto op = assemble_from_options(o, resolve_graph(o.graph));
  PureOptions options;
  options.restarts = o.restarts;
  options.seed = o.seed;
  options.residual_tol = o.residual_tol;
  if (o.max_iterations > 0) options.max_iterations = o.max_iterations;
  const auto result =
      pure_f(op, prepared_density(load_density(o.rho_text), o.n, err), options);
  if (!result.converged) {
    std::ostringstream message;
    message << "pure: no restart met the density residual tolerance (best "
            << result.constraint_residual << ")";
    throw numerical_error(message.str());
  }
  if (!o.state_path.empty()) write_file(o.state_path, format_state_json(result.minimizer));
  nlohmann::json j;
  j["value"] = result.value;
  j["constraint_residual"] = result.constraint_residual;
  j["restarts_used"] = result.restarts_used;
  j["converged"] = result.converged;
  out << j.dump(2) << "\n";
}

const char* region_name(TriangleRegion region) {
  switch (region) {
    case TriangleRegion::central: return "central";
    case TriangleRegion::spike1: return "spike1";
    case TriangleRegion::spike2: return "spike2";
    case TriangleRegion::spike3: return "spike3";
  }
  throw invalid_input("unknown triangle region");
}

void run_trianglef(const Options& o, std::ostream& out) {
  if (!o.surface) {
    if (o.rho_text.empty()) throw invalid_input("trianglef: pass --rho or --surface");
    const RVector rho = load_density(o.rho_text);
    nlohmann::json j;
    j["region"] = region_name(triangle_region(rho));
    j["value"] = triangle_f_analytic(rho);
    out << j.dump(2) << "\n";
    return;
  }
  if (o.resolution < 3) throw invalid_input("trianglef: --resolution must be at least 3");
  const auto g = builtin_graph("triangle");
  const auto op = assemble(OneBodyHamiltonian::from_graph(g), TwoBodyInteraction::zero(3),
                           Potential::zero(3), FockBasis::build(3, 2));
  const int k = o.resolution;
  std::vector<RVector> grid;
  for (int i = 1; i < k; ++i) {
    for (int j = 1; j < k; ++j) {
      RVector rho(3);
      rho << static_cast<double>(i) / k, static_cast<double>(j) / k,
          2.0 - static_cast<double>(i) / k - static_cast<double>(j) / k;
      if (rho(2) <= 1e-9 || rho(2) >= 1.0 - 1e-9) continue;
      grid.push_back(rho);
    }
  }
  RVector f(static_cast<Eigen::Index>(grid.size()));
  RVector f_tilde(static_cast<Eigen::Index>(grid.size()));
  parallel_for(static_cast<int>(grid.size()), o.jobs, [&](int idx) {
    LiebOptions options;
    options.seed = o.seed;
    f(idx) = lieb_f(op, grid[static_cast<size_t>(idx)], options).value;
    f_tilde(idx) = triangle_f_analytic(grid[static_cast<size_t>(idx)]);
  });
  out << format_surface_csv(grid, {"f", "f_tilde"}, {f, f_tilde});
}

AxisSpec parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) {
    throw invalid_input("--axis expects \"d1,...,dm:lo:hi:steps\", got \"" + text + "\"");
  }
  AxisSpec axis;
  axis.direction = parse_cli_list(parts[0], "--axis direction");
  axis.lo = parse_cli_number(parts[1], "--axis lo");
  axis.hi = parse_cli_number(parts[2], "--axis hi");
  const double steps = parse_cli_number(parts[3], "--axis steps");
  if (steps < 1.0 || steps != static_cast<double>(static_cast<int>(steps))) {
    throw invalid_input("--axis steps must be a positive integer");
  }
  axis.steps = static_cast<int>(steps);
  return axis;
}

void run_atlas(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const int m = g.vertex_count();
  const auto op = assemble(OneBodyHamiltonian::from_graph(g), TwoBodyInteraction::zero(m),
                           Potential::zero(m), FockBasis::build(m, o.n));
  PotentialGridSpec spec;
  spec.base =
      o.base_text.empty() ? RVector::Zero(m) : parse_cli_list(o.base_text, "--base").eval();
  for (const auto& axis : o.axis_text) spec.axes.push_back(parse_axis(axis));
  const TScanSpec scan = scan_from_options(o);
  const auto cells = sweep(spec, op, scan, o.jobs, o.degeneracy_tol);
  const std::string csv = format_atlas_csv(cells);
  if (o.csv_path.empty()) {
    out << csv;
  } else {
    write_file(o.csv_path, csv);
  }
  if (!o.manifest_path.empty()) {
    write_file(o.manifest_path, format_atlas_manifest(spec, scan, o.degeneracy_tol));
  }
}

void run_invert(const Options& o, std::ostream& out, std::ostream& err) {
  const auto op = assemble_from_options(o, resolve_graph(o.graph));
  const RVector rho = prepared_density(load_density(o.rho_text), o.n, err);
  LiebOptions options;
  options.seed = o.seed;
  if (o.max_iterations > 0) options.max_iterations = o.max_iterations;
  const auto result = lieb_f(op, rho, options);
  const auto shifted = add_potential(op, result.maximizer);
  const auto gm = ground_manifold(shifted, o.degeneracy_tol);
  const auto verdict =
      certify(shifted, gm.states[0], scan_from_options(o), o.degeneracy_tol);
  nlohmann::json j;
  j["v"] = json_vector(result.maximizer);
  j["functional_value"] = result.value;
  j["residual"] = result.certificate_gap;
  j["ball_radius"] = potential_ball_radius(op, rho);
  j["degeneracy"] = gm.degeneracy;
  j["uv_status"] = to_string(verdict.status);
  if (verdict.status == UvStatus::undetermined) {
    j["potential_unique"] = nullptr;
  } else {
    j["potential_unique"] = verdict.status != UvStatus::non_uv_with_witness;
  }
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"density-functional toolkit for fermions on finite graphs", "graphdft"};
  app.require_subcommand(1);

  const auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--graph", o.graph,
                    "builtin graph name or path to a graph file")
        ->required();
    cmd->add_option("--n", o.n, "particle number")->required();
  };
  const auto add_potential_option = [&](CLI::App* cmd) {
    cmd->add_option("--v", o.v_text,
                    "potential as comma-separated per-vertex values (default zero)");
  };
  const auto add_rho = [&](CLI::App* cmd) {
    cmd->add_option("--rho", o.rho_text,
                    "density as comma-separated values or a density CSV path")
        ->required();
  };
  const auto add_scan = [&](CLI::App* cmd) {
    cmd->add_option("--scan", o.scan_grid, "kernel scan grid: log or linear")
        ->check(CLI::IsMember({"log", "linear"}));
    cmd->add_option("--t-min", o.t_min, "smallest scanned amplitude (log grid only)");
    cmd->add_option("--t-max", o.t_max, "largest scanned amplitude");
    cmd->add_option("--points", o.points, "scan samples per sign");
    cmd->add_option("--degeneracy-tol", o.degeneracy_tol,
                    "relative width of the ground level");
  };

  auto* spectrum = app.add_subcommand(
      "spectrum", "many-body eigenvalues clustered into levels, as JSON");
  add_system(spectrum);
  add_potential_option(spectrum);
  spectrum->add_option("--cluster-tol", o.cluster_tol, "relative clustering window");

  auto* density = app.add_subcommand("density", "ground-state density, as CSV");
  add_system(density);
  add_potential_option(density);
  density->add_option("--degeneracy-tol", o.degeneracy_tol,
                      "relative width of the ground level");

  auto* uvcheck = app.add_subcommand(
      "uvcheck", "certificate that the ground state pins down its potential, as JSON");
  add_system(uvcheck);
  add_potential_option(uvcheck);
  add_scan(uvcheck);

  auto* lieb = app.add_subcommand(
      "lieb", "ensemble constrained-search functional at a density, as JSON");
  add_system(lieb);
  add_rho(lieb);
  lieb->add_option("--seed", o.seed, "random seed for the hull samples");
  lieb->add_option("--max-iterations", o.max_iterations,
                   "ascent iteration cap (0 keeps the default)");

  auto* pure = app.add_subcommand(
      "pure", "pure-state constrained-search functional at a density, as JSON");
  add_system(pure);
  add_rho(pure);
  pure->add_option("--restarts", o.restarts, "number of random restarts");
  pure->add_option("--max-iterations", o.max_iterations,
                   "descent iteration cap (0 keeps the default)");
  pure->add_option("--seed", o.seed, "random seed for the restarts");
  pure->add_option("--residual-tol", o.residual_tol,
                   "largest density mismatch a restart may keep");
  pure->add_option("--state", o.state_path, "write the minimizing state to this file");

  auto* trianglef = app.add_subcommand(
      "trianglef",
      "closed-form two-particle triangle functional: one density or a surface dump");
  trianglef->add_option("--rho", o.rho_text,
                        "density as comma-separated values or a density CSV path");
  trianglef->add_flag("--surface", o.surface,
                      "dump a CSV surface over the interior density grid");
  trianglef->add_option("--resolution", o.resolution, "grid steps per density axis");
  trianglef->add_option("--jobs", o.jobs, "worker threads (0 picks the default)");
  trianglef->add_option("--seed", o.seed, "random seed for the reference column");

  auto* atlas = app.add_subcommand(
      "atlas", "sweep a potential grid and classify every cell, as CSV");
  add_system(atlas);
  atlas->add_option("--base", o.base_text,
                    "base potential as comma-separated values (default zero)");
  atlas->add_option("--axis", o.axis_text,
                    "sweep axis \"d1,...,dm:lo:hi:steps\" (repeatable)");
  add_scan(atlas);
  atlas->add_option("--jobs", o.jobs, "worker threads (0 picks the default)");
  atlas->add_option("--csv", o.csv_path, "write the CSV here instead of stdout");
  atlas->add_option("--manifest", o.manifest_path, "write a JSON manifest here");

  auto* invert = app.add_subcommand(
      "invert", "potential whose ground state carries a given density, as JSON");
  add_system(invert);
  add_rho(invert);
  invert->add_option("--seed", o.seed, "random seed for the hull samples");
  invert->add_option("--max-iterations", o.max_iterations,
                     "ascent iteration cap (0 keeps the default)");
  add_scan(invert);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("graphdft");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand("spectrum")) {
      run_spectrum(o, out);
    } else if (app.got_subcommand("density")) {
      run_density(o, out, err);
    } else if (app.got_subcommand("uvcheck")) {
      run_uvcheck(o, out);
    } else if (app.got_subcommand("lieb")) {
      run_lieb(o, out, err);
    } else if (app.got_subcommand("pure")) {
      run_pure(o, out, err);
    } else if (app.got_subcommand("trianglef")) {
      run_trianglef(o, out);
    } else if (app.got_subcommand("atlas")) {
      run_atlas(o, out);
    } else if (app.got_subcommand("invert")) {
      run_invert(o, out, err);
    }
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace gdft
