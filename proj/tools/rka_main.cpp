// Command-line front end: greedy and n-best approximation runs, boundary
// probes, linear-independence checks, evaluation, and rational conversion.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rka/greedy.hpp"
#include "rka/json_io.hpp"
#include "rka/nbest.hpp"
#include "rka/ortho.hpp"
#include "rka/probes.hpp"
#include "rka/rational.hpp"
#include "rka/target.hpp"

namespace {

using rka::Complex;
using json = nlohmann::json;

struct SpaceOptions {
  std::string kind = "hardy";
  double alpha = 0.0;
  std::size_t truncation = 512;
  double rmax = 0.995;

  rka::SpaceSpec make() const {
    if (kind == "hardy") return rka::SpaceSpec::hardy(truncation, rmax);
    if (kind == "bergman") return rka::SpaceSpec::weighted_bergman(alpha, truncation, rmax);
    throw std::invalid_argument("--space must be 'hardy' or 'bergman'");
  }
};

void add_space_options(CLI::App* cmd, SpaceOptions& opts) {
  cmd->add_option("--space", opts.kind, "RKHS kind: hardy or bergman")
      ->check(CLI::IsMember({"hardy", "bergman"}));
  cmd->add_option("--alpha", opts.alpha, "Bergman weight parameter (> -1)");
  cmd->add_option("--truncation", opts.truncation, "series truncation length");
  cmd->add_option("--rmax", opts.rmax, "maximum parameter modulus, in (0,1)");
}

struct TargetOptions {
  std::string input;
  std::string builtin;

  rka::TargetSpec make() const {
    if (!builtin.empty()) return rka::TargetSpec::from_builtin(builtin);
    if (input.empty()) {
      throw std::invalid_argument("a target is required: --input file or --builtin name");
    }
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file '" + input + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument("malformed JSON in '" + input + "': " + e.what());
    }
    if (j.contains("target")) return rka::io::target_from_json(j.at("target"));
    return rka::io::target_from_json(j);
  }
};

void add_target_options(CLI::App* cmd, TargetOptions& opts) {
  cmd->add_option("--input", opts.input, "target JSON file (or a previous output file)");
  cmd->add_option("--builtin", opts.builtin, "builtin corpus target f1..f4");
}

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return Complex{std::stod(s), 0.0};
    return Complex{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex number '" + s + "' (want re,im)");
  }
}

std::vector<Complex> parse_params(const std::string& s) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto semi = s.find(';', start);
    const std::string item =
        semi == std::string::npos ? s.substr(start) : s.substr(start, semi - start);
    if (!item.empty()) out.push_back(parse_complex(item));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (out.empty()) throw std::invalid_argument("--params: no parameters parsed");
  return out;
}

rka::PolarGrid parse_grid(const std::string& s, double rmax) {
  const auto x = s.find('x');
  if (x == std::string::npos) {
    throw std::invalid_argument("--grid expects the form RxA, e.g. 64x128");
  }
  const auto radial = static_cast<std::size_t>(std::stoul(s.substr(0, x)));
  const auto angular = static_cast<std::size_t>(std::stoul(s.substr(x + 1)));
  return rka::PolarGrid::chebyshev(radial, angular, rmax);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << text;
}

void emit_json(const json& j, const std::string& output) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    write_text(output, text);
  }
}

void write_trace_csv(const std::string& path, const std::vector<double>& trace) {
  std::string text = "step,value\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, trace[i]);
    text += buf;
  }
  write_text(path, text);
}

void write_probe_csv(const std::string& path, const std::vector<double>& radii,
                     const std::vector<double>& values) {
  std::string text = "index,radius,value\n";
  char buf[96];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, radii[i], values[i]);
    text += buf;
  }
  write_text(path, text);
}

json run_header(const rka::SpaceSpec& spec, const rka::TargetSpec& target) {
  json j;
  j["space"] = rka::io::space_to_json(spec);
  j["target"] = rka::io::target_to_json(target);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel approximation on the unit disc: greedy and n-best solvers, "
               "boundary probes, and rational conversion"};
  app.require_subcommand(1);

  // --- poafd ---------------------------------------------------------------
  SpaceOptions poafd_space;
  TargetOptions poafd_target;
  std::size_t poafd_n = 4;
  double poafd_rho = 1.0;
  std::string poafd_grid = "64x128";
  std::string poafd_output, poafd_csv;
  auto* poafd_cmd = app.add_subcommand("poafd", "greedy (rho-Weak-POAFD) expansion");
  add_space_options(poafd_cmd, poafd_space);
  add_target_options(poafd_cmd, poafd_target);
  poafd_cmd->add_option("--n", poafd_n, "number of terms");
  poafd_cmd->add_option("--rho", poafd_rho, "weak-selection factor in (0,1]");
  poafd_cmd->add_option("--grid", poafd_grid, "polar grid RxA");
  poafd_cmd->add_option("--output", poafd_output, "result JSON file (default stdout)");
  poafd_cmd->add_option("--csv", poafd_csv, "residual trace CSV file");

  // --- nbest ---------------------------------------------------------------
  SpaceOptions nb_space;
  TargetOptions nb_target;
  rka::NBestConfig nb_cfg;
  std::string nb_grid = "32x64";
  std::string nb_output, nb_csv;
  auto* nbest_cmd = app.add_subcommand("nbest", "simultaneous n-best approximation");
  add_space_options(nbest_cmd, nb_space);
  add_target_options(nbest_cmd, nb_target);
  nbest_cmd->add_option("--n", nb_cfg.n, "number of kernels");
  nbest_cmd->add_option("--starts", nb_cfg.starts, "multi-start count");
  nbest_cmd->add_option("--tol", nb_cfg.tol_obj, "squared-objective cycle tolerance");
  nbest_cmd->add_option("--max-cycles", nb_cfg.max_cycles, "cyclic descent cycle cap");
  nbest_cmd->add_option("--grid", nb_grid, "coordinate-scan polar grid RxA");
  nbest_cmd->add_option("--seed", nb_cfg.seed, "seed for the random starts");
  nbest_cmd->add_option("--fd-step", nb_cfg.fd_step, "finite-difference step");
  nbest_cmd->add_option("--output", nb_output, "result JSON file (default stdout)");
  nbest_cmd->add_option("--csv", nb_csv, "objective trace CSV file");

  // --- probe ---------------------------------------------------------------
  SpaceOptions probe_space;
  TargetOptions probe_target;
  std::string probe_csv, probe_z = "0,0", probe_params;
  std::size_t probe_directions = 16, probe_jmin = 1, probe_jmax = 13;
  double probe_angle = 0.0;
  auto* probe_cmd = app.add_subcommand("probe", "boundary vanishing probes");
  probe_cmd->require_subcommand(1);
  auto* dbvc_cmd = probe_cmd->add_subcommand("dbvc", "normalized kernel pair decay");
  auto* bvc_cmd = probe_cmd->add_subcommand("bvc", "<f, E_w> decay");
  auto* vanishing_cmd =
      probe_cmd->add_subcommand("vanishing", "Gram-Schmidt tail decay past a fixed tuple");
  for (CLI::App* c : {dbvc_cmd, bvc_cmd, vanishing_cmd}) {
    add_space_options(c, probe_space);
    c->add_option("--csv", probe_csv, "CSV output file (default stdout)");
    c->add_option("--jmin", probe_jmin, "first dyadic radius index");
    c->add_option("--jmax", probe_jmax, "last dyadic radius index");
    c->add_option("--angle", probe_angle, "direction of the boundary sequence (radians)");
  }
  dbvc_cmd->add_option("--z", probe_z, "fixed interior point re,im");
  dbvc_cmd->add_option("--directions", probe_directions,
                       "number of equally spaced directions (reports the worst decay)");
  add_target_options(bvc_cmd, probe_target);
  add_target_options(vanishing_cmd, probe_target);
  vanishing_cmd->add_option("--params", probe_params, "fixed tuple re,im;re,im;...");

  // --- check lic -----------------------------------------------------------
  SpaceOptions lic_space;
  std::string lic_params, lic_output;
  auto* check_cmd = app.add_subcommand("check", "diagnostics");
  check_cmd->require_subcommand(1);
  auto* lic_cmd = check_cmd->add_subcommand("lic", "normalized-kernel Gram minimum eigenvalue");
  add_space_options(lic_cmd, lic_space);
  lic_cmd->add_option("--params", lic_params, "parameter tuple re,im;re,im;...")->required();
  lic_cmd->add_option("--output", lic_output, "JSON output file (default stdout)");

  // --- eval ----------------------------------------------------------------
  SpaceOptions eval_space;
  TargetOptions eval_target;
  std::vector<std::string> eval_points;
  std::string eval_output;
  auto* eval_cmd = app.add_subcommand("eval", "expand a target and evaluate it");
  add_space_options(eval_cmd, eval_space);
  add_target_options(eval_cmd, eval_target);
  eval_cmd->add_option("--z", eval_points, "evaluation points re,im (repeatable)");
  eval_cmd->add_option("--output", eval_output, "JSON output file (default stdout)");

  // --- to-rational ---------------------------------------------------------
  std::string rat_input, rat_output;
  auto* rat_cmd = app.add_subcommand(
      "to-rational", "convert a Hardy result's kernel projection to a rational p/q form");
  rat_cmd->add_option("--input", rat_input, "result JSON produced by nbest/poafd")->required();
  rat_cmd->add_option("--output", rat_output, "JSON output file (default stdout)");

  try {
    app.parse(argc, argv);

    if (*poafd_cmd) {
      const rka::SpaceSpec spec = poafd_space.make();
      const rka::TargetSpec target = poafd_target.make();
      rka::GreedyConfig cfg;
      cfg.rho = poafd_rho;
      cfg.grid = parse_grid(poafd_grid, spec.r_max());
      cfg.n_terms = poafd_n;
      const rka::ApproxResult res = rka::poafd(target.expand(spec), spec, cfg);
      json out = run_header(spec, target);
      out["config"] = {{"command", "poafd"}, {"n", poafd_n}, {"rho", poafd_rho},
                       {"grid", poafd_grid}};
      out["result"] = rka::io::result_to_json(res);
      emit_json(out, poafd_output);
      if (!poafd_csv.empty()) write_trace_csv(poafd_csv, res.objective_trace);
      // the summary goes to stdout only when stdout is not carrying the JSON
      (poafd_output.empty() ? std::cerr : std::cout)
          << "poafd: " << res.parameters.size() << " terms, residual "
          << res.residual_norm << "\n";
    } else if (*nbest_cmd) {
      const rka::SpaceSpec spec = nb_space.make();
      const rka::TargetSpec target = nb_target.make();
      nb_cfg.grid = parse_grid(nb_grid, spec.r_max());
      const rka::ApproxResult res = rka::solve(target.expand(spec), spec, nb_cfg);
      json out = run_header(spec, target);
      out["config"] = {{"command", "nbest"},     {"n", nb_cfg.n},
                       {"starts", nb_cfg.starts}, {"tol", nb_cfg.tol_obj},
                       {"max_cycles", nb_cfg.max_cycles}, {"grid", nb_grid},
                       {"fd_step", nb_cfg.fd_step}, {"seed", nb_cfg.seed}};
      out["result"] = rka::io::result_to_json(res);
      emit_json(out, nb_output);
      if (!nb_csv.empty()) write_trace_csv(nb_csv, res.objective_trace);
      (nb_output.empty() ? std::cerr : std::cout)
          << "nbest: objective " << res.residual_norm << ", interior margin "
          << res.interior_margin << "\n";
    } else if (*probe_cmd) {
      const rka::SpaceSpec spec = probe_space.make();
      const rka::BoundarySequence seq =
          rka::BoundarySequence::dyadic(probe_jmin, probe_jmax, probe_angle);
      std::vector<double> values;
      if (*dbvc_cmd) {
        // Worst (largest) value over the requested directions, per radius.
        const Complex z = parse_complex(probe_z);
        values.assign(seq.radii.size(), 0.0);
        for (std::size_t d = 0; d < probe_directions; ++d) {
          rka::BoundarySequence s = seq;
          s.angle = 2.0 * std::numbers::pi * static_cast<double>(d) /
                    static_cast<double>(probe_directions);
          const std::vector<double> v = rka::dbvc_probe(spec, z, s);
          for (std::size_t i = 0; i < v.size(); ++i) values[i] = std::max(values[i], v[i]);
        }
      } else if (*bvc_cmd) {
        values = rka::bvc_probe(probe_target.make().expand(spec), spec, seq);
      } else {
        const rka::ParameterTuple fixed(probe_params.empty()
                                            ? std::vector<Complex>{}
                                            : parse_params(probe_params));
        values = rka::vanishing_probe(probe_target.make().expand(spec), spec, fixed, seq);
      }
      if (probe_csv.empty()) {
        std::printf("index,radius,value\n");
        for (std::size_t i = 0; i < values.size(); ++i) {
          std::printf("%zu,%.17g,%.17g\n", i, seq.radii[i], values[i]);
        }
      } else {
        write_probe_csv(probe_csv, seq.radii, values);
      }
    } else if (*lic_cmd) {
      const rka::SpaceSpec spec = lic_space.make();
      const rka::ParameterTuple tuple(parse_params(lic_params));
      json out;
      out["space"] = rka::io::space_to_json(spec);
      out["parameters"] = rka::io::tuple_to_json(tuple);
      out["gram_min_eig"] = rka::lic_check(spec, tuple);
      emit_json(out, lic_output);
    } else if (*eval_cmd) {
      const rka::SpaceSpec spec = eval_space.make();
      const rka::TargetSpec target = eval_target.make();
      const rka::PowerSeries f = target.expand(spec);
      json out = run_header(spec, target);
      out["norm"] = rka::norm(f, spec);
      json vals = json::array();
      for (const std::string& s : eval_points) {
        const Complex z = parse_complex(s);
        json v;
        v["z"] = rka::io::complex_to_json(z);
        v["value"] = rka::io::complex_to_json(rka::evaluate(f, z));
        vals.push_back(v);
      }
      out["values"] = vals;
      emit_json(out, eval_output);
    } else if (*rat_cmd) {
      std::ifstream in(rat_input);
      if (!in) throw std::invalid_argument("cannot open input file '" + rat_input + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in '" + rat_input + "': " + e.what());
      }
      rka::detail::require(j.contains("space") && j.contains("target") && j.contains("result"),
                           "to-rational: input must contain 'space', 'target', 'result'");
      const rka::SpaceSpec spec = rka::io::space_from_json(j.at("space"));
      rka::detail::require(spec.kind() == rka::SpaceKind::Hardy,
                           "to-rational: Hardy-space results only");
      const rka::PowerSeries f = rka::io::target_from_json(j.at("target")).expand(spec);
      const rka::ParameterTuple tuple =
          rka::io::tuple_from_json(j.at("result").at("parameters"));
      const std::vector<rka::PowerSeries> tm = rka::tm_closed_form(spec, tuple);
      rka::BlaschkeForm form;
      form.tuple = tuple;
      for (const rka::PowerSeries& b : tm) {
        form.coefficients.push_back(rka::inner_product(f, b, spec));
      }
      const rka::RationalForm rat = rka::tm_to_rational(form);
      const rka::AdmissibilityReport rep = rka::admissible(rat, tuple.size());
      json out;
      out["space"] = j.at("space");
      out["p"] = json::array();
      for (const Complex& c : rat.p) out["p"].push_back(rka::io::complex_to_json(c));
      out["q"] = json::array();
      for (const Complex& c : rat.q) out["q"].push_back(rka::io::complex_to_json(c));
      out["degree_bound"] = rat.degree_bound;
      out["admissible"] = rep.admissible;
      out["report"] = {{"coprime", rep.coprime},
                       {"q_zero_free", rep.q_zero_free},
                       {"degrees_ok", rep.degrees_ok},
                       {"boundary_indeterminate", rep.boundary_indeterminate},
                       {"resultant", rep.resultant},
                       {"min_q_root_modulus", rep.min_q_root_modulus}};
      emit_json(out, rat_output);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const rka::DegenerateSystem& e) {
    std::cerr << "degenerate system: " << e.what() << "\n";
    return 3;
  } catch (const rka::DegenerateTuple& e) {
    std::cerr << "degenerate tuple: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
