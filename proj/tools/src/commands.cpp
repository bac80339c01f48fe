/*
 * Copyright 2026 The rsdelta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rsdelta/errors.hpp"
#include "rsdelta/rootfinder.hpp"
#include "rsdelta/sweep.hpp"
#include "rsdelta/transmission.hpp"
#include "rsdelta/wavefunction.hpp"
#include "rsdelta_cli/check.hpp"
#include "rsdelta_cli/cli.hpp"
#include "rsdelta_cli/table.hpp"

namespace rsdelta::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct StructureArgs {
  std::string structure = "double";
  std::optional<double> alpha, epsilon, b_over_a;
  std::optional<double> gamma, beta, a, b;
};

struct OutputArgs {
  std::string output;
  std::string format = "csv";
};

struct Resolved {
  Structure structure = Structure::Double;
  DimensionlessParams params;
};

void add_structure_options(CLI::App* sub, StructureArgs& s) {
  sub->add_option("--structure", s.structure, "double or triple")->check(CLI::IsMember({"double", "triple"}));
  sub->add_option("--alpha", s.alpha, "gamma*a");
  sub->add_option("--epsilon", s.epsilon, "beta/gamma (triple)");
  sub->add_option("--b-over-a", s.b_over_a, "middle delta position b/a (triple)");
  sub->add_option("--gamma", s.gamma, "outer strength (raw parameters)");
  sub->add_option("--beta", s.beta, "middle strength (raw parameters)");
  sub->add_option("--a", s.a, "half-width (raw parameters)");
  sub->add_option("--b", s.b, "middle position (raw parameters)");
}

void add_output_options(CLI::App* sub, OutputArgs& o) {
  sub->add_option("--output,-o", o.output, "output path (stdout when omitted)");
  sub->add_option("--format", o.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
}

// Resolves to dimensionless parameters. `free_param` may stand in for a missing value.
Resolved resolve(const StructureArgs& s, std::optional<std::pair<SweepParameter, double>> free_param = {}) {
  Resolved r;
  r.structure = s.structure == "triple" ? Structure::Triple : Structure::Double;
  const bool raw = s.gamma || s.beta || s.a || s.b;
  if (raw) {
    if (s.alpha || s.epsilon || s.b_over_a)
      throw DomainError("give either dimensionless (--alpha ...) or raw (--gamma ...) parameters, not both");
    if (!s.gamma || !s.a) throw DomainError("raw parameters need --gamma and --a");
    if (r.structure == Structure::Double) {
      if (s.beta || s.b) throw DomainError("--beta and --b apply to the triple structure");
      r.params = DeltaPotential::double_well(*s.gamma, *s.a).params();
    } else {
      r.params = DeltaPotential::triple_well(*s.gamma, s.beta.value_or(0.0), *s.a, s.b.value_or(0.0)).params();
    }
    return r;
  }
  std::optional<double> alpha = s.alpha;
  std::optional<double> epsilon = s.epsilon;
  if (free_param) {
    const auto [which, value] = *free_param;
    if (which == SweepParameter::Alpha && !alpha) alpha = value;
    if (which == SweepParameter::Epsilon && !epsilon) epsilon = value;
    if (which == SweepParameter::BetaA && !epsilon && alpha && *alpha != 0.0) epsilon = value / *alpha;
  }
  if (!alpha) throw DomainError("--alpha is required");
  r.params.alpha = *alpha;
  if (r.structure == Structure::Triple) {
    if (!epsilon) throw DomainError("--epsilon is required for the triple structure");
    r.params.epsilon = *epsilon;
    r.params.b_over_a = s.b_over_a.value_or(0.0);
    if (!(r.params.b_over_a > -1.0 && r.params.b_over_a < 1.0)) throw DomainError("--b-over-a must lie in (-1, 1)");
  } else if (epsilon || s.b_over_a) {
    throw DomainError("--epsilon and --b-over-a apply to the triple structure");
  }
  if (!std::isfinite(r.params.alpha) || !std::isfinite(r.params.epsilon)) throw DomainError("parameters must be finite");
  return r;
}

std::vector<std::pair<std::string, std::string>> base_meta(std::string_view command, const Resolved& r) {
  std::vector<std::pair<std::string, std::string>> m{
      {"rsdelta", kVersion},
      {"command", std::string(command)},
      {"structure", std::string(to_string(r.structure))},
      {"alpha", format_number(r.params.alpha)},
  };
  if (r.structure == Structure::Triple) {
    m.emplace_back("epsilon", format_number(r.params.epsilon));
    m.emplace_back("b_over_a", format_number(r.params.b_over_a));
  }
  return m;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw DomainError(fmt::format("cannot write '{}'", path.string()));
  return f;
}

// Writes a table to stdout or to `path` (CSV) and its .json mirror as requested.
void emit(const Table& table, const OutputArgs& o, const std::string& path, std::ostream& out) {
  const bool csv = o.format != "json";
  const bool json = o.format != "csv";
  if (path.empty()) {
    if (csv) write_csv(out, table);
    if (json) write_json(out, table);
    return;
  }
  std::filesystem::path p(path);
  if (csv) {
    auto f = open_for_write(p);
    write_csv(f, table);
  }
  if (json) {
    auto f = open_for_write(o.format == "json" ? p : std::filesystem::path(p).replace_extension(".json"));
    write_json(f, table);
  }
}

// "<stem>.<tag>.csv" next to `path`.
std::string tagged_path(const std::string& path, const std::string& tag) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  std::string ext = p.extension().string();
  if (ext.empty()) ext = ".csv";
  return (p.parent_path() / (p.stem().string() + "." + tag + ext)).string();
}

SearchWindow make_window(const Resolved& r, double re_max, std::optional<double> im_min, int density) {
  SearchWindow w = default_window(r.structure, r.params, re_max, density);
  if (im_min) w.im_min = *im_min;
  w.validate();
  return w;
}

// ---- spectrum ----

struct SpectrumArgs {
  StructureArgs s;
  OutputArgs o;
  double window = 10.0;
  std::optional<double> im_min;
  int seed_density = 4;
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const Resolved r = resolve(args.s);
  const SearchWindow w = make_window(r, args.window, args.im_min, args.seed_density);
  const auto states = find_all_states(r.structure, r.params, w);
  Table t;
  t.meta = base_meta("spectrum", r);
  t.meta.emplace_back("window", fmt::format("re_max={} im_min={} seed_density={}", format_number(w.re_max),
                                            format_number(w.im_min), w.seed_density));
  t.columns = {"n", "re_ka", "im_ka", "class", "parity", "re_Ea2", "im_Ea2"};
  for (std::size_t n = 0; n < states.size(); ++n) {
    const auto& s = states[n];
    const Complex e = s.energy();
    t.rows.push_back({static_cast<long long>(n), s.k.real(), s.k.imag(), std::string(to_string(s.kind)),
                      std::string(to_string(s.parity)), e.real(), e.imag()});
  }
  emit(t, args.o, args.o.output, out);
  return kOk;
}

// ---- sweep ----

struct SweepArgs {
  StructureArgs s;
  OutputArgs o;
  std::string param = "alpha";
  double from = 0.0;
  double to = 1.0;
  double step = 0.01;
  double window = 2.0;
  double s_max = 50.0;
};

SweepParameter parse_param(const std::string& name) {
  if (name == "alpha") return SweepParameter::Alpha;
  if (name == "epsilon") return SweepParameter::Epsilon;
  return SweepParameter::BetaA;
}

void add_curve_rows(Table& t, const SweepCurve& c) {
  for (const auto& p : c.points) {
    const Complex s = Complex(0.0, -2.0) * p.k;
    t.rows.push_back({p.param, s.real(), s.imag(), p.kind ? std::string(to_string(*p.kind)) : std::string("threshold")});
  }
  for (const auto& e : c.events) {
    const Complex s = Complex(0.0, -2.0) * e.k;
    t.rows.push_back({e.param, s.real(), s.imag(), std::string(to_string(e.kind))});
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const SweepParameter param = parse_param(args.param);
  if (!(args.step > 0.0)) throw DomainError("--step must be positive");
  if (args.from == args.to) throw DomainError("--from and --to must differ");
  const Resolved r = resolve(args.s, std::pair{param, args.from});
  if (r.structure == Structure::Double && param != SweepParameter::Alpha)
    throw DomainError("the double structure can only be swept in alpha");
  if (param == SweepParameter::BetaA && r.params.alpha == 0.0) throw DomainError("beta_a sweeps need alpha != 0");

  SweepOptions options;
  options.s_max = args.s_max;
  const double span = std::abs(args.to - args.from);
  const double step = std::min(args.step, span);

  std::vector<SweepCurve> curves;
  for (const SecularEquation& eq0 : families_for(r.structure, r.params)) {
    const SecularEquation eq = eq0.with_parameter(param, args.from);
    auto forward = sweep_family(eq, param, args.from, args.to, step, args.window, options);
    auto backward = sweep_family(eq, param, args.to, args.from, step, args.window, options);
    const auto same_curve = [&](const SweepCurve& b) {
      for (const auto& f : forward) {
        const auto& fe = f.points.back();
        const auto& be = b.points.back();
        if (fe.param == args.to && std::abs(fe.k - b.points.front().k) <= 1e-6) return true;
        if (be.param == args.from && std::abs(be.k - f.points.front().k) <= 1e-6) return true;
      }
      return false;
    };
    std::vector<SweepCurve> distinct;
    for (auto& c : backward)
      if (!same_curve(c)) distinct.push_back(std::move(c));
    for (auto& c : forward) curves.push_back(std::move(c));
    for (std::size_t n = 0; n < distinct.size(); ++n) {
      distinct[n].label = fmt::format("{}-r{}", to_string(eq.parity()), n);
      curves.push_back(std::move(distinct[n]));
    }
  }

  for (const auto& c : curves) {
    if (c.truncated())
      err << fmt::format("warning: branch {} truncated at {}={}: {}\n", c.label, args.param,
                         format_number(c.events.back().param), c.diagnostic);
    Table t;
    t.meta = base_meta("sweep", r);
    t.meta.emplace_back("param", args.param);
    t.meta.emplace_back("range", fmt::format("{} -> {} step {}", format_number(args.from), format_number(args.to),
                                             format_number(step)));
    t.meta.emplace_back("branch", c.label);
    for (const auto& e : c.events)
      t.meta.emplace_back("event", fmt::format("{} at {}={} ({})", to_string(e.kind), args.param,
                                               format_number(e.param), e.detail));
    t.columns = {"param", "re_s", "im_s", "class"};
    add_curve_rows(t, c);
    const std::string path = tagged_path(args.o.output, c.label);
    emit(t, args.o, path, out);
    if (!path.empty()) out << path << '\n';
  }
  return kOk;
}

// ---- transmission ----

struct TransmissionArgs {
  StructureArgs s;
  OutputArgs o;
  std::vector<std::string> methods;
  std::vector<int> n_pairs;
  std::vector<double> all_in_window;
  double k_min = 0.005;
  double k_max = 10.0;
  int points = 2001;
};

void add_spectrum_rows(Table& t, const TransmissionSpectrum& sp) {
  for (std::size_t i = 0; i < sp.k_grid.size(); ++i)
    t.rows.push_back({sp.k_grid[i], sp.t[i].real(), sp.t[i].imag(), sp.abs_t2(i), std::string(to_string(sp.method)),
                      static_cast<long long>(sp.n_states)});
}

int cmd_transmission(const TransmissionArgs& args, std::ostream& out) {
  const Resolved r = resolve(args.s);
  if (args.points < 2) throw DomainError("--points must be at least 2");
  const auto grid = linear_grid(args.k_min, args.k_max, static_cast<std::size_t>(args.points));
  const DeltaPotential v = DeltaPotential::from_params(r.structure, r.params);
  std::vector<std::string> methods = args.methods;
  if (methods.empty()) methods.push_back("analytic");

  std::vector<std::pair<std::string, TransmissionSpectrum>> spectra;
  for (const auto& m : methods) {
    if (m == "analytic") {
      if (r.structure != Structure::Double) throw DomainError("the analytic amplitude exists for the double structure only");
      spectra.emplace_back("analytic", spectrum_analytic(grid, r.params.alpha));
    } else if (m == "transfer-matrix") {
      spectra.emplace_back("transfer-matrix", spectrum_transfer_matrix(grid, v));
    } else {
      std::vector<double> windows = args.all_in_window;
      if (windows.empty() && args.n_pairs.empty()) windows.push_back(30.0);
      const auto ml = [&](const std::vector<ResonantState>& states) {
        if (r.structure == Structure::Double) return spectrum_mittag_leffler(grid, states, r.params.alpha);
        std::vector<PiecewiseWave> waves;
        for (const auto& s : states) waves.push_back(wave_of(s, r.structure, r.params));
        return spectrum_mittag_leffler(grid, waves);
      };
      for (int n : args.n_pairs) {
        if (n < 0) throw DomainError("--n-pairs must be non-negative");
        const double re_max = (n + 2) * std::numbers::pi / 2.0 + 1.0;
        const auto states = find_all_states(r.structure, r.params, default_window(r.structure, r.params, re_max));
        spectra.emplace_back(fmt::format("ml-n{}", n), ml(bound_and_pairs(states, static_cast<std::size_t>(n))));
      }
      for (double w : windows) {
        const auto states = find_all_states(r.structure, r.params, default_window(r.structure, r.params, w));
        spectra.emplace_back(fmt::format("ml-w{}", format_number(w)), ml(states_in_window(states, w)));
      }
    }
  }

  const auto table_for = [&](const std::vector<const TransmissionSpectrum*>& parts, const std::string& tag) {
    Table t;
    t.meta = base_meta("transmission", r);
    t.meta.emplace_back("grid", fmt::format("{} points on [{}, {}]", args.points, format_number(args.k_min),
                                            format_number(args.k_max)));
    if (!tag.empty()) t.meta.emplace_back("series", tag);
    t.columns = {"ka", "re_t", "im_t", "abs_t2", "method", "n_states"};
    for (const auto* sp : parts) add_spectrum_rows(t, *sp);
    return t;
  };

  if (args.o.output.empty() || spectra.size() == 1) {
    std::vector<const TransmissionSpectrum*> parts;
    for (const auto& [tag, sp] : spectra) parts.push_back(&sp);
    emit(table_for(parts, spectra.size() == 1 ? spectra.front().first : std::string()), args.o, args.o.output, out);
    return kOk;
  }
  for (const auto& [tag, sp] : spectra) {
    const std::string path = tagged_path(args.o.output, tag);
    emit(table_for({&sp}, tag), args.o, path, out);
    out << path << '\n';
  }
  return kOk;
}

// ---- wave ----

struct WaveArgs {
  StructureArgs s;
  OutputArgs o;
  int state = 0;
  double window = 10.0;
  double x_min = -3.0;
  double x_max = 3.0;
  int x_points = 601;
};

int cmd_wave(const WaveArgs& args, std::ostream& out) {
  const Resolved r = resolve(args.s);
  if (args.x_points < 2 || !(args.x_max > args.x_min)) throw DomainError("invalid x grid");
  const auto states = find_all_states(r.structure, r.params, default_window(r.structure, r.params, args.window));
  if (args.state < 0 || static_cast<std::size_t>(args.state) >= states.size())
    throw DomainError(fmt::format("--state must lie in [0, {})", states.size()));
  const ResonantState& st = states[static_cast<std::size_t>(args.state)];
  const PiecewiseWave wave = wave_of(st, r.structure, r.params);
  Table t;
  t.meta = base_meta("wave", r);
  t.meta.emplace_back("state", fmt::format("{} ka = {} {:+}i ({}, {})", args.state, format_number(st.k.real()),
                                           std::stod(format_number(st.k.imag())), to_string(st.kind),
                                           to_string(st.parity)));
  t.columns = {"x", "re_psi", "im_psi", "abs_psi2"};
  for (int i = 0; i < args.x_points; ++i) {
    const double x = args.x_min + (args.x_max - args.x_min) * i / (args.x_points - 1);
    const Complex psi = wave(x);
    t.rows.push_back({x, psi.real(), psi.imag(), std::norm(psi)});
  }
  emit(t, args.o, args.o.output, out);
  return kOk;
}

// ---- check ----

struct CheckArgs {
  StructureArgs s;
  double window = 40.0;
  std::string inject = "none";
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  StructureArgs s = args.s;
  if (!s.alpha && !s.gamma) s.alpha = 3.0;
  const Resolved r = resolve(s);
  CheckConfig config;
  config.structure = r.structure;
  config.params = r.params;
  config.re_max = args.window;
  config.fault = parse_fault(args.inject);
  int failed = 0;
  for (const auto& c : run_checks(config)) {
    out << fmt::format("{} {}: {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
    failed += !c.passed;
  }
  out << (failed ? fmt::format("{} check(s) failed\n", failed) : std::string("all checks passed\n"));
  return failed ? kCheckFailed : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resonant states of double and triple delta structures"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "resonant-state wavenumbers in a window");
  add_structure_options(sp, spectrum.s);
  add_output_options(sp, spectrum.o);
  sp->add_option("--window", spectrum.window, "search |Re ka| <= window");
  sp->add_option("--im-min", spectrum.im_min, "search Im ka >= im-min");
  sp->add_option("--seed-density", spectrum.seed_density, "seeds per unit of ka");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "follow branches while one parameter varies");
  add_structure_options(sw, sweep.s);
  add_output_options(sw, sweep.o);
  sw->add_option("--param", sweep.param, "alpha, epsilon or beta_a")
      ->check(CLI::IsMember({"alpha", "epsilon", "beta_a"}));
  sw->add_option("--from", sweep.from)->required();
  sw->add_option("--to", sweep.to)->required();
  sw->add_option("--step", sweep.step);
  sw->add_option("--window", sweep.window, "start states with Re ka <= window");
  sw->add_option("--s-max", sweep.s_max, "stop a branch once |s| exceeds this");

  TransmissionArgs trans;
  auto* tr = app.add_subcommand("transmission", "transmission amplitude on a real grid");
  add_structure_options(tr, trans.s);
  add_output_options(tr, trans.o);
  tr->add_option("--method", trans.methods, "analytic, transfer-matrix or ml (repeatable)")
      ->check(CLI::IsMember({"analytic", "transfer-matrix", "ml"}));
  tr->add_option("--n-pairs", trans.n_pairs, "ml: bound states plus N mirror pairs (repeatable)");
  tr->add_option("--all-in-window", trans.all_in_window, "ml: every state with |Re ka| <= W (repeatable)");
  tr->add_option("--k-min", trans.k_min);
  tr->add_option("--k-max", trans.k_max);
  tr->add_option("--points", trans.points);

  WaveArgs wave;
  auto* wv = app.add_subcommand("wave", "normalized wavefunction of one state");
  add_structure_options(wv, wave.s);
  add_output_options(wv, wave.o);
  wv->add_option("--state", wave.state, "index into the spectrum listing");
  wv->add_option("--window", wave.window);
  wv->add_option("--x-min", wave.x_min);
  wv->add_option("--x-max", wave.x_max);
  wv->add_option("--x-points", wave.x_points);

  CheckArgs check;
  auto* ck = app.add_subcommand("check", "run the invariant suite");
  add_structure_options(ck, check.s);
  ck->add_option("--window", check.window);
  ck->add_option("--inject", check.inject, "fault injection")
      ->check(CLI::IsMember({"none", "wrong-residue-sign", "admit-zero-root"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidParams;
  }

  try {
    if (*sp) return cmd_spectrum(spectrum, out);
    if (*sw) return cmd_sweep(sweep, out, err);
    if (*tr) return cmd_transmission(trans, out);
    if (*wv) return cmd_wave(wave, out);
    return cmd_check(check, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverInconsistency;
  }
}

}  // namespace rsdelta::cli
