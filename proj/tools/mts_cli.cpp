// Copyright 2026 The mts Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: generate, deform, solve, verify, export.
//
// Every command writes <out>/manifest.json (deterministic) and
// <out>/timing.json (wall time), also when it fails. Exit status: 0 iff
// every recorded check passed, 1 on a failed check or a rejected input,
// 2 on a usage error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mts/fixtures.hpp"
#include "mts/io.hpp"
#include "mts/pde.hpp"
#include "mts/representation.hpp"
#include "mts/weierstrass.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using mts::Grid2D;
using mts::Index;
using mts::Report;
using mts::SurfacePatch;

// Option overrides; unset means the library default for the grid.
struct TolFlags {
  std::optional<double> patch;
  std::optional<double> holo;
  std::optional<double> pde;
  std::optional<double> loop;
  std::optional<double> identity;
  std::optional<double> eps_zero;
  std::optional<double> eps_immersion;
  std::optional<double> liu;
  double liu_eps = 1e-6;
  double congruence = 1e-6;
  std::optional<double> quadric;
};

struct Options {
  std::string fixture;
  std::optional<double> theta;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string data;
  std::string mesh;
  std::string problem;
  std::string grid;
  Index n = 65;
  std::string rep;
  std::string family;
  std::optional<double> param;
  std::string checks = "conformality,null-H,liu";
  std::optional<double> quadric_c;
  std::string format = "csv";
  std::string kind = "second";
  bool with_problem = false;
  bool then_generate = false;
  std::string out = ".";
  TolFlags tol;
};

void add_tolerance_flags(CLI::App* app, TolFlags& t) {
  app->add_option("--tol", t.patch,
                  "patch invariant threshold (1e-8 exact, 100 h^2 sampled)")
      ->group("Tolerances");
  app->add_option("--tol-holo", t.holo, "holomorphy residual (1e-8 exact, 50 h^2 sampled)")
      ->group("Tolerances");
  app->add_option("--tol-pde", t.pde, "data PDE residual (1e-8 exact, 50 h^2 sampled)")
      ->group("Tolerances");
  app->add_option("--tol-loop", t.loop, "primitive loop residual (1e-8 exact, 100 h^2 sampled)")
      ->group("Tolerances");
  app->add_option("--tol-identity", t.identity,
                  "transformation identity residual (1e-8 exact, 100 h^2 sampled)")
      ->group("Tolerances");
  app->add_option("--eps-zero", t.eps_zero, "lower bound certified for |g|, |h| (1e-6)")
      ->group("Tolerances");
  app->add_option("--eps-immersion", t.eps_immersion,
                  "lower bound certified for the immersion term (1e-6)")
      ->group("Tolerances");
  app->add_option("--tol-liu", t.liu, "Liu condition residuals (patch threshold)")
      ->group("Tolerances");
  app->add_option("--liu-eps", t.liu_eps, "Liu mask: nodes with |Psi| <= eps are skipped")
      ->capture_default_str()
      ->group("Tolerances");
  app->add_option("--tol-congruence", t.congruence, "congruence residual")
      ->capture_default_str()
      ->group("Tolerances");
  app->add_option("--tol-quadric", t.quadric, "quadric residual (patch threshold)")
      ->group("Tolerances");
}

void add_input_flags(CLI::App* app, Options& o, bool mesh) {
  app->add_option("--fixture", o.fixture,
                  "sigma-theta, two-param, catenoid or hyperbolic-catenoid");
  app->add_option("--theta", o.theta, "sigma-theta parameter in [0, pi/2]");
  app->add_option("--alpha", o.alpha, "two-param alpha");
  app->add_option("--beta", o.beta, "two-param beta");
  app->add_option("--data", o.data, "data descriptor (JSON) written by export or deform");
  if (mesh) app->add_option("--mesh", o.mesh, "PLY mesh written by generate");
  app->add_option("--grid", o.grid, "umin:umax:vmin:vmax:NuxNv (fixtures: recommended grid)");
  app->add_option("--n", o.n, "nodes per side of the recommended grid")->capture_default_str();
  app->add_option("--rep", o.rep, "first, second or explicit (default: the data's kind)");
  app->add_option("--out", o.out, "output directory")->capture_default_str();
  add_tolerance_flags(app, o.tol);
}

std::map<std::string, double> fixture_parameters(const Options& o) {
  std::map<std::string, double> p;
  if (o.theta) p["theta"] = *o.theta;
  if (o.alpha) p["alpha"] = *o.alpha;
  if (o.beta) p["beta"] = *o.beta;
  return p;
}

// A command's record; becomes manifest.json.
class Run {
 public:
  Run(std::string command, const Options& o) : command_(std::move(command)), out_(o.out) {
    fs::create_directories(out_);
    inputs_ = json::object();
    tolerances_ = json::object();
  }

  json& inputs() { return inputs_; }
  json& tolerances() { return tolerances_; }
  const fs::path& dir() const { return out_; }

  void add(const std::string& group, const Report& r) {
    for (mts::Check c : r.checks) {
      c.name = group + "." + c.name;
      checks_.add(c);
    }
  }
  void add(mts::Check c) { checks_.add(std::move(c)); }
  void summary(const std::string& key, json value) { summary_[key] = std::move(value); }

  std::string path(const std::string& name) const { return (out_ / name).string(); }
  void produced(const std::string& full_path) {
    artifacts_.push_back(fs::path(full_path).lexically_relative(out_).generic_string());
  }
  void produced(const std::vector<std::string>& paths) {
    for (const std::string& p : paths) produced(p);
  }

  void error(const std::string& what) { error_ = what; }

  // Writes the manifest and the timing sidecar; returns the exit code.
  int finish(double seconds) {
    const bool ok = !error_ && checks_.passed();
    artifacts_.push_back("manifest.json");
    artifacts_.push_back("timing.json");
    json m;
    m["command"] = command_;
    m["inputs"] = inputs_;
    m["tolerances"] = tolerances_;
    m["checks"] = mts::io::to_json(checks_);
    if (!summary_.is_null()) m["summary"] = summary_;
    m["artifacts"] = artifacts_;
    m["passed"] = ok;
    if (error_) m["error"] = *error_;
    // Wall time varies run to run, so it lives outside the manifest.
    m["wall_time"] = "timing.json";
    mts::io::write_text(path("manifest.json"), mts::io::dump(m));
    mts::io::write_text(path("timing.json"), mts::io::dump({{"wall_time_s", seconds}}));

    if (!checks_.checks.empty()) std::cout << checks_.table();
    if (error_) std::cerr << "error: " << *error_ << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << " " << command_ << " (manifest "
              << path("manifest.json") << ")\n";
    return ok ? 0 : 1;
  }

 private:
  std::string command_;
  fs::path out_;
  json inputs_;
  json tolerances_;
  json summary_;
  Report checks_;
  std::vector<std::string> artifacts_;
  std::optional<std::string> error_;
};

mts::Tolerances data_tolerances(const TolFlags& t, const Grid2D& grid, bool exact) {
  mts::Tolerances d = mts::Tolerances::defaults(grid, exact);
  if (t.holo) d.tol_holo = *t.holo;
  if (t.pde) d.tol_pde = *t.pde;
  if (t.loop) d.tol_loop = *t.loop;
  if (t.identity) d.tol_identity = *t.identity;
  if (t.eps_zero) d.eps_zero = *t.eps_zero;
  if (t.eps_immersion) d.eps_immersion = *t.eps_immersion;
  return d;
}

double patch_tol(const TolFlags& t, const Grid2D& grid, bool exact) {
  return t.patch ? *t.patch : mts::default_patch_tol(grid, exact);
}

void record_tolerances(Run& run, const TolFlags& t, const Grid2D& grid, bool exact) {
  const mts::Tolerances d = data_tolerances(t, grid, exact);
  json& j = run.tolerances();
  j["patch"] = patch_tol(t, grid, exact);
  j["holomorphic"] = d.tol_holo;
  j["pde"] = d.tol_pde;
  j["loop"] = d.tol_loop;
  j["identity"] = d.tol_identity;
  j["eps_zero"] = d.eps_zero;
  j["eps_immersion"] = d.eps_immersion;
  j["liu"] = t.liu.value_or(patch_tol(t, grid, exact));
  j["liu_eps"] = t.liu_eps;
  j["congruence"] = t.congruence;
  j["exact_derivatives"] = exact;
}

// The command's input: a fixture, a data file, or a mesh.
struct Source {
  std::optional<mts::Fixture> fixture;
  std::optional<mts::io::AnyData> data;
  std::optional<mts::RealField4> mesh;
  Grid2D grid;
  bool exact = false;
};

Source load_source(const Options& o, Run& run) {
  const int given = !o.fixture.empty() + !o.data.empty() + !o.mesh.empty();
  if (given != 1) throw CLI::ValidationError("input", "give exactly one of --fixture, --data, --mesh");
  Source s;
  json& in = run.inputs();
  if (!o.fixture.empty()) {
    const auto params = fixture_parameters(o);
    in["fixture"] = o.fixture;
    in["parameters"] = params;
    s.grid = o.grid.empty() ? mts::recommended_grid(o.fixture, params, o.n) : Grid2D::parse(o.grid);
    in["grid"] = s.grid.spec();
    s.fixture = mts::fixture_by_name(o.fixture, params, s.grid);
    if (s.fixture->second) s.data = *s.fixture->second;
    s.exact = true;
  } else if (!o.data.empty()) {
    in["data"] = o.data;
    s.data = mts::io::read_data(o.data);
    s.grid = std::visit([](const auto& d) { return d.grid(); }, *s.data);
    in["grid"] = s.grid.spec();
    if (!o.grid.empty() && Grid2D::parse(o.grid) != s.grid) {
      throw mts::GridMismatch("--grid " + o.grid + " differs from the data grid " + s.grid.spec());
    }
  } else {
    in["mesh"] = o.mesh;
    s.mesh = mts::io::read_ply(o.mesh);
    s.grid = (*s.mesh)[0].grid();
    in["grid"] = s.grid.spec();
  }
  return s;
}

mts::WeierstrassFirst as_first(const mts::io::AnyData& d, Run& run, const mts::Tolerances& tol) {
  if (const auto* f = std::get_if<mts::WeierstrassFirst>(&d)) return *f;
  const auto t = mts::second_to_first(std::get<mts::WeierstrassSecond>(d), tol);
  run.add(upper_check("second_to_first.loop_residual", t.loop_residual, tol.tol_loop,
                      t.data.grid(), 0, 0));
  run.add(upper_check("second_to_first.identity", t.identity_residual, tol.tol_identity,
                      t.data.grid(), 0, 0));
  return t.data;
}

mts::WeierstrassSecond as_second(const mts::io::AnyData& d, Run& run, const mts::Tolerances& tol) {
  if (const auto* s = std::get_if<mts::WeierstrassSecond>(&d)) return *s;
  const auto t = mts::first_to_second(std::get<mts::WeierstrassFirst>(d), tol);
  run.add(upper_check("first_to_second.loop_residual", t.loop_residual, tol.tol_loop,
                      t.data.grid(), 0, 0));
  run.add(upper_check("first_to_second.identity", t.identity_residual, tol.tol_identity,
                      t.data.grid(), 0, 0));
  return t.data;
}

std::string default_rep(const Source& s) {
  if (s.mesh || !s.data) return "explicit";
  return std::holds_alternative<mts::WeierstrassFirst>(*s.data) ? "first" : "second";
}

// Builds the patch for the requested representation and records the data
// validation and patch checks.
SurfacePatch build_patch(const Source& s, const std::string& rep_in, const TolFlags& t, Run& run) {
  const std::string rep = rep_in.empty() ? default_rep(s) : rep_in;
  run.inputs()["rep"] = rep;
  const mts::Tolerances tol = data_tolerances(t, s.grid, s.exact);
  mts::RepresentOptions opt;
  if (s.fixture) opt = s.fixture->anchored();
  opt.tol = patch_tol(t, s.grid, s.exact);
  opt.data_tol = tol;
  SurfacePatch p;
  if (rep == "explicit") {
    if (s.mesh) {
      p = mts::patch_from_coordinates(*s.mesh, t.patch);
    } else if (s.fixture) {
      p = mts::patch_from_coordinates(s.fixture->X, t.patch);
    } else {
      throw CLI::ValidationError("--rep", "explicit needs a fixture or a mesh");
    }
  } else if (!s.data) {
    throw CLI::ValidationError("--rep", rep + " needs Weierstrass data, not a mesh");
  } else if (rep == "first") {
    const mts::WeierstrassFirst d = as_first(*s.data, run, tol);
    run.add("data", mts::validate_first(d, tol));
    p = mts::represent_first(d, opt);
  } else if (rep == "second") {
    const mts::WeierstrassSecond d = as_second(*s.data, run, tol);
    run.add("data", mts::validate_second(d, tol));
    p = mts::represent_second(d, opt);
  } else {
    throw CLI::ValidationError("--rep", "unknown representation '" + rep + "'");
  }
  return p;
}

// Checks against the fixture's closed forms.
void fixture_oracle_checks(const mts::Fixture& f, const SurfacePatch& p, Run& run) {
  const Grid2D& g = p.grid;
  const mts::Region r = p.region();
  const auto xerr = mts::max_over(g, r, [&](Index i, Index j) {
    double e = 0.0;
    for (int k = 0; k < 4; ++k) e = std::max(e, std::abs(p.X[k](i, j) - f.X[k](i, j)));
    return e;
  });
  run.add(upper_check("oracle.X", xerr.value, p.tol, g, xerr.i, xerr.j));
  if (f.conformal_factor) {
    const auto lerr = mts::max_over(g, r, [&](Index i, Index j) {
      return std::abs(p.conformal_factor(i, j) - f.conformal_factor(g.u(i), g.v(j)));
    });
    run.add(upper_check("oracle.Lambda", lerr.value, p.tol, g, lerr.i, lerr.j));
  }
  if (f.nonvanishing_H) {
    const auto H = mts::mean_curvature(p);
    run.add(lower_check("oracle.min_abs_H", H.min_norm.value, 0.0, g, H.min_norm.i,
                        H.min_norm.j));
  }
}

void quadric_check(const SurfacePatch& p, double c, const TolFlags& t, Run& run) {
  const auto q = mts::sup_norm(mts::quadric_residual(p, c));
  run.add(upper_check("quadric", q.value, t.quadric ? *t.quadric : p.tol, p.grid, q.i, q.j));
  run.summary("quadric_constant", c);
}

void liu_checks(const SurfacePatch& p, const TolFlags& t, Run& run) {
  const mts::LiuData d = mts::liu_decompose(p, t.liu_eps);
  const Grid2D& g = p.grid;
  auto add = [&](const char* name, const mts::Extremum& e) {
    run.add(upper_check(std::string("liu.") + name, e.value, t.liu.value_or(p.tol), g, e.i, e.j));
  };
  add("psi_zbar_real", d.condition1);
  add("psi_f1_f2_zbar_real", d.condition2);
  add("psi_f1_zbar_conj_psi_f2_zbar", d.condition3);
  add("f1_zbar_f2_zbar", d.condition4);
  add("reconstruction", d.reconstruction);
  run.summary("liu_masked_nodes", d.masked);
}

std::vector<std::string> write_fields(const SurfacePatch& p, Run& run) {
  std::vector<std::string> files;
  for (int k = 0; k < 4; ++k) {
    files.push_back(run.path("x" + std::to_string(k + 1) + ".csv"));
    mts::io::write_field_csv(files.back(), p.X[k]);
  }
  files.push_back(run.path("lambda.csv"));
  mts::io::write_field_csv(files.back(), p.conformal_factor);
  for (int k = 0; k < 4; ++k) {
    files.push_back(run.path("H" + std::to_string(k + 1) + ".csv"));
    mts::io::write_field_csv(files.back(), p.H[k]);
  }
  return files;
}

void write_mesh(const SurfacePatch& p, const std::string& stem, Run& run) {
  mts::io::write_obj(run.path(stem + ".obj"), run.path(stem + "_x4.csv"), p);
  mts::io::write_ply(run.path(stem + ".ply"), p);
  run.produced({run.path(stem + ".obj"), run.path(stem + "_x4.csv"), run.path(stem + ".ply")});
}

mts::io::FieldFormat field_format(const std::string& f) {
  if (f == "csv") return mts::io::FieldFormat::kCsv;
  if (f == "binary") return mts::io::FieldFormat::kBinary;
  throw CLI::ValidationError("--format", "csv or binary, got '" + f + "'");
}

// Runs `body` and turns library exceptions into a recorded error; the
// manifest is written in every case.
template <class Body>
int guarded(Run& run, Body body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool usage = false;
  try {
    body();
  } catch (const mts::ValidationError& e) {
    run.add("data", e.report());
    run.error(e.what());
  } catch (const CLI::Error& e) {
    usage = true;
    run.error(e.what());
  } catch (const std::exception& e) {
    run.error(e.what());
  }
  const int code =
      run.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return usage ? 2 : code;
}

int cmd_generate(const Options& o) {
  Run run("generate", o);
  return guarded(run, [&] {
    const Source s = load_source(o, run);
    record_tolerances(run, o.tol, s.grid, s.exact);
    const SurfacePatch p = build_patch(s, o.rep, o.tol, run);
    run.add("patch", p.checks);
    if (s.fixture) {
      fixture_oracle_checks(*s.fixture, p, run);
      if (s.fixture->quadric_constant) quadric_check(p, *s.fixture->quadric_constant, o.tol, run);
    }
    write_mesh(p, "patch", run);
    run.produced(write_fields(p, run));
  });
}

mts::LorentzRotation rotation_for(const std::string& family, double param) {
  if (family == "parabolic") return mts::rotation_parabolic(param);
  if (family == "elliptic") return mts::rotation_elliptic(param);
  if (family == "hyperbolic") return mts::rotation_hyperbolic(param);
  throw CLI::ValidationError("--family", "parabolic, elliptic or hyperbolic, got '" + family + "'");
}

// Deforms the source and checks the result against the rotated original.
// Parabolic and hyperbolic act on first-kind data, elliptic on second-kind.
SurfacePatch deform_and_check(const Source& s, const Options& o, Run& run) {
  if (!s.data) throw CLI::ValidationError("--family", "deformation needs Weierstrass data");
  if (!o.param) throw CLI::ValidationError("--param", "deformation parameter is required");
  const double param = *o.param;
  const mts::LorentzRotation rot = rotation_for(o.family, param);
  run.inputs()["family"] = o.family;
  run.inputs()["param"] = param;
  const mts::Tolerances tol = data_tolerances(o.tol, s.grid, s.exact);
  mts::RepresentOptions opt;
  opt.tol = patch_tol(o.tol, s.grid, s.exact);
  opt.data_tol = tol;

  SurfacePatch before;
  SurfacePatch after;
  std::optional<mts::io::AnyData> deformed;
  auto record = [&](const auto& t) {
    run.add(upper_check("deform.loop_residual", t.loop_residual, tol.tol_loop, s.grid, 0, 0));
    run.add(upper_check("deform.identity", t.identity_residual, tol.tol_identity, s.grid, 0, 0));
    run.add("deformed", t.validation);
  };
  if (o.family == "elliptic") {
    const mts::WeierstrassSecond d = as_second(*s.data, run, tol);
    const auto t = mts::deform_elliptic(d, param, tol);
    record(t);
    before = mts::represent_second(d, opt);
    after = mts::represent_second(t.data, opt);
    deformed = t.data;
  } else {
    const mts::WeierstrassFirst d = as_first(*s.data, run, tol);
    const auto t = o.family == "parabolic" ? mts::deform_parabolic(d, param, tol)
                                           : mts::deform_hyperbolic(d, param, tol);
    record(t);
    before = mts::represent_first(d, opt);
    after = mts::represent_first(t.data, opt);
    deformed = t.data;
  }
  run.add("patch", after.checks);
  const mts::CongruenceReport c = mts::verify_congruence(before, after, rot, o.tol.congruence);
  run.add(upper_check("congruence", c.residual, c.tol, s.grid, c.i, c.j));
  run.summary("translation", {c.translation(0), c.translation(1), c.translation(2),
                              c.translation(3)});
  run.summary("lorentz_defect", mts::lorentz_defect(rot));
  if (!o.data.empty() || !o.fixture.empty()) {
    run.produced(mts::io::write_data(run.path("deformed.json"), *deformed, field_format(o.format)));
  }
  return after;
}

int cmd_deform(const Options& o) {
  Run run("deform", o);
  return guarded(run, [&] {
    const Source s = load_source(o, run);
    record_tolerances(run, o.tol, s.grid, s.exact);
    const SurfacePatch after = deform_and_check(s, o, run);
    write_mesh(after, "deformed", run);
  });
}

Eigen::VectorXd boundary_from(const json& spec, const Grid2D& grid, const fs::path& dir) {
  if (spec.is_number()) {
    return Eigen::VectorXd::Constant(mts::perimeter_nodes(grid).size(), spec.get<double>());
  }
  const mts::RealField f = mts::io::read_real_field_csv((dir / spec.get<std::string>()).string());
  mts::require_same_grid(f.grid(), grid, "boundary_M");
  return mts::boundary_values(f);
}

// Problem descriptor:
//   {"h": file, "N": file, "boundary_M": file or number,
//    "reference_M": file (optional), "max_iterations": int,
//    "residual_target": number}
// Fields are CSV, paths relative to the descriptor.
int cmd_solve(const Options& o) {
  Run run("solve", o);
  return guarded(run, [&] {
    if (o.problem.empty()) throw CLI::ValidationError("--problem", "problem descriptor required");
    run.inputs()["problem"] = o.problem;
    std::ifstream in(o.problem);
    if (!in) throw std::runtime_error("cannot open '" + o.problem + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::runtime_error("'" + o.problem + "': " + e.what());
    }
    const fs::path dir = fs::path(o.problem).parent_path();
    const mts::ComplexField h =
        mts::io::read_complex_field_csv((dir / j.at("h").get<std::string>()).string());
    const mts::RealField N =
        mts::io::read_real_field_csv((dir / j.at("N").get<std::string>()).string());
    const Grid2D grid = h.grid();
    run.inputs()["grid"] = grid.spec();
    record_tolerances(run, o.tol, grid, false);
    mts::SolverOptions so;
    so.max_iterations = j.value("max_iterations", so.max_iterations);
    so.residual_target = j.value("residual_target", so.residual_target);
    run.tolerances()["solver_residual_target"] = so.residual_target;
    run.tolerances()["solver_max_iterations"] = so.max_iterations;

    const auto a = mts::assemble_second_kind(h, N, boundary_from(j.at("boundary_M"), grid, dir),
                                             so, data_tolerances(o.tol, grid, false));
    run.add(upper_check("solver.residual", a.solve.residual, a.solve.target, grid, 0, 0));
    run.summary("iterations", a.solve.iterations);
    run.summary("residual_floor", a.solve.floor);
    if (a.solve.warning) run.summary("warning", *a.solve.warning);
    run.add("data", a.validation);
    if (j.contains("reference_M")) {
      const mts::RealField ref =
          mts::io::read_real_field_csv((dir / j["reference_M"].get<std::string>()).string());
      const double err = mts::max_difference(a.data.M, ref, mts::Region::kInterior);
      const double hh = grid.h_max();
      run.summary("interior_error", err);
      run.summary("interior_error_over_h2", err / (hh * hh));
    }
    run.produced(mts::io::write_data(run.path("solution.json"), a.data, field_format(o.format)));
    if (o.then_generate && a.valid()) {
      mts::RepresentOptions opt;
      opt.tol = patch_tol(o.tol, grid, false);
      opt.data_tol = data_tolerances(o.tol, grid, false);
      const SurfacePatch p = mts::represent_second(a.data, opt);
      run.add("patch", p.checks);
      write_mesh(p, "patch", run);
    }
  });
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const Options& o) {
  Run run("verify", o);
  return guarded(run, [&] {
    const Source s = load_source(o, run);
    record_tolerances(run, o.tol, s.grid, s.exact);
    const std::vector<std::string> checks = split(o.checks);
    run.inputs()["checks"] = checks;
    const SurfacePatch p = build_patch(s, o.rep, o.tol, run);
    for (const std::string& c : checks) {
      if (c == "conformality") {
        for (const char* name : {"conformality", "metric_cross", "spacelike"}) {
          if (p.checks.has(name)) run.add(p.checks.check(name));
        }
      } else if (c == "null-H") {
        run.add(p.checks.check("null_H"));
      } else if (c == "patch") {
        run.add("patch", p.checks);
      } else if (c == "quadric") {
        std::optional<double> k = o.quadric_c;
        if (!k && s.fixture) k = s.fixture->quadric_constant;
        if (!k) throw CLI::ValidationError("--checks", "quadric needs --quadric-c for this input");
        quadric_check(p, *k, o.tol, run);
      } else if (c == "liu") {
        liu_checks(p, o.tol, run);
      } else if (c == "congruence") {
        deform_and_check(s, o, run);
      } else if (c == "oracle") {
        if (!s.fixture) throw CLI::ValidationError("--checks", "oracle needs --fixture");
        fixture_oracle_checks(*s.fixture, p, run);
      } else {
        throw CLI::ValidationError("--checks", "unknown check '" + c + "'");
      }
    }
  });
}

// Writes fixture data as a descriptor; with --problem also a Dirichlet
// problem for solve whose reference solution is the fixture's M.
int cmd_export(const Options& o) {
  Run run("export", o);
  return guarded(run, [&] {
    const Source s = load_source(o, run);
    if (!s.data) throw CLI::ValidationError("--fixture", "export needs Weierstrass data");
    record_tolerances(run, o.tol, s.grid, s.exact);
    const mts::Tolerances tol = data_tolerances(o.tol, s.grid, s.exact);
    run.inputs()["kind"] = o.kind;
    if (o.kind == "first") {
      const mts::WeierstrassFirst d = as_first(*s.data, run, tol);
      run.add("data", mts::validate_first(d, tol));
      run.produced(mts::io::write_data(run.path("data.json"), d, field_format(o.format)));
    } else if (o.kind == "second") {
      const mts::WeierstrassSecond d = as_second(*s.data, run, tol);
      run.add("data", mts::validate_second(d, tol));
      run.produced(mts::io::write_data(run.path("data.json"), d, field_format(o.format)));
    } else {
      throw CLI::ValidationError("--kind", "first or second, got '" + o.kind + "'");
    }
    if (o.with_problem) {
      const mts::WeierstrassSecond d = as_second(*s.data, run, tol);
      const std::vector<std::pair<std::string, std::string>> files = {
          {"h", "problem_h.csv"}, {"N", "problem_N.csv"}, {"reference_M", "problem_M.csv"}};
      mts::io::write_field_csv(run.path("problem_h.csv"), d.h);
      mts::io::write_field_csv(run.path("problem_N.csv"), d.N);
      mts::io::write_field_csv(run.path("problem_M.csv"), d.M);
      json p;
      for (const auto& [key, file] : files) {
        p[key] = file;
        run.produced(run.path(file));
      }
      p["boundary_M"] = "problem_M.csv";
      mts::io::write_text(run.path("problem.json"), mts::io::dump(p));
      run.produced(run.path("problem.json"));
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mts: timelike and spacelike surfaces in L^4 with null mean curvature"};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("generate", "build a patch, write mesh, fields and residuals");
  add_input_flags(gen, o, false);

  CLI::App* def = app.add_subcommand("deform", "deform data and check congruence");
  add_input_flags(def, o, false);
  def->add_option("--family", o.family, "parabolic, elliptic or hyperbolic")->required();
  def->add_option("--param", o.param, "lambda, tau or eta")->required();
  def->add_option("--format", o.format, "field payloads: csv or binary")->capture_default_str();

  CLI::App* sol = app.add_subcommand("solve", "solve for M and assemble second-kind data");
  sol->add_option("--problem", o.problem, "problem descriptor (JSON)")->required();
  sol->add_option("--out", o.out, "output directory")->capture_default_str();
  sol->add_option("--format", o.format, "field payloads: csv or binary")->capture_default_str();
  sol->add_flag("--generate", o.then_generate, "also build the patch and its mesh");
  add_tolerance_flags(sol, o.tol);

  CLI::App* ver = app.add_subcommand("verify", "run invariant checks and print a table");
  add_input_flags(ver, o, true);
  ver->add_option("--checks", o.checks,
                  "comma list of conformality, null-H, quadric, liu, congruence, oracle, patch")
      ->capture_default_str();
  ver->add_option("--quadric-c", o.quadric_c, "c in <X,X> = c for the quadric check");
  ver->add_option("--family", o.family, "deformation for the congruence check");
  ver->add_option("--param", o.param, "deformation parameter for the congruence check");

  CLI::App* exp = app.add_subcommand("export", "write fixture data (and a solve problem)");
  add_input_flags(exp, o, false);
  exp->add_option("--kind", o.kind, "first or second")->capture_default_str();
  exp->add_option("--format", o.format, "field payloads: csv or binary")->capture_default_str();
  exp->add_flag("--problem", o.with_problem, "also write problem.json for solve");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_generate(o);
    if (def->parsed()) return cmd_deform(o);
    if (sol->parsed()) return cmd_solve(o);
    if (ver->parsed()) return cmd_verify(o);
    return cmd_export(o);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; anything else is a usage error.
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
