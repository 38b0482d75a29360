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

#include "mts/weierstrass.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

namespace mts {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);

Tolerances resolve(const std::optional<Tolerances>& tol, const Grid2D& grid,
                   bool exact) {
  return tol ? *tol : Tolerances::defaults(grid, exact);
}

std::string located(const std::string& what, const Check& c) {
  std::ostringstream os;
  os << what << ": " << c.name << " = " << c.value
     << (c.bound == Check::Bound::kUpper ? " (must be < " : " (must be > ")
     << c.threshold << ") at node (" << c.i << ", " << c.j << "), (u,v) = ("
     << c.u << ", " << c.v << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_weighted(
    const ComplexField& f, const RealField& A, const RealField& B,
    const std::function<double(std::complex<double>)>& weight,
    const Tolerances& tol) {
  require_same_grid(f.grid(), A.grid(), "validate");
  require_same_grid(f.grid(), B.grid(), "validate");
  const Grid2D& grid = f.grid();
  ValidationReport report;

  const Extremum fmin = min_over(grid, Region::kAll, [&](Index i, Index j) {
    return std::abs(f(i, j));
  });
  report.add(lower_check("nonvanishing", fmin.value, tol.eps_zero, grid, fmin.i,
                         fmin.j));

  const Extremum holo =
      max_over(grid, check_region(f.exact()), [&](Index i, Index j) {
        return std::abs(dzbar(f.jet(i, j)).v);
      });
  report.add(upper_check("holomorphic", holo.value, tol.tol_holo, grid, holo.i,
                         holo.j));

  const Extremum pde = max_over(grid, Region::kInterior, [&](Index i, Index j) {
    const RealJet a = A.jet(i, j);
    const RealJet b = B.jet(i, j);
    const double w = weight(f(i, j));
    return std::abs(0.25 * (a.duu + a.dvv) - w * 0.25 * (b.duu + b.dvv));
  });
  report.add(upper_check("pde", pde.value, tol.tol_pde, grid, pde.i, pde.j));

  const Extremum imm = min_over(grid, Region::kAll, [&](Index i, Index j) {
    const double w = weight(f(i, j));
    return std::abs(dz(A.jet(i, j)).v - w * dz(B.jet(i, j)).v);
  });
  report.add(lower_check("immersion", imm.value, tol.eps_immersion, grid, imm.i,
                         imm.j));
  return report;
}

namespace {

void require_valid(const ValidationReport& report, const char* what) {
  if (const Check* c = report.first_failure()) {
    throw ValidationError(located(std::string(what) + ": invalid input data", *c),
                          report);
  }
}

void require_closed(const PathIntegralResult& p, const Tolerances& tol,
                    const char* what) {
  if (!(p.loop_residual <= tol.tol_loop)) {
    std::ostringstream os;
    os << what << ": loop residual " << p.loop_residual << " exceeds "
       << tol.tol_loop << " at cell (" << p.worst_i << ", " << p.worst_j << ")";
    throw IntegrationError(os.str());
  }
}

// Winding number of f around the cell with lower-left node (i, j), from the
// four corner values. Exact for holomorphic f as long as arg f turns by less
// than pi along each edge.
int cell_winding(const ComplexField& f, Index i, Index j) {
  const Complex c[4] = {f(i, j), f(i + 1, j), f(i + 1, j + 1), f(i, j + 1)};
  double turn = 0.0;
  for (int k = 0; k < 4; ++k) turn += std::arg(c[(k + 1) % 4] / c[k]);
  return static_cast<int>(std::lround(turn / (2.0 * std::numbers::pi)));
}

Provenance derived(const Provenance& in, const std::string& family,
                   double parameter) {
  return Provenance{in.source, family, parameter};
}

}  // namespace

Tolerances Tolerances::defaults(const Grid2D& grid, bool exact) {
  Tolerances t;
  if (!exact) {
    const double h2 = grid.h_max() * grid.h_max();
    t.tol_holo = 50.0 * h2;
    t.tol_pde = 50.0 * h2;
    t.tol_loop = 100.0 * h2;
    t.tol_identity = 100.0 * h2;
  }
  return t;
}

ValidationReport validate_first(const WeierstrassFirst& data,
                                const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  return validate_weighted(
      data.g, data.P, data.Q, [](Complex g) { return std::norm(g); }, t);
}

ValidationReport validate_second(const WeierstrassSecond& data,
                                 const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  return validate_weighted(
      data.h, data.M, data.N, [](Complex h) { return h.real(); }, t);
}

Extremum equivalence_identity_residual(const WeierstrassFirst& first,
                                       const WeierstrassSecond& second) {
  require_same_grid(first.grid(), second.grid(), "equivalence identity");
  return max_over(first.grid(), Region::kAll, [&](Index i, Index j) {
    const Complex g = first.g(i, j);
    const Complex lhs = dz(second.M.jet(i, j)).v -
                        second.h(i, j).real() * dz(second.N.jet(i, j)).v;
    const Complex rhs =
        (dz(first.P.jet(i, j)).v - std::norm(g) * dz(first.Q.jet(i, j)).v) /
        std::conj(g);
    return std::abs(lhs + rhs);
  });
}

Transformed<WeierstrassSecond> first_to_second(
    const WeierstrassFirst& data, const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  require_valid(validate_first(data, t), "first_to_second");

  ComplexField h =
      apply_pointwise([](const ComplexJet& g) { return reciprocal(g); }, data.g);
  RealField N = apply_pointwise([](const RealJet& p) { return 2.0 * p; }, data.P);
  const ComplexField E = apply_pointwise(
      [](const ComplexJet& g, const RealJet& p, const RealJet& q) {
        return dz(p) / g + g * dz(q);
      },
      data.g, data.P, data.Q);
  PathIntegralResult M = integrate_primitive(E);
  require_closed(M, t, "first_to_second");

  Transformed<WeierstrassSecond> out;
  out.data = WeierstrassSecond{std::move(h), std::move(M.primitive), std::move(N),
                               derived(data.provenance, "first_to_second", 0.0)};
  out.loop_residual = M.loop_residual;
  out.identity_residual = equivalence_identity_residual(data, out.data).value;
  out.validation = validate_second(out.data, t);
  return out;
}

Transformed<WeierstrassFirst> second_to_first(
    const WeierstrassSecond& data, const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  require_valid(validate_second(data, t), "second_to_first");

  ComplexField g =
      apply_pointwise([](const ComplexJet& h) { return reciprocal(h); }, data.h);
  RealField P = apply_pointwise([](const RealJet& n) { return 0.5 * n; }, data.N);
  const ComplexField E = apply_pointwise(
      [](const ComplexJet& h, const RealJet& m, const RealJet& n) {
        return h * dz(m) - 0.5 * h * h * dz(n);
      },
      data.h, data.M, data.N);
  PathIntegralResult Q = integrate_primitive(E);
  require_closed(Q, t, "second_to_first");

  Transformed<WeierstrassFirst> out;
  out.data = WeierstrassFirst{std::move(g), std::move(P), std::move(Q.primitive),
                              derived(data.provenance, "second_to_first", 0.0)};
  out.loop_residual = Q.loop_residual;
  out.identity_residual = equivalence_identity_residual(out.data, data).value;
  out.validation = validate_first(out.data, t);
  return out;
}

Transformed<WeierstrassFirst> deform_parabolic(
    const WeierstrassFirst& data, double lambda,
    const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  require_valid(validate_first(data, t), "deform_parabolic");
  const Grid2D& grid = data.grid();

  const Extremum pole = min_over(grid, Region::kAll, [&](Index i, Index j) {
    return std::abs(1.0 + kI * lambda * data.g(i, j));
  });
  if (!(pole.value > t.eps_zero)) {
    std::ostringstream os;
    os << "deform_parabolic: g_lambda has a pole on the grid, |1 + i lambda g| = "
       << pole.value << " at node (" << pole.i << ", " << pole.j
       << "), (u,v) = (" << grid.u(pole.i) << ", " << grid.v(pole.j) << ")";
    throw DomainError(os.str());
  }
  // A zero of 1 + i lambda g strictly inside a cell escapes the node test.
  const ComplexField denom = apply_pointwise(
      [lambda](const ComplexJet& g0) { return 1.0 + kI * lambda * g0; }, data.g);
  for (Index j = 0; j + 1 < grid.n_v(); ++j) {
    for (Index i = 0; i + 1 < grid.n_u(); ++i) {
      if (cell_winding(denom, i, j) != 0) {
        std::ostringstream os;
        os << "deform_parabolic: g_lambda has a pole inside cell (" << i << ", "
           << j << "), (u,v) in [" << grid.u(i) << ", " << grid.u(i + 1)
           << "] x [" << grid.v(j) << ", " << grid.v(j + 1) << "]";
        throw DomainError(os.str());
      }
    }
  }

  const Complex il = kI * lambda;
  ComplexField g = apply_pointwise(
      [il](const ComplexJet& g0) { return g0 / (1.0 + il * g0); }, data.g);
  const ComplexField E = apply_pointwise(
      [il](const ComplexJet& g0, const RealJet& p, const RealJet& q) {
        return (reciprocal(g0) + il) * (g0 * dz(q) - il * dz(p));
      },
      data.g, data.P, data.Q);
  PathIntegralResult Q = integrate_primitive(E);
  require_closed(Q, t, "deform_parabolic");

  Transformed<WeierstrassFirst> out;
  out.data = WeierstrassFirst{std::move(g), data.P, std::move(Q.primitive),
                              derived(data.provenance, "parabolic", lambda)};
  out.loop_residual = Q.loop_residual;
  out.identity_residual =
      max_over(grid, Region::kAll, [&](Index i, Index j) {
        const Complex g0 = data.g(i, j);
        const Complex gl = out.data.g(i, j);
        const Complex pz = dz(data.P.jet(i, j)).v;
        const Complex lhs = pz - std::norm(gl) * dz(out.data.Q.jet(i, j)).v;
        const Complex rhs =
            std::conj(gl) / std::conj(g0) * (pz - std::norm(g0) * dz(data.Q.jet(i, j)).v);
        return std::abs(lhs - rhs);
      }).value;
  out.validation = validate_first(out.data, t);
  return out;
}

Transformed<WeierstrassSecond> deform_elliptic(
    const WeierstrassSecond& data, double tau,
    const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  require_valid(validate_second(data, t), "deform_elliptic");
  const Grid2D& grid = data.grid();

  const Complex rot = std::polar(1.0, tau);
  const Complex isin = kI * std::sin(tau);
  ComplexField h = apply_pointwise(
      [rot](const ComplexJet& h0) { return std::conj(rot) * h0; }, data.h);
  const ComplexField E = apply_pointwise(
      [rot, isin](const ComplexJet& h0, const RealJet& m, const RealJet& n) {
        return rot * dz(m) - isin * h0 * dz(n);
      },
      data.h, data.M, data.N);
  PathIntegralResult M = integrate_primitive(E);
  require_closed(M, t, "deform_elliptic");

  Transformed<WeierstrassSecond> out;
  out.data = WeierstrassSecond{std::move(h), std::move(M.primitive), data.N,
                               derived(data.provenance, "elliptic", tau)};
  out.loop_residual = M.loop_residual;
  out.identity_residual =
      max_over(grid, Region::kAll, [&](Index i, Index j) {
        const Complex nz = dz(data.N.jet(i, j)).v;
        const Complex lhs =
            dz(out.data.M.jet(i, j)).v - out.data.h(i, j).real() * nz;
        const Complex rhs =
            rot * (dz(data.M.jet(i, j)).v - data.h(i, j).real() * nz);
        return std::abs(lhs - rhs);
      }).value;
  out.validation = validate_second(out.data, t);
  return out;
}

Transformed<WeierstrassFirst> deform_hyperbolic(
    const WeierstrassFirst& data, double eta,
    const std::optional<Tolerances>& tol) {
  const Tolerances t = resolve(tol, data.grid(), data.exact());
  require_valid(validate_first(data, t), "deform_hyperbolic");
  const Grid2D& grid = data.grid();

  const double s = std::exp(eta);
  const double si = std::exp(-eta);
  Transformed<WeierstrassFirst> out;
  out.data = WeierstrassFirst{
      apply_pointwise([s](const ComplexJet& g) { return s * g; }, data.g),
      apply_pointwise([s](const RealJet& p) { return s * p; }, data.P),
      apply_pointwise([si](const RealJet& q) { return si * q; }, data.Q),
      derived(data.provenance, "hyperbolic", eta)};
  out.identity_residual =
      max_over(grid, Region::kAll, [&](Index i, Index j) {
        const Complex lhs =
            dz(out.data.P.jet(i, j)).v -
            std::norm(out.data.g(i, j)) * dz(out.data.Q.jet(i, j)).v;
        const Complex rhs =
            s * (dz(data.P.jet(i, j)).v -
                 std::norm(data.g(i, j)) * dz(data.Q.jet(i, j)).v);
        return std::abs(lhs - rhs);
      }).value;
  out.validation = validate_first(out.data, t);
  return out;
}

}  // namespace mts
