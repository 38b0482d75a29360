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

#include "mts/representation.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>
#include <vector>

#include "mts/calculus.hpp"

namespace mts {

namespace {

using Complex = std::complex<double>;
using Frame = std::array<ComplexJet, 4>;
constexpr Complex kI(0.0, 1.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class Array4>
LorentzVector4 real_vector(const Array4& f, Index i, Index j) {
  return LorentzVector4(f[0](i, j), f[1](i, j), f[2](i, j), f[3](i, j));
}

template <class Array4>
ComplexVector4 complex_vector(const Array4& f, Index i, Index j) {
  return ComplexVector4(f[0](i, j), f[1](i, j), f[2](i, j), f[3](i, j));
}

// Null normal (2 Re g, 2 Im g, -1 + |g|^2, 1 + |g|^2).
LorentzVector4 null_normal(Complex g) {
  const double a = std::norm(g);
  return LorentzVector4(2.0 * g.real(), 2.0 * g.imag(), -1.0 + a, 1.0 + a);
}

RealField sampled(const Grid2D& grid, const std::function<double(Index, Index)>& f) {
  Eigen::ArrayXXd values(grid.n_u(), grid.n_v());
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) values(i, j) = f(i, j);
  }
  return RealField(grid, std::move(values));
}

// X_z from a frame formula over the inputs' jets, and X by integrating it.
template <class Formula, class... S>
SurfacePatch integrate_frame(Formula frame, const RepresentOptions& options,
                             RepresentationKind kind, Provenance provenance,
                             const Field<S>&... in) {
  const Grid2D& grid = std::get<0>(std::tie(in...)).grid();
  (require_same_grid(grid, in.grid(), to_string(kind)), ...);
  const bool exact = (in.exact() && ...);
  const bool have_providers = (in.has_provider() && ...);

  SurfacePatch p;
  p.grid = grid;
  p.exact = exact;
  p.kind = kind;
  p.provenance = std::move(provenance);
  p.tol = options.tol ? *options.tol : default_patch_tol(grid, exact);

  std::vector<Frame> nodes(grid.size());
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      nodes[i + grid.n_u() * j] = frame(in.jet(i, j)...);
    }
  }
  auto providers = std::make_tuple(in.provider()...);
  auto frame_at = [frame, providers](double u, double v) {
    return std::apply([&](const auto&... q) { return frame(q(u, v)...); },
                      providers);
  };

  for (int k = 0; k < 4; ++k) {
    ComplexField::Array values(grid.n_u(), grid.n_v());
    auto jets = std::make_shared<ComplexField::NodeJets>(grid.size());
    ComplexField::Array zzbar(grid.n_u(), grid.n_v());
    for (Index idx = 0; idx < grid.size(); ++idx) {
      (*jets)[idx] = nodes[idx][k];
      values(idx % grid.n_u(), idx / grid.n_u()) = nodes[idx][k].v;
      zzbar(idx % grid.n_u(), idx / grid.n_u()) = dzbar(nodes[idx][k]).v;
    }
    ComplexField::Provider provider;
    if (have_providers) {
      provider = [frame_at, k](double u, double v) { return frame_at(u, v)[k]; };
    }
    p.Xz[k] = ComplexField(grid, std::move(values), std::move(provider),
                           std::move(jets), exact);
    p.Xzzbar[k] = ComplexField(grid, std::move(zzbar));
  }

  detail::PointEvaluator eval;
  if (have_providers) {
    eval = [frame_at](double u, double v, Complex* out) {
      const Frame f = frame_at(u, v);
      for (int k = 0; k < 4; ++k) out[k] = f[k].v;
    };
  }
  auto raw = detail::integrate_forms(
      grid, 4,
      [&](int k, Index i, Index j) { return nodes[i + grid.n_u() * j][k].v; },
      have_providers ? &eval : nullptr, PathOrder::kRowsThenColumns);

  const LorentzVector4 anchor =
      options.anchor ? *options.anchor : LorentzVector4::Zero();
  Extremum loop{0.0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    if (raw[k].loop_residual > loop.value || raw[k].loop_residual != raw[k].loop_residual) {
      loop = {raw[k].loop_residual, raw[k].worst_i, raw[k].worst_j};
    }
    std::function<ComplexJet(double, double)> point_e;
    if (have_providers) point_e = p.Xz[k].provider();
    const ComplexField& xz = p.Xz[k];
    p.X[k] = detail::primitive_field(
        grid, raw[k].values + anchor(k),
        [&xz](Index i, Index j) { return xz.jet(i, j); }, std::move(point_e),
        exact);
  }
  p.loop_residual = loop.value;
  p.checks.add(upper_check("loop_residual", loop.value, p.tol, grid, loop.i, loop.j));
  if (!(loop.value <= p.tol)) {
    std::ostringstream os;
    os << to_string(kind) << " representation: loop residual " << loop.value
       << " exceeds " << p.tol << " at cell (" << loop.i << ", " << loop.j << ")";
    throw IntegrationError(os.str());
  }
  return p;
}

// Lambda, H, Gauss map and the representation-independent checks.
void finish_patch(SurfacePatch& p,
                  const std::function<double(Index, Index)>& lambda,
                  const std::function<LorentzVector4(Index, Index)>& gauss) {
  const Grid2D& grid = p.grid;
  const Region region = p.region();
  p.conformal_factor = sampled(grid, lambda);

  for (int k = 0; k < 4; ++k) {
    p.H[k] = sampled(grid, [&](Index i, Index j) {
      return 4.0 / p.conformal_factor(i, j) * p.Xzzbar[k](i, j).real();
    });
    p.H[k].set_boundary_trusted(p.exact);
  }
  if (gauss) {
    RealField4 n;
    for (int k = 0; k < 4; ++k) {
      n[k] = sampled(grid, [&](Index i, Index j) { return gauss(i, j)(k); });
    }
    p.gauss_map = std::move(n);
  }

  const Extremum conf = max_over(grid, region, [&](Index i, Index j) {
    const ComplexVector4 xz = p.xz(i, j);
    return std::abs(complex_bilinear(xz, xz));
  });
  p.checks.add(upper_check("conformality", conf.value, p.tol, grid, conf.i, conf.j));

  const Extremum lam = min_over(grid, Region::kAll, [&](Index i, Index j) {
    return p.conformal_factor(i, j);
  });
  p.checks.add(lower_check("spacelike", lam.value, 0.0, grid, lam.i, lam.j));

  const Extremum cross = max_over(grid, region, [&](Index i, Index j) {
    const ComplexVector4 xz = p.xz(i, j);
    const double direct = 2.0 * complex_bilinear(xz, xz.conjugate()).real();
    return std::abs(p.conformal_factor(i, j) - direct);
  });
  p.checks.add(upper_check("metric_cross", cross.value, p.tol, grid, cross.i, cross.j));

  const Extremum imag = max_over(grid, region, [&](Index i, Index j) {
    return p.xzzbar(i, j).imag().cwiseAbs().maxCoeff();
  });
  p.checks.add(upper_check("xzzbar_real", imag.value, p.tol, grid, imag.i, imag.j));

  const Extremum null = max_over(grid, region, [&](Index i, Index j) {
    const LorentzVector4 h = p.h(i, j);
    return std::abs(minkowski_inner(h, h)) / (1.0 + h.squaredNorm());
  });
  p.checks.add(upper_check("null_H", null.value, p.tol, grid, null.i, null.j));

  if (p.gauss_map) {
    const RealField4& n = *p.gauss_map;
    const Extremum orth = max_over(grid, Region::kAll, [&](Index i, Index j) {
      return std::abs(complex_bilinear(p.xz(i, j), real_vector(n, i, j)));
    });
    p.checks.add(upper_check("gauss_orthogonal", orth.value, p.tol, grid, orth.i, orth.j));
    const Extremum gnull = max_over(grid, Region::kAll, [&](Index i, Index j) {
      const LorentzVector4 v = real_vector(n, i, j);
      return std::abs(minkowski_inner(v, v));
    });
    p.checks.add(upper_check("gauss_null", gnull.value, p.tol, grid, gnull.i, gnull.j));
  }
}

// sup |(x_k - x_k(origin)) - (expected - expected(origin))|.
void coordinate_check(SurfacePatch& p, const std::string& name, int k,
                      const std::function<double(Index, Index)>& expected) {
  const double x0 = p.X[k](0, 0);
  const double e0 = expected(0, 0);
  const Extremum d = max_over(p.grid, Region::kAll, [&](Index i, Index j) {
    return std::abs((p.X[k](i, j) - x0) - (expected(i, j) - e0));
  });
  p.checks.add(upper_check(name, d.value, p.tol, p.grid, d.i, d.j));
}

void require_valid_input(const ValidationReport& report, const char* what) {
  if (const Check* c = report.first_failure()) {
    std::ostringstream os;
    os << what << ": invalid input data: " << c->name << " = " << c->value
       << " at (u,v) = (" << c->u << ", " << c->v << ")";
    throw ValidationError(os.str(), report);
  }
}

}  // namespace

const char* to_string(RepresentationKind kind) {
  switch (kind) {
    case RepresentationKind::kFirst:
      return "first";
    case RepresentationKind::kSecond:
      return "second";
    case RepresentationKind::kThird:
      return "third";
    case RepresentationKind::kExplicit:
      break;
  }
  return "explicit";
}

LorentzVector4 SurfacePatch::x(Index i, Index j) const { return real_vector(X, i, j); }
ComplexVector4 SurfacePatch::xz(Index i, Index j) const { return complex_vector(Xz, i, j); }
ComplexVector4 SurfacePatch::xzzbar(Index i, Index j) const {
  return complex_vector(Xzzbar, i, j);
}
LorentzVector4 SurfacePatch::h(Index i, Index j) const { return real_vector(H, i, j); }

double default_patch_tol(const Grid2D& grid, bool exact) {
  return exact ? 1e-8 : 100.0 * grid.h_max() * grid.h_max();
}

SurfacePatch represent_first(const WeierstrassFirst& data,
                             const RepresentOptions& options) {
  require_valid_input(validate_first(data, options.data_tol), "represent_first");
  auto frame = [](const ComplexJet& g, const RealJet& P, const RealJet& Q) {
    const ComplexJet pz = dz(P);
    const ComplexJet qz = dz(Q);
    const ComplexJet pg = pz / g;
    const ComplexJet qg = qz * g;
    return Frame{pg + qg, kI * pg - kI * qg, pz - qz, pz + qz};
  };
  SurfacePatch p = integrate_frame(frame, options, RepresentationKind::kFirst,
                                   data.provenance, data.g, data.P, data.Q);
  finish_patch(
      p,
      [&](Index i, Index j) {
        const Complex g = data.g(i, j);
        const double a = std::norm(g);
        return 4.0 / a *
               std::norm(dz(data.P.jet(i, j)).v - a * dz(data.Q.jet(i, j)).v);
      },
      [&](Index i, Index j) { return null_normal(data.g(i, j)); });
  coordinate_check(p, "x3_is_P_minus_Q", 2,
                   [&](Index i, Index j) { return data.P(i, j) - data.Q(i, j); });
  coordinate_check(p, "x4_is_P_plus_Q", 3,
                   [&](Index i, Index j) { return data.P(i, j) + data.Q(i, j); });
  const Extremum normal = max_over(p.grid, p.region(), [&](Index i, Index j) {
    const RealJet q = data.Q.jet(i, j);
    const LorentzVector4 n = null_normal(data.g(i, j));
    const ComplexVector4 expected = (0.25 * (q.duu + q.dvv)) * n.cast<Complex>();
    return (p.xzzbar(i, j) - expected).cwiseAbs().maxCoeff();
  });
  p.checks.add(upper_check("xzzbar_along_normal", normal.value, p.tol, p.grid,
                           normal.i, normal.j));
  return p;
}

SurfacePatch represent_second(const WeierstrassSecond& data,
                              const RepresentOptions& options) {
  require_valid_input(validate_second(data, options.data_tol), "represent_second");
  auto frame = [](const ComplexJet& h, const RealJet& M, const RealJet& N) {
    const ComplexJet mz = dz(M);
    const ComplexJet nz = dz(N);
    const ComplexJet h2 = h * h;
    return Frame{mz, -kI * mz + kI * h * nz, -(h * mz) + 0.5 * (1.0 + h2) * nz,
                 h * mz + 0.5 * (1.0 - h2) * nz};
  };
  SurfacePatch p = integrate_frame(frame, options, RepresentationKind::kSecond,
                                   data.provenance, data.h, data.M, data.N);
  finish_patch(
      p,
      [&](Index i, Index j) {
        return 4.0 * std::norm(dz(data.M.jet(i, j)).v -
                               data.h(i, j).real() * dz(data.N.jet(i, j)).v);
      },
      [&](Index i, Index j) { return null_normal(1.0 / data.h(i, j)); });
  coordinate_check(p, "x1_is_M", 0, [&](Index i, Index j) { return data.M(i, j); });
  const double s0 = p.X[2](0, 0) + p.X[3](0, 0);
  const double n0 = data.N(0, 0);
  const Extremum sum = max_over(p.grid, Region::kAll, [&](Index i, Index j) {
    return std::abs((p.X[2](i, j) + p.X[3](i, j) - s0) - (data.N(i, j) - n0));
  });
  p.checks.add(upper_check("x3_plus_x4_is_N", sum.value, p.tol, p.grid, sum.i, sum.j));
  return p;
}

ValidationReport validate_third(const ComplexField& g, const RealField& A,
                                const RealField& B,
                                const std::optional<Tolerances>& tol) {
  const bool exact = g.exact() && A.exact() && B.exact();
  return validate_weighted(
      g, A, B,
      [](Complex z) {
        const double a = std::norm(z);
        return (a - 1.0) / (a + 1.0);
      },
      tol ? *tol : Tolerances::defaults(g.grid(), exact));
}

SurfacePatch represent_third(const ComplexField& g, const RealField& A,
                             const RealField& B, const RepresentOptions& options) {
  require_valid_input(validate_third(g, A, B, options.data_tol), "represent_third");
  auto frame = [](const ComplexJet& gj, const RealJet& a, const RealJet& b) {
    const ComplexJet az = dz(a);
    const ComplexJet bz = dz(b);
    const ComplexJet gi = reciprocal(gj);
    const ComplexJet minus = 0.5 * (gi - gj);
    const ComplexJet plus = 0.5 * (gi + gj);
    return Frame{az * minus + bz * plus, kI * (az * plus + bz * minus), az, bz};
  };
  Provenance prov{"", "third", 0.0};
  SurfacePatch p = integrate_frame(frame, options, RepresentationKind::kThird,
                                   prov, g, A, B);
  finish_patch(
      p,
      [&](Index i, Index j) {
        const double m = std::abs(g(i, j));
        const double w = (m * m - 1.0) / (m * m + 1.0);
        const double s = m + 1.0 / m;
        return s * s * std::norm(dz(A.jet(i, j)).v - w * dz(B.jet(i, j)).v);
      },
      [&](Index i, Index j) { return null_normal(g(i, j)); });
  coordinate_check(p, "x3_is_A", 2, [&](Index i, Index j) { return A(i, j); });
  coordinate_check(p, "x4_is_B", 3, [&](Index i, Index j) { return B(i, j); });
  return p;
}

SurfacePatch patch_from_coordinates(const RealField4& X, std::optional<double> tol) {
  const Grid2D& grid = X[0].grid();
  for (int k = 1; k < 4; ++k) require_same_grid(grid, X[k].grid(), "patch");
  SurfacePatch p;
  p.grid = grid;
  p.exact = X[0].exact() && X[1].exact() && X[2].exact() && X[3].exact();
  p.kind = RepresentationKind::kExplicit;
  p.tol = tol ? *tol : default_patch_tol(grid, p.exact);
  p.X = X;
  for (int k = 0; k < 4; ++k) {
    p.Xz[k] = wirtinger_dz(X[k]);
    p.Xzzbar[k] = apply_pointwise(
        [](const RealJet& a) {
          return ComplexJet(Complex(0.25 * (a.duu + a.dvv)), kNaN, kNaN, kNaN,
                            kNaN, kNaN);
        },
        X[k]);
  }
  finish_patch(
      p,
      [&](Index i, Index j) {
        const ComplexVector4 xz = p.xz(i, j);
        return 2.0 * complex_bilinear(xz, xz.conjugate()).real();
      },
      nullptr);
  return p;
}

MeanCurvatureReport mean_curvature(const SurfacePatch& patch) {
  const Grid2D& grid = patch.grid;
  const Extremum lam = min_over(grid, Region::kAll, [&](Index i, Index j) {
    return patch.conformal_factor(i, j);
  });
  if (!(lam.value > 0.0)) {
    std::ostringstream os;
    os << "mean_curvature: degenerate metric, Lambda = " << lam.value
       << " at (u,v) = (" << grid.u(lam.i) << ", " << grid.v(lam.j) << ")";
    throw DomainError(os.str());
  }
  MeanCurvatureReport r;
  r.H = patch.H;
  const Region region = patch.region();
  r.null_defect = max_over(grid, region, [&](Index i, Index j) {
    const LorentzVector4 h = patch.h(i, j);
    return std::abs(minkowski_inner(h, h)) / (1.0 + h.squaredNorm());
  });
  r.min_norm = min_over(grid, region, [&](Index i, Index j) { return patch.h(i, j).norm(); });
  r.max_norm = max_over(grid, region, [&](Index i, Index j) { return patch.h(i, j).norm(); });
  return r;
}

LiuData liu_decompose(const SurfacePatch& patch, double eps) {
  const Grid2D& grid = patch.grid;
  const Region region = patch.region();
  LiuData d;
  d.eps = eps;
  ComplexField::Array psi(grid.n_u(), grid.n_v());
  ComplexField::Array f1(grid.n_u(), grid.n_v());
  ComplexField::Array f2(grid.n_u(), grid.n_v());
  Eigen::ArrayXXd c1 = Eigen::ArrayXXd::Zero(grid.n_u(), grid.n_v());
  Eigen::ArrayXXd c2 = c1, c3 = c1, c4 = c1, rec = c1;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> use(grid.n_u(), grid.n_v());

  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      const ComplexVector4 xz = patch.xz(i, j);
      const ComplexVector4 xzz = patch.xzzbar(i, j);
      const Complex s = 0.5 * (xz(2) + xz(3));
      psi(i, j) = s;
      const bool in_region = region == Region::kAll || grid.is_interior(i, j);
      use(i, j) = in_region && std::abs(s) > eps;
      if (!use(i, j)) {
        f1(i, j) = f2(i, j) = Complex(kNaN, kNaN);
        if (in_region) ++d.masked;
        continue;
      }
      const Complex sf1 = 0.5 * (xz(0) + kI * xz(1));
      const Complex sf2 = 0.5 * (xz(0) - kI * xz(1));
      f1(i, j) = sf1 / s;
      f2(i, j) = sf2 / s;

      const Complex s_b = 0.5 * (xzz(2) + xzz(3));
      const Complex sf1_b = 0.5 * (xzz(0) + kI * xzz(1));
      const Complex sf2_b = 0.5 * (xzz(0) - kI * xzz(1));
      const Complex sf12_b = 0.5 * (-xzz(2) + xzz(3));
      c1(i, j) = std::abs(s_b.imag());
      c2(i, j) = std::abs(sf12_b.imag());
      c3(i, j) = std::abs(sf1_b - std::conj(sf2_b));
      const Complex f1_b = (sf1_b - f1(i, j) * s_b) / s;
      const Complex f2_b = (sf2_b - f2(i, j) * s_b) / s;
      c4(i, j) = std::abs(f1_b * f2_b);

      const Complex a = f1(i, j), b = f2(i, j);
      const ComplexVector4 re(s * (a + b), -kI * s * (a - b), s * (1.0 - a * b),
                              s * (1.0 + a * b));
      rec(i, j) = (re - xz).cwiseAbs().maxCoeff();
    }
  }
  d.psi = ComplexField(grid, psi);
  d.f1 = ComplexField(grid, f1);
  d.f2 = ComplexField(grid, f2);
  auto sup = [&](const Eigen::ArrayXXd& a) {
    return max_over(grid, Region::kAll,
                    [&](Index i, Index j) { return use(i, j) ? a(i, j) : 0.0; });
  };
  d.condition1 = sup(c1);
  d.condition2 = sup(c2);
  d.condition3 = sup(c3);
  d.condition4 = sup(c4);
  d.reconstruction = sup(rec);
  d.min_abs_psi = min_over(grid, region, [&](Index i, Index j) { return std::abs(psi(i, j)); });
  return d;
}

CongruenceReport verify_congruence(const SurfacePatch& a, const SurfacePatch& b,
                                   const LorentzRotation& rot, double tol) {
  require_same_grid(a.grid, b.grid, "verify_congruence");
  const Grid2D& grid = a.grid;
  const LorentzRotation::Matrix& m = rot.matrix;
  auto t_at = [&](Index i, Index j) -> LorentzVector4 {
    return m * a.x(i, j) - b.x(i, j);
  };
  LorentzVector4 mean = LorentzVector4::Zero();
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) mean += t_at(i, j);
  }
  mean /= static_cast<double>(grid.size());
  const Extremum e = max_over(grid, Region::kAll, [&](Index i, Index j) {
    return (t_at(i, j) - mean).cwiseAbs().maxCoeff();
  });
  CongruenceReport r;
  r.residual = e.value;
  r.i = e.i;
  r.j = e.j;
  r.translation = mean;
  r.tol = tol;
  r.passed = e.value < tol;
  return r;
}

RealField quadric_residual(const SurfacePatch& patch, double c) {
  return sampled(patch.grid, [&](Index i, Index j) {
    const LorentzVector4 x = patch.x(i, j);
    return minkowski_inner(x, x) - c;
  });
}

}  // namespace mts
