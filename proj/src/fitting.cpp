// Copyright 2026 The infoeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infoeq/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "infoeq/errors.hpp"
#include "infoeq/table.hpp"

namespace infoeq::fit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double transform_value(double x, Transform transform) {
  if (transform == Transform::kLinear) return x;
  if (!(x > 0.0)) fail(ErrorKind::kDomain, "log transform of non-positive value " + format_double(x));
  return std::log(x);
}

}  // namespace

void FitProblem::validate() const {
  const std::size_t n = x0.size();
  if (n == 0) fail(ErrorKind::kInvalidArgument, "no parameters to fit");
  if (lower.size() != n || upper.size() != n ||
      (!param_names.empty() && param_names.size() != n))
    fail(ErrorKind::kInvalidArgument, "parameter vectors differ in length");
  if (!objective) fail(ErrorKind::kInvalidArgument, "objective missing");
  if (!scale.empty()) {
    if (scale.size() != n) fail(ErrorKind::kInvalidArgument, "scale vector has wrong length");
    for (double s : scale)
      if (!(s > 0.0) || !std::isfinite(s))
        fail(ErrorKind::kInvalidArgument, "scale entries must be positive");
  }
  if (!(tol > 0.0)) fail(ErrorKind::kInvalidArgument, "tol must be positive");
  if (max_iter < 1) fail(ErrorKind::kInvalidArgument, "max_iter must be >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x0[i])) fail(ErrorKind::kInvalidArgument, "x0 must be finite");
    if (!(lower[i] <= x0[i] && x0[i] <= upper[i]))
      fail(ErrorKind::kInvalidArgument, "x0 outside bounds for parameter " +
                                            std::to_string(i));
  }
}

ResidualStats residual_stats(std::span<const double> r) {
  ResidualStats s;
  if (r.empty()) return s;
  double sum = 0.0, sum_sq = 0.0;
  for (double x : r) {
    sum += x;
    sum_sq += x * x;
    s.max_abs = std::max(s.max_abs, std::abs(x));
  }
  const double n = static_cast<double>(r.size());
  s.rmse = std::sqrt(sum_sq / n);
  if (r.size() > 1) {
    const double mean = sum / n;
    double var = 0.0;
    for (double x : r) var += (x - mean) * (x - mean);
    s.sd = std::sqrt(var / (n - 1.0));
  }
  return s;
}

double FitResult::param(const std::string& name) const {
  for (std::size_t i = 0; i < param_names.size(); ++i)
    if (param_names[i] == name) return x_star[i];
  fail(ErrorKind::kInvalidArgument, "no fitted parameter named '" + name + "'");
}

std::vector<double> residuals(std::span<const double> model,
                              std::span<const double> data, Transform transform) {
  if (model.size() != data.size())
    fail(ErrorKind::kInvalidArgument, "model and data differ in length");
  std::vector<double> r(model.size());
  for (std::size_t i = 0; i < model.size(); ++i)
    r[i] = transform_value(model[i], transform) - transform_value(data[i], transform);
  return r;
}

double sum_sq(std::span<const double> model, std::span<const double> data,
              Transform transform) {
  double s = 0.0;
  for (double r : residuals(model, data, transform)) s += r * r;
  return s;
}

Objective sum_sq_residuals(ParamModel model, std::vector<Sample> data,
                           Transform transform) {
  std::vector<double> target(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    target[i] = transform_value(data[i].v, transform);
  return [model = std::move(model), data = std::move(data), target = std::move(target),
          transform](std::span<const double> params) {
    double s = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      double y;
      try {
        y = model(params, data[i].t);
      } catch (const ModelDomainError&) {
        return kInf;
      }
      if (!std::isfinite(y) || (transform == Transform::kLog && !(y > 0.0))) return kInf;
      const double r = (transform == Transform::kLog ? std::log(y) : y) - target[i];
      s += r * r;
    }
    return std::isfinite(s) ? s : kInf;
  };
}

namespace {

// Objective in scaled coordinates u = x / scale.
class ScaledObjective {
 public:
  ScaledObjective(const FitProblem& fp, std::vector<double> scale)
      : fp_(fp), scale_(std::move(scale)), x_(scale_.size()) {}

  double operator()(std::span<const double> u) {
    for (std::size_t i = 0; i < u.size(); ++i) x_[i] = u[i] * scale_[i];
    ++evaluations_;
    const double f = fp_.objective(x_);
    return std::isnan(f) ? kInf : f;
  }

  long evaluations() const { return evaluations_; }

 private:
  const FitProblem& fp_;
  std::vector<double> scale_;
  std::vector<double> x_;
  long evaluations_ = 0;
};

struct LinePoint {
  double t;
  double f;
};

// Brent's localmin on [a, b] starting from interior point x with value fx.
LinePoint brent_localmin(const std::function<double(double)>& phi, double a, double b,
                         double x, double fx) {
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double eps = std::sqrt(std::numeric_limits<double>::epsilon());
  constexpr double kAbsTol = 1e-13;
  double w = x, v = x, fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double tol = eps * std::abs(x) + kAbsTol;
    const double t2 = 2.0 * tol;
    if (std::abs(x - m) <= t2 - 0.5 * (b - a)) break;
    double p = 0.0, q = 0.0, r = 0.0;
    if (std::abs(e) > tol) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p; else q = -q;
      r = e;
      e = d;
    }
    if (std::abs(p) < std::abs(0.5 * q * r) && p > q * (a - x) && p < q * (b - x)) {
      d = p / q;
      const double u = x + d;
      if (u - a < t2 || b - u < t2) d = x < m ? tol : -tol;
    } else {
      e = (x < m ? b : a) - x;
      d = golden * e;
    }
    const double u = x + (std::abs(d) >= tol ? d : (d > 0.0 ? tol : -tol));
    const double fu = phi(u);
    if (fu <= fx) {
      (u < x ? b : a) = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      (u < x ? a : b) = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx};
}

// Minimises f(u + t d) over the part of the line inside the box.
LinePoint line_minimize(ScaledObjective& f, const std::vector<double>& u,
                        const std::vector<double>& dir, const std::vector<double>& lo,
                        const std::vector<double>& hi, double f0, double step) {
  double tmin = -kInf, tmax = kInf;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (dir[i] == 0.0) continue;
    double a = (lo[i] - u[i]) / dir[i];
    double b = (hi[i] - u[i]) / dir[i];
    if (a > b) std::swap(a, b);
    tmin = std::max(tmin, a);
    tmax = std::min(tmax, b);
  }
  tmin = std::min(tmin, 0.0);
  tmax = std::max(tmax, 0.0);
  if (tmax - tmin <= 0.0) return {0.0, f0};

  std::vector<double> trial(u.size());
  LinePoint best{0.0, f0};
  auto phi = [&](double t) {
    t = std::clamp(t, tmin, tmax);
    for (std::size_t i = 0; i < u.size(); ++i)
      trial[i] = std::clamp(u[i] + t * dir[i], lo[i], hi[i]);
    const double v = f(trial);
    if (v < best.f) best = {t, v};
    return v;
  };

  constexpr double kGrow = 1.618033988749895;
  double h = step;
  double a = -std::min(h, -tmin), b = std::min(h, tmax);
  double x = 0.0, fx = f0;
  const double fb = b > 0.0 ? phi(b) : kInf;
  if (fb < fx) {
    // Walk forward while decreasing.
    double prev = 0.0, cur = b, fcur = fb;
    for (int i = 0; i < 100; ++i) {
      if (cur >= tmax) {
        a = prev;
        b = tmax;
        x = cur;
        fx = fcur;
        break;
      }
      const double next = std::min(tmax, cur + kGrow * (cur - prev));
      const double fn = phi(next);
      if (fn >= fcur) {
        a = prev;
        b = next;
        x = cur;
        fx = fcur;
        break;
      }
      prev = cur;
      cur = next;
      fcur = fn;
      a = prev;
      b = cur;
      x = cur;
      fx = fcur;
    }
  } else {
    const double fa = a < 0.0 ? phi(a) : kInf;
    if (fa < fx) {
      double prev = 0.0, cur = a, fcur = fa;
      for (int i = 0; i < 100; ++i) {
        if (cur <= tmin) {
          a = tmin;
          b = prev;
          x = cur;
          fx = fcur;
          break;
        }
        const double next = std::max(tmin, cur + kGrow * (cur - prev));
        const double fn = phi(next);
        if (fn >= fcur) {
          a = next;
          b = prev;
          x = cur;
          fx = fcur;
          break;
        }
        prev = cur;
        cur = next;
        fcur = fn;
        a = cur;
        b = prev;
        x = cur;
        fx = fcur;
      }
    }
  }
  if (b > a) brent_localmin(phi, a, b, x, fx);
  return best;
}

}  // namespace

FitResult minimize(const FitProblem& fp) {
  fp.validate();
  const std::size_t n = fp.x0.size();

  std::vector<double> scale(n), u(n), lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    scale[i] = !fp.scale.empty() ? fp.scale[i]
               : fp.x0[i] != 0.0 ? std::abs(fp.x0[i])
                                 : 1.0;
    u[i] = fp.x0[i] / scale[i];
    lo[i] = fp.lower[i] / scale[i];
    hi[i] = fp.upper[i] / scale[i];
  }
  ScaledObjective f(fp, scale);

  std::vector<std::vector<double>> dirs(n, std::vector<double>(n, 0.0));
  std::vector<double> steps(n, 0.1);
  double fx = f(u);
  FitResult result;
  result.param_names = fp.param_names;
  result.f_initial = fx;

  // Principal axes of the local quadratic model: eigenvectors of a
  // central-difference Hessian in scaled coordinates. Falls back to the
  // coordinate axes when the stencil leaves the box or the domain.
  auto reset_dirs = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dirs[i][j] = i == j ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i) steps[i] = 0.1;
    if (n == 1) return;
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = 1e-4 * std::max(1.0, std::abs(u[i]));
      if (u[i] - 2.0 * h[i] < lo[i] || u[i] + 2.0 * h[i] > hi[i]) return;
    }
    std::vector<double> p = u;
    auto at = [&](std::size_t i, double di, std::size_t j, double dj) {
      p = u;
      p[i] += di;
      p[j] += dj;
      return f(p);
    };
    Eigen::MatrixXd hess(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      hess(i, i) = (at(i, h[i], i, h[i]) - 2.0 * fx + at(i, -h[i], i, -h[i])) / (4.0 * h[i] * h[i]);
      for (std::size_t j = 0; j < i; ++j) {
        const double v = (at(i, h[i], j, h[j]) - at(i, h[i], j, -h[j]) -
                          at(i, -h[i], j, h[j]) + at(i, -h[i], j, -h[j])) /
                         (4.0 * h[i] * h[j]);
        hess(i, j) = hess(j, i) = v;
      }
    }
    if (!hess.allFinite()) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
    if (es.info() != Eigen::Success) return;
    Eigen::VectorXd grad(n);
    for (std::size_t j = 0; j < n; ++j)
      grad(j) = (at(j, h[j], j, 0.0) - at(j, -h[j], j, 0.0)) / (2.0 * h[j]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dirs[i][j] = es.eigenvectors()(j, i);
      const double lambda = std::abs(es.eigenvalues()(i));
      // Newton-sized first step along the axis when the curvature is usable.
      if (lambda > 0.0) {
        const double newton = std::abs(es.eigenvectors().col(i).dot(grad)) / lambda;
        if (std::isfinite(newton) && newton > 0.0) steps[i] = std::clamp(newton, 1e-8, 10.0);
      }
    }
  };
  reset_dirs();

  const double x_tol = std::sqrt(fp.tol);
  const std::size_t restart_every = n * (n + 1);
  std::size_t searches_since_reset = 0;
  bool fresh_axes = true;
  int iter = 0;
  bool converged = false;

  auto search = [&](std::vector<double>& dir, double& step) {
    const LinePoint lp = line_minimize(f, u, dir, lo, hi, fx, step);
    if (lp.f < fx) {
      for (std::size_t i = 0; i < n; ++i)
        u[i] = std::clamp(u[i] + lp.t * dir[i], lo[i], hi[i]);
      fx = lp.f;
    }
    step = std::clamp(2.0 * std::abs(lp.t), 1e-8, 10.0);
    ++searches_since_reset;
  };

  while (iter < fp.max_iter) {
    ++iter;
    const std::vector<double> u_start = u;
    const double f_start = fx;
    const bool swept_fresh = fresh_axes;
    fresh_axes = false;
    double biggest_drop = 0.0;
    std::size_t big_index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double before = fx;
      search(dirs[i], steps[i]);
      if (before - fx > biggest_drop) {
        biggest_drop = before - fx;
        big_index = i;
      }
    }

    double disp = 0.0, size = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      disp = std::max(disp, std::abs(u[i] - u_start[i]));
      size = std::max(size, std::abs(u[i]));
    }
    const bool f_small =
        2.0 * (f_start - fx) <= fp.tol * (std::abs(f_start) + std::abs(fx)) + 1e-300;
    if (f_small && disp <= x_tol * (1.0 + size)) {
      // A stall along stale directions can be a narrow valley; only a quiet
      // sweep along freshly computed principal axes counts.
      if (swept_fresh || n == 1) {
        converged = true;
        break;
      }
      reset_dirs();
      searches_since_reset = 0;
      fresh_axes = true;
      continue;
    }

    // Extrapolated point along the average direction of this sweep.
    std::vector<double> new_dir(n), extrap(n);
    bool feasible = true;
    for (std::size_t i = 0; i < n; ++i) {
      new_dir[i] = u[i] - u_start[i];
      extrap[i] = 2.0 * u[i] - u_start[i];
      if (extrap[i] < lo[i] || extrap[i] > hi[i]) feasible = false;
    }
    if (feasible && n > 1) {
      const double fe = f(extrap);
      if (fe < f_start) {
        const double a = f_start - fx - biggest_drop;
        const double t = 2.0 * (f_start - 2.0 * fx + fe) * a * a -
                         biggest_drop * (f_start - fe) * (f_start - fe);
        if (t < 0.0) {
          double step = 1.0;
          search(new_dir, step);
          dirs[big_index] = dirs[n - 1];
          dirs[n - 1] = new_dir;
          steps[big_index] = steps[n - 1];
          steps[n - 1] = step;
        }
      }
    }
    if (searches_since_reset >= restart_every) {
      reset_dirs();
      searches_since_reset = 0;
      fresh_axes = true;
    }
  }

  result.x_star.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.x_star[i] = u[i] * scale[i];
  result.f_star = fx;
  result.iterations = iter;
  result.evaluations = f.evaluations();
  result.converged = converged;
  return result;
}

}  // namespace infoeq::fit
