// Multistart minimization of <x, W x> over alpha-admissible unit vectors.
//
// A candidate is x = sum_{j<r} s_j u_j ⊗ v_j with orthonormal frames
// U (n×r), V (m×r) and real weights s >= 0, |s| = 1. The ratio constraint is
// imposed on the last slot only: s_{r-1} <= (theta/k) sum_{j<r-1} s_j. Any
// such x is admissible (the smallest weight is at most s_{r-1} and the top-k
// sum is at least the sum of the other slots), and every admissible x has
// this form, so no ordering constraint is needed on s.
//
// Each iteration solves for s exactly with the frames fixed, then takes one
// Armijo-damped Riemannian gradient step on the frames with s fixed, using a
// QR retraction back onto the Stiefel manifolds.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "fracpos/cones.hpp"
#include "fracpos/errors.hpp"
#include "fracpos/random.hpp"

namespace fracpos {

namespace {

constexpr double kFaceFeasTol = 1e-12;

/// Exact minimizer of s^T M s over the polyhedral cone
/// { s >= 0, s_{r-1} <= c sum_{j<r-1} s_j } intersected with the unit sphere.
///
/// A minimizer lies in the relative interior of some face of the cone and is
/// then a bottom eigenvector of M compressed to that face's span. Faces are
/// enumerated as subsets of active constraints; their orthonormal bases do
/// not depend on M and are computed once.
class WeightSolver {
 public:
  WeightSolver(int r, std::optional<double> ratio_bound) : r_(r), c_(ratio_bound) {
    const int rows = r + (c_ ? 1 : 0);
    Eigen::MatrixXd cons = Eigen::MatrixXd::Zero(rows, r);
    for (int j = 0; j < r; ++j) cons(j, j) = 1.0;
    if (c_) {
      cons.row(r).setConstant(*c_);
      cons(r, r - 1) = -1.0;
    }
    constraints_ = cons;
    const std::uint32_t subsets = 1u << rows;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      Eigen::MatrixXd active(0, r);
      for (int i = 0; i < rows; ++i) {
        if (mask & (1u << i)) {
          active.conservativeResize(active.rows() + 1, Eigen::NoChange);
          active.row(active.rows() - 1) = cons.row(i);
        }
      }
      Eigen::MatrixXd basis;
      if (active.rows() == 0) {
        basis = Eigen::MatrixXd::Identity(r, r);
      } else {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(active, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const int rank = static_cast<int>((sv.array() > 1e-12).count());
        if (rank >= r) continue;
        basis = svd.matrixV().rightCols(r - rank);
      }
      faces_.push_back(std::move(basis));
    }
  }

  bool feasible(const RealVector& s) const {
    return (constraints_ * s).minCoeff() >= -kFaceFeasTol;
  }

  /// Projects a nearly feasible s onto the constraint set and renormalizes.
  RealVector clean(RealVector s) const {
    s = s.cwiseMax(0.0);
    if (c_ && r_ > 1) {
      const double cap = *c_ * s.head(r_ - 1).sum();
      if (s(r_ - 1) > cap) s(r_ - 1) = cap;
    }
    const double nrm = s.norm();
    if (nrm > 0.0) s /= nrm;
    return s;
  }

  /// Best of the enumerated face candidates and the incumbent.
  RealVector solve(const Eigen::MatrixXd& m, const RealVector& incumbent) const {
    RealVector best = incumbent;
    double best_val = incumbent.dot(m * incumbent);
    for (const auto& basis : faces_) {
      const Eigen::MatrixXd compressed = basis.transpose() * m * basis;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(compressed);
      for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        if (eig.eigenvalues()(i) >= best_val) break;
        RealVector x = basis * eig.eigenvectors().col(i);
        const double nrm = x.norm();
        if (nrm == 0.0) continue;
        x /= nrm;
        for (int sign = 0; sign < 2; ++sign) {
          if (feasible(x)) {
            const RealVector cand = clean(x);
            const double val = cand.dot(m * cand);
            if (val < best_val) {
              best_val = val;
              best = cand;
            }
          }
          x = -x;
        }
      }
    }
    return best;
  }

 private:
  int r_;
  std::optional<double> c_;
  Eigen::MatrixXd constraints_;
  std::vector<Eigen::MatrixXd> faces_;
};

struct Frames {
  ComplexMatrix u;  // n × r
  ComplexMatrix v;  // m × r
  RealVector s;     // r
};

struct StartResult {
  bool accepted = false;
  double value = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  ComplexVector psi;
};

class LambdaProblem {
 public:
  LambdaProblem(const HermitianOperator& w, const FractionalLevel& level, const OptimizerConfig& cfg)
      : w_(w),
        level_(level),
        cfg_(cfg),
        r_(level.r()),
        solver_(level.r(), level.is_integer() ? std::nullopt
                                              : std::optional<double>(level.ratio_bound())) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(w.mat);
    bottom_ = BipartiteVector(w.dims, eig.eigenvectors().col(0));
  }

  int regular_starts() const { return cfg_.starts; }
  int total_starts() const { return cfg_.starts + static_cast<int>(cfg_.warm_starts.size()); }

  StartResult run_start(int index) const {
    Frames f = initial_frames(index);
    optimize(f);
    return finish(f);
  }

 private:
  ComplexVector assemble(const Frames& f) const {
    const int n = w_.dims.n;
    const int m = w_.dims.m;
    ComplexMatrix psi_mat = f.u * f.s.cast<Complex>().asDiagonal() * f.v.transpose();
    ComplexVector psi(n * m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) psi(i * m + j) = psi_mat(i, j);
    }
    return psi;
  }

  double value(const Frames& f) const {
    const ComplexVector psi = assemble(f);
    return psi.dot(w_.mat * psi).real();
  }

  Eigen::MatrixXd weight_form(const Frames& f) const {
    const int n = w_.dims.n;
    const int m = w_.dims.m;
    ComplexMatrix b(n * m, r_);
    for (int j = 0; j < r_; ++j) {
      for (int i = 0; i < n; ++i) {
        for (int l = 0; l < m; ++l) b(i * m + l, j) = f.u(i, j) * f.v(l, j);
      }
    }
    const ComplexMatrix g = b.adjoint() * w_.mat * b;
    return 0.5 * (g + g.adjoint()).real();
  }

  Frames frames_from_vector(const BipartiteVector& x, bool extremal_weights_on_top) const {
    const SchmidtDecomposition sd = schmidt_decompose(x);
    Frames f;
    f.u = orthonormalize(sd.left.leftCols(r_));
    f.v = orthonormalize(sd.right.leftCols(r_));
    if (extremal_weights_on_top) {
      const auto w = extremal_weights(level_);
      f.s = Eigen::Map<const RealVector>(w.data(), static_cast<Eigen::Index>(w.size()));
    } else {
      f.s = Eigen::Map<const RealVector>(sd.spectrum.values.data(), r_);
      f.s = solver_.clean(f.s);
    }
    return f;
  }

  Frames initial_frames(int index) const {
    if (index >= cfg_.starts) {
      return frames_from_vector(cfg_.warm_starts[index - cfg_.starts], false);
    }
    if (index == 0) return frames_from_vector(bottom_, true);
    if (index == 1 && bottom_admissible()) return frames_from_vector(bottom_, false);
    Rng rng(cfg_.seed + static_cast<std::uint64_t>(index));
    Frames f;
    f.u = random_stiefel(w_.dims.n, r_, rng);
    f.v = random_stiefel(w_.dims.m, r_, rng);
    const auto w = extremal_weights(level_);
    f.s = Eigen::Map<const RealVector>(w.data(), static_cast<Eigen::Index>(w.size()));
    return f;
  }

  bool bottom_admissible() const {
    return check_spectrum(schmidt_spectrum(bottom_), level_).admissible;
  }

  void optimize(Frames& f) const {
    const int n = w_.dims.n;
    const int m = w_.dims.m;
    double step = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < cfg_.max_iters; ++iter) {
      f.s = solver_.solve(weight_form(f), f.s);
      const ComplexVector psi = assemble(f);
      const ComplexVector wpsi = w_.mat * psi;
      const double val = psi.dot(wpsi).real();

      ComplexMatrix g(n, m);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) g(i, j) = wpsi(i * m + j);
      }
      const ComplexMatrix sdiag = f.s.cast<Complex>().asDiagonal();
      const ComplexMatrix zu = 2.0 * g * f.v.conjugate() * sdiag;
      const ComplexMatrix zv = 2.0 * g.transpose() * f.u.conjugate() * sdiag;
      const ComplexMatrix gu = zu - f.u * hermitian_part(f.u.adjoint() * zu);
      const ComplexMatrix gv = zv - f.v * hermitian_part(f.v.adjoint() * zv);
      const double gnorm2 = gu.squaredNorm() + gv.squaredNorm();
      if (gnorm2 < 1e-28) break;

      bool moved = false;
      step = std::min(step * 2.0, 1e3);
      for (int ls = 0; ls < 60; ++ls) {
        Frames trial{orthonormalize(f.u - step * gu), orthonormalize(f.v - step * gv), f.s};
        const double tv = value(trial);
        if (tv <= val - 1e-4 * step * gnorm2) {
          f.u = std::move(trial.u);
          f.v = std::move(trial.v);
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
      const double now = value(f);
      if (std::abs(prev - now) <= cfg_.tol * std::max(1.0, std::abs(now)) &&
          std::abs(val - now) <= cfg_.tol * std::max(1.0, std::abs(now))) {
        break;
      }
      prev = now;
    }
    f.s = solver_.solve(weight_form(f), f.s);
  }

  StartResult finish(const Frames& f) const {
    StartResult out;
    out.psi = assemble(f);
    const BipartiteVector psi(w_.dims, out.psi);
    const double nrm = psi.norm();
    if (nrm == 0.0) return out;
    const SchmidtSpectrum s = schmidt_spectrum(psi);
    double tail = 0.0;
    for (int j = level_.r(); j < s.size(); ++j) tail += s[j];
    double ratio_violation = 0.0;
    if (!level_.is_integer() && level_.k() < s.size()) {
      ratio_violation = std::max(0.0, s[level_.k()] - level_.ratio_bound() * s.head_sum(level_.k()));
    }
    out.residual = std::max({ratio_violation, std::abs(nrm - 1.0), tail});
    out.value = quadratic_form(w_.mat, psi);
    out.accepted = out.residual <= kMaxResidual && std::isfinite(out.value);
    return out;
  }

  const HermitianOperator& w_;
  const FractionalLevel& level_;
  const OptimizerConfig& cfg_;
  int r_;
  WeightSolver solver_;
  BipartiteVector bottom_;
};

}  // namespace

LambdaEstimate lambda_numeric(const HermitianOperator& w, const FractionalLevel& level,
                              const OptimizerConfig& cfg) {
  if (cfg.starts < 1) throw DomainError("optimizer needs at least one start");
  if (cfg.max_iters < 0) throw DomainError("max_iters must be nonnegative");
  if (w.mat.rows() != w.dims.total() || w.mat.cols() != w.dims.total()) {
    throw ShapeError("operator shape does not match its bipartite dims");
  }
  if (w.dims.d() != level.d()) {
    throw ShapeError("level was built for d = " + std::to_string(level.d()) +
                     ", operator has min(n,m) = " + std::to_string(w.dims.d()));
  }
  const double scale = std::max(1.0, w.mat.cwiseAbs().maxCoeff());
  if (hermitian_deviation(w.mat) > 1e-10 * scale) throw DomainError("operator is not Hermitian");
  for (const auto& x : cfg.warm_starts) {
    if (!(x.dims() == w.dims)) throw ShapeError("warm start has the wrong dimensions");
  }

  const HermitianOperator herm{w.dims, hermitian_part(w.mat)};
  const LambdaProblem problem(herm, level, cfg);
  const int total = problem.total_starts();
  std::vector<StartResult> results(total);

  const int threads = std::clamp(cfg.threads, 1, total);
  if (threads == 1) {
    for (int i = 0; i < total; ++i) results[i] = problem.run_start(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int i = next++; i < total; i = next++) results[i] = problem.run_start(i);
      });
    }
  }

  int best = -1;
  int used = 0;
  for (int i = 0; i < total; ++i) {
    if (!results[i].accepted) continue;
    ++used;
    if (best < 0 || results[i].value < results[best].value - 1e-15) best = i;
  }
  if (best < 0) throw VerificationError("no start produced a feasible point");
  return {results[best].value, BipartiteVector(w.dims, results[best].psi), level,
          results[best].residual, used, best};
}

LambdaEstimate mu_numeric(const HermitianOperator& w, const FractionalLevel& level,
                          const OptimizerConfig& cfg) {
  LambdaEstimate est = lambda_numeric({w.dims, -w.mat}, level, cfg);
  est.value = -est.value;
  return est;
}

}  // namespace fracpos
