#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "opaque/barrier_io.hpp"
#include "opaque/error.hpp"
#include "opaque/lp.hpp"

namespace opaque {

namespace {

constexpr double kTol = 1e-9;
constexpr int kRefactorEvery = 50;
constexpr std::size_t kMaxIterations = 5'000'000;

// Revised simplex on  max 1^T y  s.t.  M^T y + t = c,  y, t >= 0.
// Variables 0..R-1 are the line duals y, R..R+n-1 the slacks t; the
// constraint rows are the n segments. The slack basis is feasible since
// every cost is positive, so no phase 1 is needed.
class PackingSimplex {
 public:
  explicit PackingSimplex(const LpInstance& inst)
      : inst_(inst), rows_(inst.cols()), lines_(inst.rows()), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = lines_ + i;
    binv_ = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(rows_));
    cost_ = Eigen::Map<const Eigen::VectorXd>(inst.family.costs.data(), static_cast<Eigen::Index>(rows_));
    xb_ = cost_;
    pi_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_));
  }

  LpSolution run() {
    std::size_t iterations = 0;
    int since_refactor = 0;
    while (true) {
      if (++iterations > kMaxIterations) throw std::runtime_error("simplex: iteration limit reached");
      const auto entering = price();
      if (!entering) break;
      const auto [q, reduced] = *entering;
      const Eigen::VectorXd u = column(q);
      const auto leaving = ratio_test(u);
      if (!leaving) throw std::runtime_error("simplex: packing program is unbounded");
      pivot(*leaving, q, u, reduced);
      if (++since_refactor >= kRefactorEvery) {
        refactor();
        since_refactor = 0;
      }
    }
    refactor();

    LpSolution sol;
    sol.iterations = iterations - 1;
    sol.y.assign(lines_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < lines_) sol.y[basis_[i]] = std::max(0.0, xb_[static_cast<Eigen::Index>(i)]);
    }
    sol.x.resize(rows_);
    for (std::size_t s = 0; s < rows_; ++s) {
      sol.x[s] = std::max(0.0, pi_[static_cast<Eigen::Index>(s)]);
      sol.value += inst_.family.costs[s] * sol.x[s];
    }
    for (double v : sol.y) sol.dual_value += v;
    return sol;
  }

 private:
  // Bland: the lowest-indexed variable with positive reduced cost.
  std::optional<std::pair<std::size_t, double>> price() const {
    for (std::size_t r = 0; r < lines_; ++r) {
      double load = 0.0;
      for (std::size_t c : inst_.incidence[r]) load += pi_[static_cast<Eigen::Index>(c)];
      if (1.0 - load > kTol) return std::make_pair(r, 1.0 - load);
    }
    for (std::size_t s = 0; s < rows_; ++s) {
      if (-pi_[static_cast<Eigen::Index>(s)] > kTol) return std::make_pair(lines_ + s, -pi_[static_cast<Eigen::Index>(s)]);
    }
    return std::nullopt;
  }

  Eigen::VectorXd column(std::size_t q) const {
    if (q >= lines_) return binv_.col(static_cast<Eigen::Index>(q - lines_));
    Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_));
    for (std::size_t c : inst_.incidence[q]) u += binv_.col(static_cast<Eigen::Index>(c));
    return u;
  }

  // Minimum ratio; ties go to the lowest-indexed basic variable.
  std::optional<std::size_t> ratio_test(const Eigen::VectorXd& u) const {
    std::optional<std::size_t> best;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows_; ++i) {
      const double ui = u[static_cast<Eigen::Index>(i)];
      if (ui <= kTol) continue;
      const double ratio = std::max(0.0, xb_[static_cast<Eigen::Index>(i)]) / ui;
      const double slack = 1e-12 * (1.0 + std::abs(best_ratio));
      if (!best || ratio < best_ratio - slack ||
          (ratio <= best_ratio + slack && basis_[i] < basis_[*best])) {
        if (!best || ratio < best_ratio - slack) best_ratio = ratio;
        best = i;
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t q, const Eigen::VectorXd& u, double reduced) {
    const auto ri = static_cast<Eigen::Index>(r);
    const double ur = u[ri];
    binv_.row(ri) /= ur;
    xb_[ri] /= ur;
    for (Eigen::Index i = 0; i < binv_.rows(); ++i) {
      if (i == ri || u[i] == 0.0) continue;
      binv_.row(i) -= u[i] * binv_.row(ri);
      xb_[i] -= u[i] * xb_[ri];
    }
    pi_ += reduced * binv_.row(ri).transpose();
    basis_[r] = q;
  }

  void refactor() {
    const auto n = static_cast<Eigen::Index>(rows_);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd cb = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::size_t v = basis_[static_cast<std::size_t>(i)];
      if (v >= lines_) {
        b(static_cast<Eigen::Index>(v - lines_), i) = 1.0;
      } else {
        for (std::size_t c : inst_.incidence[v]) b(static_cast<Eigen::Index>(c), i) = 1.0;
        cb[i] = 1.0;
      }
    }
    binv_ = b.partialPivLu().inverse();
    xb_ = binv_ * cost_;
    pi_ = binv_.transpose() * cb;
  }

  const LpInstance& inst_;
  std::size_t rows_;
  std::size_t lines_;
  std::vector<std::size_t> basis_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd cost_;
  Eigen::VectorXd xb_;
  Eigen::VectorXd pi_;
};

}  // namespace

LpSolution solve_lp(const LpInstance& inst) {
  if (inst.rows() == 0 || inst.cols() == 0) throw DomainError("solve_lp: empty instance");
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    if (inst.incidence[r].empty()) {
      const Line& l = inst.lines.lines[r];
      throw DomainError("infeasible: line " + std::to_string(r) + " (normal " +
                        format_real(l.normal.radians()) + ", offset " + format_real(l.offset) +
                        ") meets no segment");
    }
  }
  for (double c : inst.family.costs) {
    if (!(c > 0.0)) throw DomainError("solve_lp: costs must be positive");
  }
  return PackingSimplex(inst).run();
}

}  // namespace opaque
