#include "invnet/simplex.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace invnet {
namespace {
constexpr double kEps = 1e-9;
}

Solution solve_reference(const Model& model) {
  Solution sol;
  if (model.has_integrality()) {
    sol.status = SolveStatus::Error;
    sol.message = "reference solver handles LPs only";
    return sol;
  }

  const int nv = model.num_vars();
  // Column layout over nonnegative standard variables:
  //   finite lo:  x = lo + z            (extra row z <= hi-lo when hi finite)
  //   only hi:    x = hi - z
  //   free:       x = z+ - z-
  std::vector<int> col_plus(nv), col_minus(nv, -1);
  std::vector<double> shift(nv, 0.0);
  int ncols = 0;
  struct RawRow {
    LinExpr expr;
    double lo, hi;
  };
  std::vector<RawRow> raw;
  for (const Model::Row& r : model.rows()) raw.push_back({r.expr, r.lo, r.hi});
  for (int j = 0; j < nv; ++j) {
    const auto& v = model.vars()[j];
    if (v.lo > -kInf) {
      shift[j] = v.lo;
      col_plus[j] = ncols++;
      if (v.hi < kInf) raw.push_back({LinExpr::variable(j), -kInf, v.hi});
    } else if (v.hi < kInf) {
      shift[j] = v.hi;
      col_plus[j] = ncols++;
      col_minus[j] = -2;  // mirrored single column
    } else {
      col_plus[j] = ncols++;
      col_minus[j] = ncols++;
    }
  }

  struct NormRow {
    std::vector<std::pair<int, double>> cols;
    double rhs;
    bool equality;
  };
  std::vector<NormRow> norm;
  auto expand = [&](const LinExpr& e, double scale, double rhs, bool equality) {
    NormRow nr;
    nr.rhs = rhs;
    nr.equality = equality;
    for (const LinExpr::Term& t : e.terms()) {
      const double a = scale * t.coeff;
      if (a == 0.0) continue;
      const int j = t.var;
      nr.rhs -= a * shift[j];
      if (col_minus[j] == -2)
        nr.cols.push_back({col_plus[j], -a});
      else {
        nr.cols.push_back({col_plus[j], a});
        if (col_minus[j] >= 0) nr.cols.push_back({col_minus[j], -a});
      }
    }
    norm.push_back(std::move(nr));
  };
  for (const RawRow& r : raw) {
    if (r.lo == r.hi)
      expand(r.expr, 1.0, r.lo, true);
    else {
      if (r.hi < kInf) expand(r.expr, 1.0, r.hi, false);
      if (r.lo > -kInf) expand(r.expr, -1.0, -r.lo, false);
    }
  }

  int nslack = 0;
  for (const NormRow& nr : norm)
    if (!nr.equality) ++nslack;
  const int m = static_cast<int>(norm.size());
  const int n_total = ncols + nslack;
  const int n_all = n_total + m;  // + artificials

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, n_all);
  Eigen::VectorXd b(m);
  int slack_at = ncols;
  for (int i = 0; i < m; ++i) {
    for (auto [j, a] : norm[i].cols) T(i, j) += a;
    b(i) = norm[i].rhs;
    if (!norm[i].equality) T(i, slack_at++) = 1.0;
  }
  for (int i = 0; i < m; ++i)
    if (b(i) < 0) {
      T.row(i).head(n_total) *= -1;
      b(i) *= -1;
    }
  for (int i = 0; i < m; ++i) T(i, n_total + i) = 1.0;

  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_all);
  const double sgn = model.maximize() ? -1.0 : 1.0;
  for (const LinExpr::Term& t : model.objective().terms()) {
    const int j = t.var;
    const double a = sgn * t.coeff;
    if (col_minus[j] == -2)
      c(col_plus[j]) += -a;
    else {
      c(col_plus[j]) += a;
      if (col_minus[j] >= 0) c(col_minus[j]) += -a;
    }
  }

  Eigen::VectorXd xb = b;
  std::vector<int> basis(m);
  std::vector<char> in_basis(n_all, 0);
  for (int i = 0; i < m; ++i) {
    basis[i] = n_total + i;
    in_basis[n_total + i] = 1;
  }

  // Bland's rule; dense basis solve per iteration (oracle scale only).
  auto run = [&](const Eigen::VectorXd& cost, int price_cols) -> int {
    for (long iter = 0; iter < 100000; ++iter) {
      Eigen::MatrixXd Bmat(m, m);
      for (int i = 0; i < m; ++i) Bmat.col(i) = T.col(basis[i]);
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(Bmat);
      Eigen::VectorXd cb(m);
      for (int i = 0; i < m; ++i) cb(i) = cost(basis[i]);
      Eigen::VectorXd y = lu.transpose().solve(cb);
      int enter = -1;
      for (int j = 0; j < price_cols; ++j) {
        if (in_basis[j]) continue;
        if (cost(j) - y.dot(T.col(j)) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return 0;
      Eigen::VectorXd d = lu.solve(T.col(enter));
      int leave = -1;
      double best = kInf;
      for (int i = 0; i < m; ++i)
        if (d(i) > kEps) {
          const double ratio = xb(i) / d(i);
          if (ratio < best - kEps ||
              (ratio <= best + kEps && (leave < 0 || basis[i] < basis[leave]))) {
            best = std::min(best, ratio);
            leave = i;
          }
        }
      if (leave < 0) return 1;  // unbounded
      xb -= best * d;
      in_basis[basis[leave]] = 0;
      in_basis[enter] = 1;
      basis[leave] = enter;
      xb(leave) = best;
      for (int i = 0; i < m; ++i)
        if (xb(i) < 0 && xb(i) > -1e-7) xb(i) = 0;
    }
    return 2;
  };

  Eigen::VectorXd c1 = Eigen::VectorXd::Zero(n_all);
  for (int i = 0; i < m; ++i) c1(n_total + i) = 1.0;
  const int rc1 = run(c1, n_all);
  if (rc1 == 2) {
    sol.status = SolveStatus::Error;
    sol.message = "reference simplex iteration limit (phase 1)";
    return sol;
  }
  double phase1 = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n_total) phase1 += xb(i);
  if (phase1 > 1e-7) {
    sol.status = SolveStatus::Infeasible;
    return sol;
  }

  const int rc2 = run(c, n_total);  // artificials priced out, kept at zero
  if (rc2 == 1) {
    sol.status = SolveStatus::Unbounded;
    return sol;
  }
  if (rc2 == 2) {
    sol.status = SolveStatus::Error;
    sol.message = "reference simplex iteration limit (phase 2)";
    return sol;
  }

  Eigen::VectorXd z = Eigen::VectorXd::Zero(n_all);
  for (int i = 0; i < m; ++i) z(basis[i]) = xb(i);
  sol.values.assign(nv, 0.0);
  for (int j = 0; j < nv; ++j) {
    if (col_minus[j] == -2)
      sol.values[j] = shift[j] - z(col_plus[j]);
    else if (col_minus[j] >= 0)
      sol.values[j] = z(col_plus[j]) - z(col_minus[j]);
    else
      sol.values[j] = shift[j] + z(col_plus[j]);
  }
  sol.objective = model.objective().value(sol.values);
  sol.max_violation = model.max_violation(sol.values);
  sol.status = SolveStatus::Optimal;
  return sol;
}

}  // namespace invnet
