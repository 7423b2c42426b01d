#ifndef INVNET_MODEL_HPP
#define INVNET_MODEL_HPP

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace invnet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Sparse affine expression over model variables: sum coeff_i * x_i + constant.
class LinExpr {
 public:
  struct Term {
    int var;
    double coeff;
  };

  LinExpr() = default;
  LinExpr(double constant) : constant_(constant) {}
  static LinExpr variable(int var, double coeff = 1.0) {
    LinExpr e;
    e.terms_.push_back({var, coeff});
    return e;
  }

  LinExpr& operator+=(const LinExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    constant_ += o.constant_;
    return *this;
  }
  LinExpr& operator-=(const LinExpr& o) {
    for (const Term& t : o.terms_) terms_.push_back({t.var, -t.coeff});
    constant_ -= o.constant_;
    return *this;
  }
  LinExpr& operator*=(double s) {
    for (Term& t : terms_) t.coeff *= s;
    constant_ *= s;
    return *this;
  }
  void add_term(int var, double coeff) {
    if (coeff != 0.0) terms_.push_back({var, coeff});
  }

  // Merges duplicate variables and drops negligible coefficients.
  void compact(double drop_tol = 0.0) {
    if (terms_.empty()) return;
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      if (!out.empty() && out.back().var == t.var)
        out.back().coeff += t.coeff;
      else
        out.push_back(t);
    }
    if (drop_tol > 0.0)
      std::erase_if(out, [&](const Term& t) { return std::abs(t.coeff) <= drop_tol; });
    terms_ = std::move(out);
  }

  const std::vector<Term>& terms() const { return terms_; }
  double constant() const { return constant_; }
  bool is_constant() const { return terms_.empty(); }

  double value(const std::vector<double>& x) const {
    double v = constant_;
    for (const Term& t : terms_) v += t.coeff * x[t.var];
    return v;
  }

 private:
  std::vector<Term> terms_;
  double constant_ = 0.0;
};

inline LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
inline LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
inline LinExpr operator*(double s, LinExpr e) { return e *= s; }
inline LinExpr operator*(LinExpr e, double s) { return e *= s; }
inline LinExpr operator-(LinExpr e) { return e *= -1.0; }

/// Dense matrix whose entries are affine expressions in model variables.
/// Used for parameter matrices and their compositions with constant matrices.
class AffineMatrix {
 public:
  AffineMatrix() : rows_(0), cols_(0) {}
  AffineMatrix(int rows, int cols) : rows_(rows), cols_(cols), at_(rows * cols) {}

  static AffineMatrix constant(const Eigen::MatrixXd& c) {
    AffineMatrix m(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
    for (int r = 0; r < m.rows_; ++r)
      for (int j = 0; j < m.cols_; ++j) m(r, j) = LinExpr(c(r, j));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LinExpr& operator()(int r, int c) { return at_[r * cols_ + c]; }
  const LinExpr& operator()(int r, int c) const { return at_[r * cols_ + c]; }

  /// c * this, with constant matrix c.
  AffineMatrix left_mul(const Eigen::MatrixXd& c) const {
    if (c.cols() != rows_)
      throw std::invalid_argument("AffineMatrix::left_mul: dimension mismatch");
    AffineMatrix out(static_cast<int>(c.rows()), cols_);
    for (int r = 0; r < out.rows_; ++r)
      for (int j = 0; j < cols_; ++j) {
        LinExpr acc;
        for (int p = 0; p < rows_; ++p)
          if (c(r, p) != 0.0) acc += c(r, p) * (*this)(p, j);
        acc.compact();
        out(r, j) = std::move(acc);
      }
    return out;
  }

  /// this * c, with constant matrix c.
  AffineMatrix right_mul(const Eigen::MatrixXd& c) const {
    if (cols_ != c.rows())
      throw std::invalid_argument("AffineMatrix::right_mul: dimension mismatch");
    AffineMatrix out(rows_, static_cast<int>(c.cols()));
    for (int r = 0; r < rows_; ++r)
      for (int j = 0; j < c.cols(); ++j) {
        LinExpr acc;
        for (int p = 0; p < cols_; ++p)
          if (c(p, j) != 0.0) acc += (*this)(r, p) * c(p, j);
        acc.compact();
        out(r, j) = std::move(acc);
      }
    return out;
  }

  AffineMatrix operator+(const AffineMatrix& o) const {
    require_same_shape(o, "operator+");
    AffineMatrix out(rows_, cols_);
    for (size_t i = 0; i < at_.size(); ++i) out.at_[i] = at_[i] + o.at_[i];
    return out;
  }
  AffineMatrix operator-(const AffineMatrix& o) const {
    require_same_shape(o, "operator-");
    AffineMatrix out(rows_, cols_);
    for (size_t i = 0; i < at_.size(); ++i) out.at_[i] = at_[i] - o.at_[i];
    return out;
  }

  Eigen::MatrixXd value(const std::vector<double>& x) const {
    Eigen::MatrixXd v(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) v(r, c) = (*this)(r, c).value(x);
    return v;
  }

 private:
  void require_same_shape(const AffineMatrix& o, const char* what) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw std::invalid_argument(std::string("AffineMatrix::") + what + ": shape mismatch");
  }
  int rows_, cols_;
  std::vector<LinExpr> at_;
};

enum class VarType { Continuous, Binary };
enum class Sense { LessEqual, Equal, GreaterEqual };

/// Backend-neutral LP/MILP model. Variables and constraints keep registration
/// order; names are optional but must be unique when given.
class Model {
 public:
  struct Var {
    std::string name;
    VarType type;
    double lo, hi;
  };
  struct Row {
    LinExpr expr;  // compacted; constant folded into bounds
    double lo, hi;
    std::string name;
  };

  int add_var(const std::string& name, double lo = -kInf, double hi = kInf,
              VarType type = VarType::Continuous) {
    if (lo > hi) throw std::invalid_argument("Model::add_var: lo > hi for " + name);
    int idx = static_cast<int>(vars_.size());
    vars_.push_back({name, type, lo, hi});
    if (!name.empty()) {
      auto [it, fresh] = by_name_.emplace(name, idx);
      if (!fresh) throw std::invalid_argument("Model::add_var: duplicate name " + name);
    }
    return idx;
  }
  int add_binary(const std::string& name) { return add_var(name, 0.0, 1.0, VarType::Binary); }

  LinExpr x(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(vars_.size()))
      throw std::out_of_range("Model::x: bad variable index");
    return LinExpr::variable(idx);
  }

  /// Matrix of fresh continuous variables.
  AffineMatrix add_var_matrix(const std::string& prefix, int rows, int cols,
                              double lo = -kInf, double hi = kInf) {
    AffineMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m(r, c) = x(add_var(prefix + "_" + std::to_string(r) + "_" + std::to_string(c), lo, hi));
    return m;
  }

  void add_constraint(LinExpr e, Sense sense, double rhs, const std::string& name = "") {
    e.compact();
    double b = rhs - e.constant();
    LinExpr lhs = e - LinExpr(e.constant());
    switch (sense) {
      case Sense::LessEqual: rows_.push_back({std::move(lhs), -kInf, b, name}); break;
      case Sense::Equal: rows_.push_back({std::move(lhs), b, b, name}); break;
      case Sense::GreaterEqual: rows_.push_back({std::move(lhs), b, kInf, name}); break;
    }
  }
  void add_range(LinExpr e, double lo, double hi, const std::string& name = "") {
    e.compact();
    rows_.push_back({e - LinExpr(e.constant()), lo - e.constant(), hi - e.constant(), name});
  }

  void set_objective(LinExpr e, bool maximize) {
    e.compact();
    objective_ = std::move(e);
    maximize_ = maximize;
  }

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  const LinExpr& objective() const { return objective_; }
  bool maximize() const { return maximize_; }
  bool has_integrality() const {
    for (const Var& v : vars_)
      if (v.type == VarType::Binary) return true;
    return false;
  }
  int index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::out_of_range("Model: no variable named " + name);
    return it->second;
  }

  /// Largest bound/row violation of an assignment (for residual reporting).
  double max_violation(const std::vector<double>& x) const {
    double v = 0.0;
    for (int i = 0; i < num_vars(); ++i) {
      v = std::max(v, vars_[i].lo - x[i]);
      v = std::max(v, x[i] - vars_[i].hi);
    }
    for (const Row& r : rows_) {
      double a = r.expr.value(x);
      if (r.lo > -kInf) v = std::max(v, r.lo - a);
      if (r.hi < kInf) v = std::max(v, a - r.hi);
    }
    return v;
  }

 private:
  std::vector<Var> vars_;
  std::vector<Row> rows_;
  std::unordered_map<std::string, int> by_name_;
  LinExpr objective_;
  bool maximize_ = false;
};

enum class SolveStatus {
  Optimal,
  Infeasible,
  Unbounded,
  TimeLimitIncumbent,
  TimeLimitNoIncumbent,
  Error,
};

const char* to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::Error;
  std::vector<double> values;  // present iff Optimal or TimeLimitIncumbent
  double objective = std::numeric_limits<double>::quiet_NaN();
  double gap = 0.0;  // MILP relative gap at termination
  std::vector<std::pair<double, double>> incumbents;  // (seconds, objective)
  double max_violation = 0.0;
  double solve_seconds = 0.0;
  std::string message;

  bool has_values() const {
    return status == SolveStatus::Optimal || status == SolveStatus::TimeLimitIncumbent;
  }
  double value(int var) const { return values.at(var); }
  double value(const LinExpr& e) const { return e.value(values); }
  Eigen::MatrixXd value(const AffineMatrix& m) const { return m.value(values); }
};

struct SolveOptions {
  double time_limit_sec = kInf;
  double mip_gap = 1e-9;
  double feas_tol = 1e-9;
  bool verbose = false;
  enum class Backend { Highs, Reference } backend = Backend::Highs;
};

/// Solves the model. The HiGHS backend handles LPs and MILPs; the in-tree
/// reference simplex handles small LPs only (used by test oracles).
Solution solve(const Model& model, const SolveOptions& options = {});

}  // namespace invnet

#endif
