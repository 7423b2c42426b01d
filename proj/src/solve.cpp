#include <chrono>

#include "Highs.h"
#include "invnet/model.hpp"
#include "invnet/simplex.hpp"

namespace invnet {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::TimeLimitIncumbent: return "time-limit-with-incumbent";
    case SolveStatus::TimeLimitNoIncumbent: return "time-limit-no-incumbent";
    case SolveStatus::Error: return "error";
  }
  return "error";
}

namespace {

HighsModel to_highs(const Model& model) {
  HighsModel hm;
  HighsLp& lp = hm.lp_;
  lp.num_col_ = model.num_vars();
  lp.num_row_ = model.num_rows();
  lp.sense_ = model.maximize() ? ObjSense::kMaximize : ObjSense::kMinimize;
  lp.offset_ = model.objective().constant();
  lp.col_cost_.assign(lp.num_col_, 0.0);
  for (const LinExpr::Term& t : model.objective().terms()) lp.col_cost_[t.var] += t.coeff;
  lp.col_lower_.reserve(lp.num_col_);
  lp.col_upper_.reserve(lp.num_col_);
  bool any_int = false;
  for (const Model::Var& v : model.vars()) {
    lp.col_lower_.push_back(v.lo);
    lp.col_upper_.push_back(v.hi);
    if (v.type == VarType::Binary) any_int = true;
  }
  if (any_int) {
    lp.integrality_.reserve(lp.num_col_);
    for (const Model::Var& v : model.vars())
      lp.integrality_.push_back(v.type == VarType::Binary ? HighsVarType::kInteger
                                                          : HighsVarType::kContinuous);
  }
  lp.a_matrix_.format_ = MatrixFormat::kRowwise;
  lp.a_matrix_.start_.clear();
  lp.a_matrix_.start_.push_back(0);
  for (const Model::Row& r : model.rows()) {
    for (const LinExpr::Term& t : r.expr.terms()) {
      lp.a_matrix_.index_.push_back(t.var);
      lp.a_matrix_.value_.push_back(t.coeff);
    }
    lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
    lp.row_lower_.push_back(r.lo);
    lp.row_upper_.push_back(r.hi);
  }
  return hm;
}

Solution solve_highs(const Model& model, const SolveOptions& options) {
  Solution sol;
  Highs highs;
  highs.setOptionValue("output_flag", options.verbose);
  highs.setOptionValue("threads", 1);
  if (options.time_limit_sec < kInf) highs.setOptionValue("time_limit", options.time_limit_sec);
  const double ftol = std::max(options.feas_tol, 1e-10);
  highs.setOptionValue("primal_feasibility_tolerance", ftol);
  highs.setOptionValue("dual_feasibility_tolerance", ftol);
  if (model.has_integrality()) {
    highs.setOptionValue("mip_feasibility_tolerance", ftol);
    highs.setOptionValue("mip_rel_gap", std::max(options.mip_gap, 0.0));
  }
  if (highs.passModel(to_highs(model)) != HighsStatus::kOk) {
    sol.message = "backend rejected model";
    return sol;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<double, double>> incumbents;
  if (model.has_integrality()) {
    highs.setCallback(
        [&incumbents, t0](int type, const std::string&, const HighsCallbackOutput* out,
                          HighsCallbackInput*, void*) {
          if (type != kCallbackMipImprovingSolution || out == nullptr) return;
          const double secs = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
          incumbents.emplace_back(secs, out->objective_function_value);
        },
        nullptr);
    highs.startCallback(kCallbackMipImprovingSolution);
  }

  HighsStatus rc = highs.run();
  sol.solve_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  sol.incumbents = std::move(incumbents);
  if (rc == HighsStatus::kError) {
    sol.message = "backend error";
    return sol;
  }

  HighsModelStatus ms = highs.getModelStatus();
  const bool have_primal =
      highs.getSolution().value_valid &&
      static_cast<int>(highs.getSolution().col_value.size()) == model.num_vars();
  auto take_values = [&] {
    sol.values = highs.getSolution().col_value;
    sol.objective = highs.getInfo().objective_function_value;
    sol.max_violation = model.max_violation(sol.values);
    if (model.has_integrality()) sol.gap = highs.getInfo().mip_gap;
  };

  if (ms == HighsModelStatus::kUnboundedOrInfeasible) {
    // Disambiguate without presolve.
    highs.setOptionValue("presolve", "off");
    highs.run();
    ms = highs.getModelStatus();
  }
  switch (ms) {
    case HighsModelStatus::kOptimal:
      sol.status = SolveStatus::Optimal;
      take_values();
      break;
    case HighsModelStatus::kInfeasible:
      sol.status = SolveStatus::Infeasible;
      break;
    case HighsModelStatus::kUnbounded:
      sol.status = SolveStatus::Unbounded;
      break;
    case HighsModelStatus::kTimeLimit:
      if (have_primal && highs.getInfo().primal_solution_status == kSolutionStatusFeasible) {
        sol.status = SolveStatus::TimeLimitIncumbent;
        take_values();
      } else {
        sol.status = SolveStatus::TimeLimitNoIncumbent;
      }
      break;
    default:
      sol.status = SolveStatus::Error;
      sol.message = highs.modelStatusToString(ms);
      break;
  }
  return sol;
}

}  // namespace

Solution solve(const Model& model, const SolveOptions& options) {
  if (options.backend == SolveOptions::Backend::Reference) return solve_reference(model);
  return solve_highs(model, options);
}

}  // namespace invnet
