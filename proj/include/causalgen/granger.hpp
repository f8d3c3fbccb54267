#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "causalgen/metrics.hpp"

namespace causalgen {

struct GrangerParams {
    std::vector<double> cv_alphas = {0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
    int max_lag = 5;
    int k_folds = 5;
    double significance = 0.05;
};

/// Regression problem for one response variable: y = X_j(t), regressors
/// X_i(t - s) for every variable i and s in [1, max_lag]; no lag-0
/// regressors by construction. Columns are standardized, y is centered.
struct LaggedDesign {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    std::vector<std::pair<int, int>> column_index;  // column -> (variable, lag)
    std::vector<std::pair<int, int>> dropped;       // zero-variance regressors
    int target = 0;
};

LaggedDesign build_lagged_design(const Eigen::MatrixXd& data, int target, int max_lag);

struct LassoResult {
    Eigen::VectorXd beta;
    int sweeps = 0;
    bool converged = false;
    std::vector<double> objective;  // (1/2n)||y - Xb||^2 + alpha ||b||_1 per sweep
};

/// Cyclic coordinate descent for the Lasso objective
/// (1/2n)||y - X beta||^2 + alpha ||beta||_1; stops when the largest
/// coefficient change in a sweep drops below 1e-8 (or after 1e4 sweeps,
/// returning the best iterate with converged = false).
LassoResult lasso_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double alpha,
                      const Eigen::VectorXd* warm_start = nullptr);

/// Contiguous time-ordered k-fold cross validation; returns the alpha with
/// the smallest mean held-out squared error, ties resolved toward the
/// larger (sparser) alpha.
double cv_select_alpha(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                       const std::vector<double>& cv_alphas, int k_folds);

/// One-sided survival function of Student's t with `dof` degrees of
/// freedom, P(T > t).
double student_t_sf(double t, double dof);

/// Multivariate Granger discovery: per response, CV-selected Lasso fit,
/// OLS refit on the support and a one-sided t-test in the direction of
/// each estimate. Emits only lagged links (lag >= 1).
LinkSet granger_discover(const Eigen::MatrixXd& observed, const GrangerParams& params);

}  // namespace causalgen
