#ifndef RIESZ_SOLVER_HPP
#define RIESZ_SOLVER_HPP

// Homotopy continuation for the stationarity matrix equation: damped Newton
// in the symmetric positive-definite unknown M, continued in the mixing
// parameter t from the isotropic closed form at t = 0 to the target profile
// at t = 1.

#include "riesz/measure.hpp"
#include "riesz/profile.hpp"
#include "riesz/squad.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace riesz::solver {

using measure::EllipsoidSpec;
using profile::Profile;
using specfun::Homogeneity;
using squad::SphereRule;

struct SolverOptions {
    double t_step_init = 0.1;
    double t_step_max = 0.25;
    double t_step_min = 1e-6;
    double newton_tol = 1e-11;
    int newton_max_iter = 60;
    double audit_tol = 1e-12;
    bool run_audit = true;
    bool refine_check = true;     // re-test the final residual on a finer rule
    double refine_factor = 1.5;
    double refine_tol = 1e-9;
};

struct TracePoint {
    double t;
    Eigen::MatrixXd M;
    double residual_norm;
    int newton_iters;
    double min_eig;
};

using ContinuationTrace = std::vector<TracePoint>;

struct HomotopyResult {
    EllipsoidSpec spec;
    ContinuationTrace trace;
    double final_residual = 0.0;
    double refined_residual = 0.0;     // on the refinement rule, if checked
    std::vector<std::string> warnings;
};

// Row-major upper-triangle indexing of symmetric d x d matrices.
int tri_size(int d);
int tri_index(int d, int i, int j);
Eigen::VectorXd sym_to_upper(const Eigen::MatrixXd& M);
Eigen::MatrixXd upper_to_sym(const Eigen::VectorXd& v, int d);

// Closed-form isotropic solution of the t = 0 equation, M = m* I.
double isotropic_m_star(const Homogeneity& h);

// Residual vector L(t, M): off-diagonal entries carry a factor 2.
Eigen::VectorXd residual(double t, const Eigen::MatrixXd& M, const Profile& p,
                         const SphereRule& rule);

// Differential of L(t, .) at M; symmetric negative definite.
Eigen::MatrixXd jacobian(double t, const Eigen::MatrixXd& M, const Profile& p,
                         const SphereRule& rule);

// Damped Newton at fixed t.  Keeps every iterate positive definite via step
// halving against an SPD factorisation check.
Eigen::MatrixXd solve_at_t(double t, Eigen::MatrixXd M_init, const Profile& p,
                           const SphereRule& rule, const SolverOptions& opts = {},
                           int* newton_iters = nullptr);

HomotopyResult homotopy_solve(const Profile& p, const SphereRule& rule,
                              const SolverOptions& opts = {});

} // namespace riesz::solver

#endif
