#include "riesz/solver.hpp"
#include "riesz/error.hpp"
#include "riesz/parallel.hpp"

#include <cmath>
#include <string>

namespace riesz::solver {

int tri_size(int d) { return d * (d + 1) / 2; }

int tri_index(int d, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
}

Eigen::VectorXd sym_to_upper(const Eigen::MatrixXd& M) {
    const int d = static_cast<int>(M.rows());
    Eigen::VectorXd v(tri_size(d));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) v(tri_index(d, i, j)) = M(i, j);
    return v;
}

Eigen::MatrixXd upper_to_sym(const Eigen::VectorXd& v, int d) {
    Eigen::MatrixXd M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) M(i, j) = M(j, i) = v(tri_index(d, i, j));
    return M;
}

double isotropic_m_star(const Homogeneity& h) {
    double g = specfun::kernel_constants(h).gamma_sd;
    return std::pow(g * specfun::sphere_area(h.d) / h.d, 2.0 / (h.s + 2.0));
}

namespace {

// Per-rule cache of profile Fourier values; the homotopy mixing is applied
// per evaluation since it is affine in t.
struct NodeCache {
    const SphereRule* rule = nullptr;
    std::vector<double> psi_hat;

    void bind(const Profile& p, const SphereRule& r) {
        if (rule == &r && !psi_hat.empty()) return;
        rule = &r;
        psi_hat.resize(r.size());
        for (size_t i = 0; i < r.size(); ++i)
            psi_hat[i] = p.fourier(r.node(i));
    }
};

bool is_spd(const Eigen::MatrixXd& M) {
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    return llt.info() == Eigen::Success;
}

Eigen::VectorXd residual_cached(double t, const Eigen::MatrixXd& M,
                                const NodeCache& cache, const Homogeneity& h) {
    const SphereRule& rule = *cache.rule;
    const int d = h.d;
    const int n = tri_size(d);
    const double g = specfun::kernel_constants(h).gamma_sd;
    const double expo = -(0.5 * h.s + 1.0);

    const int chunks = parallel_chunk_count(rule.size());
    std::vector<Eigen::VectorXd> partial(chunks, Eigen::VectorXd::Zero(n));
    const size_t per = (rule.size() + chunks - 1) / chunks;
#pragma omp parallel for schedule(static, 1) num_threads(chunks)
    for (int c = 0; c < chunks; ++c) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
        size_t lo = c * per, hi = std::min(rule.size(), lo + per);
        for (size_t k = lo; k < hi; ++k) {
            const double* w = rule.node(k);
            double q = 0.0;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) q += M(i, j) * w[i] * w[j];
            double psi_t = t * cache.psi_hat[k] + (1.0 - t);
            double f = rule.weights[k] * psi_t * std::pow(q, expo);
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j)
                    acc(tri_index(d, i, j)) += f * w[i] * w[j];
        }
        partial[c] = acc;
    }
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
    for (const auto& pvec : partial) sum += pvec;

    Eigen::VectorXd L(n);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            int idx = tri_index(d, i, j);
            double mult = (i == j) ? 1.0 : 2.0;
            L(idx) = g * mult * sum(idx) - (i == j ? 1.0 : 0.0);
        }
    return L;
}

Eigen::MatrixXd jacobian_cached(double t, const Eigen::MatrixXd& M,
                                const NodeCache& cache, const Homogeneity& h) {
    const SphereRule& rule = *cache.rule;
    const int d = h.d;
    const int n = tri_size(d);
    const double g = specfun::kernel_constants(h).gamma_sd;
    const double pref = g * (0.5 * h.s + 1.0);
    const double expo = -(0.5 * h.s + 2.0);

    const int chunks = parallel_chunk_count(rule.size());
    const size_t per = (rule.size() + chunks - 1) / chunks;
    std::vector<Eigen::MatrixXd> partial(chunks, Eigen::MatrixXd::Zero(n, n));
#pragma omp parallel for schedule(static, 1) num_threads(chunks)
    for (int c = 0; c < chunks; ++c) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXd pairs(n);
        size_t lo = c * per, hi = std::min(rule.size(), lo + per);
        for (size_t k = lo; k < hi; ++k) {
            const double* w = rule.node(k);
            double q = 0.0;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) q += M(i, j) * w[i] * w[j];
            double psi_t = t * cache.psi_hat[k] + (1.0 - t);
            double f = rule.weights[k] * psi_t * std::pow(q, expo);
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) pairs(tri_index(d, i, j)) = w[i] * w[j];
            acc.selfadjointView<Eigen::Upper>().rankUpdate(pairs, f);
        }
        partial[c] = acc;
    }
    Eigen::MatrixXd A4u = Eigen::MatrixXd::Zero(n, n);
    for (const auto& pmat : partial) A4u += pmat;
    Eigen::MatrixXd A4 = A4u.selfadjointView<Eigen::Upper>();

    Eigen::MatrixXd B(n, n);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            int r = tri_index(d, i, j);
            double mr = (i == j) ? 1.0 : 2.0;
            for (int k = 0; k < d; ++k)
                for (int l = k; l < d; ++l) {
                    int s = tri_index(d, k, l);
                    double ms = (k == l) ? 1.0 : 2.0;
                    B(r, s) = -mr * ms * pref * A4(r, s);
                }
        }
    return B;
}

Eigen::MatrixXd newton(double t, Eigen::MatrixXd M, const NodeCache& cache,
                       const Homogeneity& h, const SolverOptions& opts, int* iters_out) {
    const int d = h.d;
    if (!is_spd(M))
        throw InvalidArgument("solve_at_t: initial matrix is not positive definite");
    Eigen::VectorXd L = residual_cached(t, M, cache, h);
    double nrm = L.lpNorm<Eigen::Infinity>();
    int iter = 0;
    while (nrm > opts.newton_tol) {
        if (iter >= opts.newton_max_iter)
            throw MaxIterations("solve_at_t: Newton did not reach tolerance at t = "
                                + std::to_string(t) + " (residual " + std::to_string(nrm) + ")");
        Eigen::MatrixXd B = jacobian_cached(t, M, cache, h);
        // B is negative definite: factor -B with a Cholesky solve
        Eigen::LLT<Eigen::MatrixXd> llt(-B);
        if (llt.info() != Eigen::Success)
            throw Error(ErrorCode::Internal, "solve_at_t: Jacobian lost negative-definiteness");
        Eigen::VectorXd step = llt.solve(L);
        Eigen::MatrixXd S = upper_to_sym(step, d);

        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 45; ++half) {
            Eigen::MatrixXd Mtry = M + lambda * S;
            if (is_spd(Mtry)) {
                Eigen::VectorXd Ltry = residual_cached(t, Mtry, cache, h);
                double ntry = Ltry.lpNorm<Eigen::Infinity>();
                if (ntry <= (1.0 - 0.25 * lambda) * nrm || ntry <= opts.newton_tol) {
                    M = Mtry;
                    L = Ltry;
                    nrm = ntry;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (!accepted)
            throw LostPositivity("solve_at_t: no admissible Newton step at t = "
                                 + std::to_string(t), t);
        ++iter;
    }
    if (iters_out) *iters_out = iter;
    return M;
}

} // namespace

Eigen::VectorXd residual(double t, const Eigen::MatrixXd& M, const Profile& p,
                         const SphereRule& rule) {
    if (t < 0.0 || t > 1.0)
        throw InvalidArgument("residual: t outside [0, 1]");
    if (!is_spd(M))
        throw InvalidArgument("residual: M is not positive definite");
    NodeCache cache;
    cache.bind(p, rule);
    return residual_cached(t, M, cache, p.homogeneity());
}

Eigen::MatrixXd jacobian(double t, const Eigen::MatrixXd& M, const Profile& p,
                         const SphereRule& rule) {
    if (!is_spd(M))
        throw InvalidArgument("jacobian: M is not positive definite");
    NodeCache cache;
    cache.bind(p, rule);
    return jacobian_cached(t, M, cache, p.homogeneity());
}

Eigen::MatrixXd solve_at_t(double t, Eigen::MatrixXd M_init, const Profile& p,
                           const SphereRule& rule, const SolverOptions& opts,
                           int* newton_iters) {
    NodeCache cache;
    cache.bind(p, rule);
    return newton(t, std::move(M_init), cache, p.homogeneity(), opts, newton_iters);
}

HomotopyResult homotopy_solve(const Profile& p, const SphereRule& rule,
                              const SolverOptions& opts) {
    const Homogeneity& h = p.homogeneity();
    HomotopyResult out;
    if (h.open_range())
        out.warnings.push_back("s = " + std::to_string(h.s) + " lies in (d-4, d-3): outside "
                               "theorem range, existence of an ellipsoidal solution is open");
    else if (!h.theorem_range())
        out.warnings.push_back("s outside theorem range [d-3, d); continuing without guarantee");

    if (opts.run_audit) {
        auto audit = profile::positivity_audit(p, rule, opts.audit_tol);
        if (!audit.strict)
            throw PositivityAuditFailed(
                "homotopy_solve: Fourier side not strictly positive (min "
                + std::to_string(audit.min_value) + ")");
    }

    NodeCache cache;
    cache.bind(p, rule);
    const int d = h.d;

    double t = 0.0;
    Eigen::MatrixXd M = isotropic_m_star(h) * Eigen::MatrixXd::Identity(d, d);
    int iters = 0;
    M = newton(0.0, M, cache, h, opts, &iters);
    auto record = [&](double tt, const Eigen::MatrixXd& Mt, int it) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Mt);
        out.trace.push_back({tt, Mt,
                             residual_cached(tt, Mt, cache, h).lpNorm<Eigen::Infinity>(),
                             it, es.eigenvalues().minCoeff()});
    };
    record(0.0, M, iters);

    double dt = opts.t_step_init;
    int consecutive = 0;
    while (t < 1.0) {
        double t_next = std::min(1.0, t + dt);
        try {
            Eigen::MatrixXd M_next = newton(t_next, M, cache, h, opts, &iters);
            t = t_next;
            M = M_next;
            record(t, M, iters);
            if (++consecutive >= 2) {
                dt = std::min(2.0 * dt, opts.t_step_max);
                consecutive = 0;
            }
        } catch (const Error&) {
            dt *= 0.5;
            consecutive = 0;
            if (dt < opts.t_step_min)
                throw StepUnderflow("homotopy_solve: continuation step underflow at t = "
                                    + std::to_string(t), t);
        }
    }
    out.final_residual = out.trace.back().residual_norm;

    if (opts.refine_check) {
        int fine_order = static_cast<int>(std::ceil(rule.order * opts.refine_factor));
        SphereRule fine = squad::build_rule(rule.d, fine_order);
        NodeCache fine_cache;
        fine_cache.bind(p, fine);
        out.refined_residual =
            residual_cached(1.0, M, fine_cache, h).lpNorm<Eigen::Infinity>();
        if (out.refined_residual > opts.refine_tol) {
            // quadrature was the bottleneck: re-solve once on the finer rule
            M = newton(1.0, M, fine_cache, h, opts, &iters);
            record(1.0, M, iters);
            out.final_residual = out.trace.back().residual_norm;
            out.refined_residual = out.final_residual;
            out.warnings.push_back("refinement check exceeded tolerance; re-solved on order "
                                   + std::to_string(fine_order));
        }
    }

    out.spec = EllipsoidSpec::from_matrix(M);
    return out;
}

} // namespace riesz::solver
