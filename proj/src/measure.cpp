#include "riesz/measure.hpp"
#include "riesz/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace riesz::measure {

EllipsoidSpec::EllipsoidSpec(Eigen::MatrixXd R, Eigen::VectorXd a)
    : d(static_cast<int>(a.size())), rotation(std::move(R)), semi_axes(std::move(a)) {
    if (rotation.rows() != d || rotation.cols() != d)
        throw InvalidArgument("EllipsoidSpec: rotation shape mismatch");
    if ((rotation * rotation.transpose() - Eigen::MatrixXd::Identity(d, d)).norm() > 1e-8)
        throw InvalidArgument("EllipsoidSpec: rotation is not orthogonal");
    for (int i = 0; i < d; ++i)
        if (!(semi_axes(i) > 0.0))
            throw InvalidArgument("EllipsoidSpec: semi-axes must be positive");
}

EllipsoidSpec EllipsoidSpec::isotropic(int d, double radius) {
    return EllipsoidSpec(Eigen::MatrixXd::Identity(d, d),
                         Eigen::VectorXd::Constant(d, radius));
}

Eigen::MatrixXd EllipsoidSpec::matrix() const {
    return rotation * semi_axes.array().square().matrix().asDiagonal() * rotation.transpose();
}

EllipsoidSpec EllipsoidSpec::from_matrix(const Eigen::MatrixXd& M) {
    const int d = static_cast<int>(M.rows());
    if (M.cols() != d || (M - M.transpose()).norm() > 1e-10 * (1.0 + M.norm()))
        throw InvalidArgument("EllipsoidSpec: matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw InvalidArgument("EllipsoidSpec: matrix is not positive definite");

    // descending eigenvalues
    Eigen::VectorXd lam(d);
    Eigen::MatrixXd V(d, d);
    for (int i = 0; i < d; ++i) {
        lam(i) = es.eigenvalues()(d - 1 - i);
        V.col(i) = es.eigenvectors().col(d - 1 - i);
    }

    // align eigenvectors with the coordinate axes inside degenerate clusters
    double scale = lam(0);
    int i = 0;
    while (i < d) {
        int j = i + 1;
        while (j < d && std::abs(lam(j) - lam(i)) <= 1e-8 * scale) ++j;
        int k = j - i;
        if (k > 1) {
            Eigen::MatrixXd Vc = V.middleCols(i, k);
            Eigen::MatrixXd P = Vc * Vc.transpose();
            // Gram-Schmidt of the projected coordinate axes, largest first
            std::vector<int> order(d);
            for (int t = 0; t < d; ++t) order[t] = t;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return P.col(a).norm() > P.col(b).norm();
            });
            Eigen::MatrixXd W(d, k);
            int got = 0;
            for (int t = 0; t < d && got < k; ++t) {
                Eigen::VectorXd v = P.col(order[t]);
                for (int u = 0; u < got; ++u) v -= W.col(u).dot(v) * W.col(u);
                double nn = v.norm();
                if (nn > 1e-8) W.col(got++) = v / nn;
            }
            if (got == k) V.middleCols(i, k) = W;
        }
        i = j;
    }

    // deterministic signs: largest-magnitude component positive
    for (int c = 0; c < d; ++c) {
        int arg = 0;
        for (int r = 1; r < d; ++r)
            if (std::abs(V(r, c)) > std::abs(V(arg, c))) arg = r;
        if (V(arg, c) < 0.0) V.col(c) = -V.col(c);
    }
    if (V.determinant() < 0.0) V.col(d - 1) = -V.col(d - 1);

    EllipsoidSpec out(V, lam.array().sqrt().matrix());
    return out;
}

double EllipsoidSpec::boundary_coordinate(const double* x) const {
    Eigen::Map<const Eigen::VectorXd> xv(x, d);
    Eigen::VectorXd u = rotation.transpose() * xv;
    double q = 0.0;
    for (int i = 0; i < d; ++i) {
        double t = u(i) / semi_axes(i);
        q += t * t;
    }
    return std::sqrt(q);
}

double EllipsoidSpec::support_radius(const double* w) const {
    Eigen::Map<const Eigen::VectorXd> wv(w, d);
    Eigen::VectorXd u = rotation.transpose() * wv;
    double q = 0.0;
    for (int i = 0; i < d; ++i) {
        double t = u(i) * semi_axes(i);
        q += t * t;
    }
    return std::sqrt(q);
}

BarenblattMeasure::BarenblattMeasure(EllipsoidSpec spec, Homogeneity h)
    : spec_(std::move(spec)), h_(h), constants_(specfun::kernel_constants(h)) {
    if (spec_.d != h.d)
        throw InvalidArgument("BarenblattMeasure: dimension mismatch");
    exponent_ = 0.5 * (h.s + 2.0 - h.d);
    center_density_ = constants_.cdrd / spec_.semi_axes.prod();
}

double BarenblattMeasure::density(const double* x) const {
    double rho = spec_.boundary_coordinate(x);
    if (rho > 1.0) return 0.0;
    if (rho > 1.0 - 1e-12) {
        // boundary band
        if (exponent_ < 0.0) return std::numeric_limits<double>::infinity();
        if (exponent_ == 0.0) return center_density_;
        return 0.0;
    }
    return center_density_ * std::pow(1.0 - rho * rho, exponent_);
}

double BarenblattMeasure::fourier(const double* xi) const {
    double t = spec_.support_radius(xi);
    double nu = 0.5 * h_.s + 1.0;
    if (t < 1e-3) {
        // removable limit: J_nu(t)/t^nu = 2^-nu/Gamma(nu+1) (1 - t^2/(4(nu+1)) + ...)
        double lead = std::pow(2.0, -nu) * specfun::rgamma(nu + 1.0);
        double t2 = t * t;
        return constants_.c_sd * lead
            * (1.0 - t2 / (4.0 * (nu + 1.0)) + t2 * t2 / (32.0 * (nu + 1.0) * (nu + 2.0)));
    }
    return constants_.c_sd * specfun::bessel_j(nu, t) / std::pow(t, nu);
}

Eigen::MatrixXd BarenblattMeasure::second_moments() const {
    return spec_.matrix() / (h_.s + 4.0);
}

std::vector<double> BarenblattMeasure::sample(size_t n, uint64_t seed) const {
    const int d = spec_.d;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::gamma_distribution<double> g_shape_d(0.5 * d, 1.0);
    std::gamma_distribution<double> g_shape_p(exponent_ + 1.0, 1.0);

    Eigen::MatrixXd RD = spec_.rotation * spec_.semi_axes.asDiagonal();
    std::vector<double> out(n * d);
    Eigen::VectorXd w(d);
    for (size_t i = 0; i < n; ++i) {
        double nn = 0.0;
        for (int k = 0; k < d; ++k) {
            w(k) = gauss(rng);
            nn += w(k) * w(k);
        }
        w /= std::sqrt(nn);
        double g1 = g_shape_d(rng), g2 = g_shape_p(rng);
        double r = std::sqrt(g1 / (g1 + g2));   // sqrt of a Beta(d/2, p+1) draw
        Eigen::VectorXd x = RD * (r * w);
        for (int k = 0; k < d; ++k) out[i * d + k] = x(k);
    }
    return out;
}

LowDimBarenblatt::LowDimBarenblatt(int d, Homogeneity h, std::vector<double> semi_axes,
                                   Eigen::MatrixXd embedding_rotation)
    : h_(h), axes_(std::move(semi_axes)), rotation_(std::move(embedding_rotation)) {
    int k = static_cast<int>(axes_.size());
    if (k < 1 || k > d)
        throw InvalidArgument("LowDimBarenblatt: k must lie in [1, d]");
    if (rotation_.rows() != d || rotation_.cols() != d)
        throw InvalidArgument("LowDimBarenblatt: embedding rotation must be d x d");
    for (double a : axes_)
        if (!(a > 0.0)) throw InvalidArgument("LowDimBarenblatt: axes must be positive");
    exponent_ = 0.5 * (h.s + 2.0 - k);
    if (exponent_ <= -1.0)
        throw DomainError("LowDimBarenblatt: density exponent at or below -1");
    double prod = 1.0;
    for (double a : axes_) prod *= a;
    // unit total mass over the k-dimensional ellipsoid
    norm_ = specfun::gamma(exponent_ + 0.5 * k + 1.0) * specfun::rgamma(exponent_ + 1.0)
          / (prod * std::pow(3.14159265358979323846, 0.5 * k));
}

double LowDimBarenblatt::density(const double* y) const {
    double q = 0.0;
    for (size_t i = 0; i < axes_.size(); ++i) {
        double t = y[i] / axes_[i];
        q += t * t;
    }
    if (q > 1.0) return 0.0;
    if (q > 1.0 - 1e-12) {
        if (exponent_ < 0.0) return std::numeric_limits<double>::infinity();
        if (exponent_ == 0.0) return norm_;
        return 0.0;
    }
    return norm_ * std::pow(1.0 - q, exponent_);
}

bool LowDimBarenblatt::finite_energy() const {
    return h_.s < static_cast<double>(k());
}

} // namespace riesz::measure
