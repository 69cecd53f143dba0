#ifndef RIESZ_MEASURE_HPP
#define RIESZ_MEASURE_HPP

// Barenblatt measures: support ellipsoid geometry, densities, Fourier
// transforms, moments and exact sampling; plus the lower-dimensional family
// appearing in the degenerate limit.

#include "riesz/specfun.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace riesz::measure {

using specfun::Homogeneity;

// Ellipsoid E = R D(a) B-bar together with M = R D(a^2) R^T.
struct EllipsoidSpec {
    int d = 0;
    Eigen::MatrixXd rotation;    // R in SO(d)
    Eigen::VectorXd semi_axes;   // a, sorted descending

    EllipsoidSpec() = default;
    EllipsoidSpec(Eigen::MatrixXd R, Eigen::VectorXd a);

    static EllipsoidSpec isotropic(int d, double radius);

    // Eigendecomposition of an SPD matrix with deterministic tie-breaking:
    // descending axes, eigenvectors aligned with the coordinate axes inside
    // degenerate clusters, det R = +1.
    static EllipsoidSpec from_matrix(const Eigen::MatrixXd& M);

    Eigen::MatrixXd matrix() const;  // M = R D(a^2) R^T

    // |D(1/a) R^T x|: < 1 inside E, = 1 on the boundary.
    double boundary_coordinate(const double* x) const;

    // |D(a) R^T w| for a direction w.
    double support_radius(const double* w) const;
};

class BarenblattMeasure {
public:
    BarenblattMeasure(EllipsoidSpec spec, Homogeneity h);

    // Density of (thm-style) Barenblatt profile; 0 outside E, +inf marker on
    // the boundary band when the exponent is negative.
    double density(const double* x) const;

    // Fourier transform; real, even, (2 pi)^{-d/2} at the origin.
    double fourier(const double* xi) const;

    // Covariance matrix, R diag(a_i^2 m2) R^T with m2 = 1/(s+4).
    Eigen::MatrixXd second_moments() const;

    // Exact i.i.d. sampling (Beta radial law in the unit-ball frame).
    std::vector<double> sample(size_t n, uint64_t seed) const;

    double exponent() const { return exponent_; }
    double center_density() const { return center_density_; }
    const EllipsoidSpec& spec() const { return spec_; }
    const Homogeneity& homogeneity() const { return h_; }

private:
    EllipsoidSpec spec_;
    Homogeneity h_;
    double exponent_;
    double center_density_;
    specfun::KernelConstants constants_;
};

// Barenblatt measure on a k-dimensional ellipsoid, normalised to unit mass.
// Finite Riesz energy requires s < k.
class LowDimBarenblatt {
public:
    LowDimBarenblatt(int d, Homogeneity h, std::vector<double> semi_axes,
                     Eigen::MatrixXd embedding_rotation);

    double density(const double* y) const;  // y in R^k
    int k() const { return static_cast<int>(axes_.size()); }
    bool finite_energy() const;
    double exponent() const { return exponent_; }
    const Eigen::MatrixXd& rotation() const { return rotation_; }

private:
    Homogeneity h_;
    std::vector<double> axes_;
    Eigen::MatrixXd rotation_;
    double exponent_;
    double norm_;
};

} // namespace riesz::measure

#endif
