#ifndef RIESZ_PROFILE_HPP
#define RIESZ_PROFILE_HPP

// Anisotropic profile Psi on S^{d-1} and its Fourier-side counterpart
// Psi-hat.  Profiles are immutable; evaluation is pure.

#include "riesz/harmonics.hpp"
#include "riesz/specfun.hpp"
#include "riesz/squad.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

namespace riesz::profile {

using specfun::Homogeneity;

// (degree n, index m, coefficient) on the orthonormal harmonic basis.
struct HarmonicCoefficient {
    int n;
    int m;
    double value;
};

using Sampler = std::function<double(const double*)>;

class Profile {
public:
    // Physical-side expansion Psi = sum c psi_{n,m}; degrees must be even.
    static Profile from_harmonics(const Homogeneity& h,
                                  std::vector<HarmonicCoefficient> coeffs);

    // Fourier-side sampler, optionally with the physical side as well.
    static Profile from_fourier_sampler(const Homogeneity& h, Sampler fourier,
                                        Sampler physical = nullptr);

    // Least-squares fit of tabulated Fourier-side values (node, value) onto
    // even harmonics of degree <= nmax; the residual is reported.
    static Profile from_fourier_table(const Homogeneity& h,
                                      const std::vector<std::vector<double>>& nodes,
                                      const std::vector<double>& values, int nmax);

    double fourier(const double* omega) const;   // Psi-hat
    bool has_physical() const;
    double physical(const double* omega) const;  // Psi

    // Physical value and gradient of the homogeneous extension
    // Psi(x/|x|), defined for x != 0.  Requires harmonic representation.
    double physical_solid(const double* x, double* grad_or_null) const;

    // Project a sampler-only profile onto harmonics so the physical side
    // becomes available; returns the new profile and the L^2 fit residual.
    Profile synthesized(const squad::SphereRule& rule, int nmax) const;

    const Homogeneity& homogeneity() const;
    int dimension() const;
    bool has_harmonics() const;
    const std::vector<HarmonicCoefficient>& harmonics() const;
    double fit_residual() const;

    // Profile with the Fourier side shifted by a constant (physical side by
    // eps / b_{s,d}); used by the homotopy and the degenerate lift.
    Profile fourier_shifted(double eps) const;

private:
    struct Impl;
    explicit Profile(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

struct AuditResult {
    double min_value = 0.0;
    std::vector<double> argmin;
    bool strict = false;
};

// Minimum of Psi-hat over the rule nodes plus local refinement around the
// worst node.  strict = (min > tol).
AuditResult positivity_audit(const Profile& p, const squad::SphereRule& rule,
                             double tol = 1e-12);

// The interpolating family Psi-hat_t = t Psi-hat + (1 - t).
class HomotopyProfile {
public:
    HomotopyProfile(const Profile& base, double t);
    double fourier(const double* omega) const;
    double t() const { return t_; }
    const Profile& base() const { return base_; }

private:
    Profile base_;
    double t_;
};

HomotopyProfile homotopy(const Profile& p, double t);

} // namespace riesz::profile

#endif
