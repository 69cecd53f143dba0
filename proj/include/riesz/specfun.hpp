#ifndef RIESZ_SPECFUN_HPP
#define RIESZ_SPECFUN_HPP

// Real-argument special functions and the scalar constants consumed by the
// kernel formulas: Gamma, Bessel J_nu, Gauss 2F1, and the h / phi / F family
// built from them.

namespace riesz::specfun {

// Homogeneity exponent s of the repulsive kernel together with the ambient
// dimension d.  Valid range is s in (max(d-4,0), d) intersected with (0,5);
// outside of it the Barenblatt density is not defined.
struct Homogeneity {
    double s;
    int d;

    Homogeneity(double s_, int d_);

    // True iff s lies in [d-3, d) and below 5, where the continuation
    // argument guarantees an ellipsoidal solution.
    bool theorem_range() const;
    // True iff s in (d-4, d-3): solvability is an open question there.
    bool open_range() const;
};

// Scalar constants entering the Fourier representation.
struct KernelConstants {
    double kappa_s;     // oscillatory-branch coefficient, zero exactly at s = 1
    double c_sd;        // Fourier amplitude of the Barenblatt measure
    double c_tilde_sd;  // c_sd * 2^(s/2-2) * Gamma(s/2)
    double gamma_sd;    // 2 s c_tilde_sd
    double cdrd;        // normalisation product c_d r_d^d of the isotropic density
    double b_sd;        // |x|^{-s}  ->  b_sd |xi|^{s-d} under the unitary transform
};

double gamma(double x);
double log_gamma(double x);   // log |Gamma(x)|
double rgamma(double x);      // 1 / Gamma(x), entire (0 at the poles)
double digamma(double x);
double sin_pi(double x);      // sin(pi x) with exact argument reduction
double cos_pi(double x);

// Bessel function of the first kind, nu >= 0, x >= 0.
// Power series up to x = max(14, 2 nu); Hankel asymptotics at the fractional
// order plus forward recurrence beyond.  Relative accuracy ~1e-11 for
// nu <= 6, x <= 1e4 away from the zeros.
double bessel_j(double nu, double x);

// Gauss hypergeometric function for real parameters and z in [0, 1).
// Series for z <= 0.8, linear z -> 1-z transformation above, including the
// logarithmic cases c - a - b in Z.  Accuracy degrades when c - a - b is
// within ~1e-6 of an integer without being one.
double hyp2f1(double a, double b, double c, double z);
// Limit value at z = 1 for c - a - b > 0.
double hyp2f1_at_1(double a, double b, double c);

KernelConstants kernel_constants(const Homogeneity& h);

// kappa_s and the factor K(s) with kappa_s = K(s) cos(pi s / 2).
double kappa(double s);
double big_k(double s);

// Fourier multiplier of a degree-n spherical harmonic against |x|^{-s}:
// |x|^{-s} psi_n(x/|x|)  ->  b_{n,s,d} |xi|^{s-d} psi_n(xi/|xi|), n even.
double fourier_multiplier(int n, const Homogeneity& h);

// One-dimensional kernel transform h(alpha, s); alpha != +-1.
double h_kernel(double alpha, const Homogeneity& h);

// phi(z) = z^{-s/2} 2F1(s/2, (s+1)/2; s/2+2; 1/z) on z >= 1, its boundary
// value (s < 3) and one-sided derivative at z = 1.
double phi(double z, const Homogeneity& h);
double phi_at_1(const Homogeneity& h);
double dphi_at_1(const Homogeneity& h);
// Closed-form derivative of phi for z > 1.
double dphi(double z, const Homogeneity& h);

// F(alpha, s) = s alpha^2 - 1 + kappa_s f_s(alpha) for |alpha| > 1, s in (0,3).
// Non-negative; vanishes in the limit |alpha| -> 1 when s <= 1.
double big_f(double alpha, const Homogeneity& h);

// Closed-form surface measure of the unit sphere in R^d.
double sphere_area(int d);

} // namespace riesz::specfun

#endif
