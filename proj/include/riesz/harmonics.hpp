#ifndef RIESZ_HARMONICS_HPP
#define RIESZ_HARMONICS_HPP

// Real spherical harmonics of even degree for 2 <= d <= 7.
//
// The degree-n basis is constructed once per (d, n) as the kernel of the
// Laplacian acting on homogeneous degree-n polynomials, then orthonormalised
// in L^2(S^{d-1}) by modified Gram-Schmidt.  Monomials are ordered
// lexicographically by exponent tuple (first variable weighted highest); the
// kernel vectors inherit that order through their free columns, which fixes
// the (n, m) indexing convention deterministically.

#include <array>
#include <vector>

namespace riesz::harmonics {

struct Monomial {
    double coeff;
    std::array<int, 7> exp;  // exponents, entries beyond d are zero
};

using Polynomial = std::vector<Monomial>;

class HarmonicBasis {
public:
    // Cached, immutable basis handle.  nmax must be even and not exceed
    // max_degree(d).
    static const HarmonicBasis& get(int d, int nmax);

    int dimension() const { return d_; }
    int max_order() const { return nmax_; }

    // Number of independent harmonics of (even) degree n.
    int count(int n) const;

    // Value of psi_{n,m} on the sphere (|omega| = 1 assumed).
    double evaluate(int n, int m, const double* omega) const;

    // Homogeneous extension: value and gradient of the degree-n harmonic
    // polynomial at an arbitrary point.
    double evaluate_solid(int n, int m, const double* x) const;
    void gradient_solid(int n, int m, const double* x, double* grad) const;

    const Polynomial& polynomial(int n, int m) const;

private:
    HarmonicBasis(int d, int nmax);
    int d_, nmax_;
    std::vector<std::vector<Polynomial>> by_degree_;  // index n/2 -> functions
};

// Dimension of the space of degree-n spherical harmonics in R^d.
int harmonic_space_dim(int d, int n);

// Largest supported expansion degree per dimension (construction cost grows
// steeply with d).
int max_degree(int d);

} // namespace riesz::harmonics

#endif
