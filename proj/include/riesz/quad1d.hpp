#ifndef RIESZ_QUAD1D_HPP
#define RIESZ_QUAD1D_HPP

// One-dimensional quadrature utilities: adaptive Gauss-Kronrod on finite
// intervals (endpoint singularities handled by bisection, the nodes are
// interior) and Gauss rules from the Golub-Welsch eigenvalue method.

#include <functional>
#include <vector>

namespace riesz::quad1d {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

// Adaptive 15-point Gauss-Kronrod over [a, b].
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 100);

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
Rule1D gauss_legendre(int n);

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1];
// alpha, beta > -1.  The weight is absorbed into the rule weights.
Rule1D gauss_jacobi(int n, double alpha, double beta);

// Map a rule on [-1, 1] to [a, b] (weights scaled by the Jacobian only; any
// Jacobi weight exponents refer to the mapped endpoints).
Rule1D map_to_interval(const Rule1D& rule, double a, double b);

} // namespace riesz::quad1d

#endif
