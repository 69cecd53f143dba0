#ifndef RIESZ_SQUAD_HPP
#define RIESZ_SQUAD_HPP

// Quadrature on the unit sphere S^{d-1}, 2 <= d <= 7.  Product rules:
// trapezoid on the circle, Gauss-Legendre x trapezoid for d = 3, recursive
// Gauss-Gegenbauer products above.  All rules are antipodally symmetric.

#include "riesz/error.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace riesz::squad {

struct SphereRule {
    int d = 0;
    int order = 0;
    std::vector<double> nodes;    // flattened, size() * d
    std::vector<double> weights;

    size_t size() const { return weights.size(); }
    const double* node(size_t i) const { return nodes.data() + i * d; }
};

// Rule integrating spherical polynomials of total degree <= order exactly.
SphereRule build_rule(int d, int order);

// Baseline order used when a config does not pin one.  Large d keeps a small
// default because product-rule node counts grow geometrically with d.
int default_order(int d);

// Exact value of the monomial moment  int_{S^{d-1}} prod omega_i^{p_i}.
double monomial_moment(int d, const std::vector<int>& powers);

template <class F>
double integrate(const SphereRule& rule, F&& f) {
    double sum = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) {
        double v = f(rule.node(i));
        if (!std::isfinite(v)) {
            const double* x = rule.node(i);
            std::string where = "(";
            for (int k = 0; k < rule.d; ++k)
                where += std::to_string(x[k]) + (k + 1 < rule.d ? "," : ")");
            throw Error(ErrorCode::Internal,
                        "integrate: non-finite sample at node " + std::to_string(i) + " " + where);
        }
        sum += rule.weights[i] * v;
    }
    return sum;
}

} // namespace riesz::squad

#endif
