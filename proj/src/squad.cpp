#include "riesz/squad.hpp"
#include "riesz/quad1d.hpp"
#include "riesz/specfun.hpp"

#include <cmath>

namespace riesz::squad {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

SphereRule circle_rule(int order) {
    int n = order + 2;
    if (n % 2 != 0) ++n;
    SphereRule rule;
    rule.d = 2;
    rule.order = order;
    rule.nodes.resize(2 * n);
    rule.weights.assign(n, kTwoPi / n);
    for (int k = 0; k < n; ++k) {
        double theta = kTwoPi * (k + 0.5) / n;
        rule.nodes[2 * k] = std::cos(theta);
        rule.nodes[2 * k + 1] = std::sin(theta);
    }
    return rule;
}

} // namespace

SphereRule build_rule(int d, int order) {
    if (d < 2 || d > 7)
        throw DomainError("build_rule: d must lie in [2, 7]");
    if (order < 2)
        throw InvalidArgument("build_rule: order >= 2 required");
    if (d == 2)
        return circle_rule(order);

    SphereRule sub = build_rule(d - 1, order);
    int n_polar = (order + 3) / 2;
    quad1d::Rule1D polar = quad1d::gauss_jacobi(n_polar, 0.5 * (d - 3), 0.5 * (d - 3));

    SphereRule rule;
    rule.d = d;
    rule.order = order;
    rule.nodes.reserve(d * sub.size() * polar.nodes.size());
    rule.weights.reserve(sub.size() * polar.nodes.size());
    for (size_t iu = 0; iu < polar.nodes.size(); ++iu) {
        double u = polar.nodes[iu];
        double r = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (size_t is = 0; is < sub.size(); ++is) {
            const double* omega = sub.node(is);
            for (int k = 0; k < d - 1; ++k)
                rule.nodes.push_back(r * omega[k]);
            rule.nodes.push_back(u);
            rule.weights.push_back(polar.weights[iu] * sub.weights[is]);
        }
    }
    return rule;
}

int default_order(int d) {
    if (d <= 3) return 40;
    if (d <= 5) return 20;
    return 12;
}

double monomial_moment(int d, const std::vector<int>& powers) {
    if (static_cast<int>(powers.size()) != d)
        throw InvalidArgument("monomial_moment: powers must have length d");
    int total = 0;
    for (int p : powers) {
        if (p < 0) throw InvalidArgument("monomial_moment: negative exponent");
        if (p % 2 != 0) return 0.0;
        total += p;
    }
    double num = 2.0;
    for (int p : powers)
        num *= specfun::gamma(0.5 * (p + 1.0));
    return num * specfun::rgamma(0.5 * (total + d));
}

} // namespace riesz::squad
