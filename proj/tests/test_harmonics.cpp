#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/error.hpp"
#include "riesz/harmonics.hpp"
#include "riesz/squad.hpp"

#include <cmath>

using namespace riesz;
using namespace riesz::harmonics;

TEST_CASE("space dimensions") {
    CHECK(harmonic_space_dim(3, 0) == 1);
    CHECK(harmonic_space_dim(3, 2) == 5);
    CHECK(harmonic_space_dim(3, 4) == 9);
    CHECK(harmonic_space_dim(3, 8) == 17);
    CHECK(harmonic_space_dim(2, 2) == 2);
    CHECK(harmonic_space_dim(2, 6) == 2);
    CHECK(harmonic_space_dim(4, 2) == 9);
    CHECK(harmonic_space_dim(7, 4) == 182);

    const HarmonicBasis& b = HarmonicBasis::get(3, 8);
    for (int n = 0; n <= 8; n += 2)
        CHECK(b.count(n) == harmonic_space_dim(3, n));
}

TEST_CASE("orthonormality on the sphere") {
    for (int d : {2, 3, 4}) {
        int nmax = d <= 3 ? 6 : 4;
        const HarmonicBasis& basis = HarmonicBasis::get(d, nmax);
        squad::SphereRule rule = squad::build_rule(d, 2 * nmax + 2);
        for (int n = 0; n <= nmax; n += 2)
            for (int m = 0; m < basis.count(n); ++m)
                for (int n2 = n; n2 <= nmax; n2 += 2)
                    for (int m2 = (n2 == n ? m : 0); m2 < basis.count(n2); ++m2) {
                        double ip = squad::integrate(rule, [&](const double* w) {
                            return basis.evaluate(n, m, w) * basis.evaluate(n2, m2, w);
                        });
                        double want = (n == n2 && m == m2) ? 1.0 : 0.0;
                        CHECK(std::abs(ip - want) < 1e-10);
                    }
    }
}

TEST_CASE("basis polynomials are harmonic") {
    // apply the exact polynomial Laplacian and check it vanishes identically
    for (int d : {2, 3, 5}) {
        const HarmonicBasis& basis = HarmonicBasis::get(d, 4);
        for (int n : {2, 4})
            for (int m = 0; m < basis.count(n); ++m) {
                const Polynomial& p = basis.polynomial(n, m);
                // collect Laplacian coefficients
                std::vector<Monomial> lap;
                for (const auto& mono : p)
                    for (int k = 0; k < d; ++k) {
                        if (mono.exp[k] < 2) continue;
                        Monomial t = mono;
                        t.coeff *= mono.exp[k] * (mono.exp[k] - 1.0);
                        t.exp[k] -= 2;
                        lap.push_back(t);
                    }
                // sum coefficients per exponent tuple
                for (size_t i = 0; i < lap.size(); ++i) {
                    if (lap[i].coeff == 0.0) continue;
                    double sum = lap[i].coeff;
                    for (size_t j = i + 1; j < lap.size(); ++j)
                        if (lap[j].exp == lap[i].exp) {
                            sum += lap[j].coeff;
                            lap[j].coeff = 0.0;
                        }
                    CHECK(std::abs(sum) < 1e-9);
                }
            }
    }
}

TEST_CASE("circle harmonics span cos/sin") {
    const HarmonicBasis& basis = HarmonicBasis::get(2, 4);
    squad::SphereRule rule = squad::build_rule(2, 20);
    // degree-2 space must reproduce cos(2 theta) exactly by projection
    auto target = [](const double* w) {
        double c = w[0], s = w[1];
        return c * c - s * s;
    };
    double resid = 0.0, norm = 0.0;
    std::vector<double> proj(basis.count(2), 0.0);
    for (int m = 0; m < basis.count(2); ++m)
        proj[m] = squad::integrate(rule, [&](const double* w) {
            return target(w) * basis.evaluate(2, m, w);
        });
    for (size_t i = 0; i < rule.size(); ++i) {
        double fit = 0.0;
        for (int m = 0; m < basis.count(2); ++m)
            fit += proj[m] * basis.evaluate(2, m, rule.node(i));
        double t = target(rule.node(i));
        resid += rule.weights[i] * (fit - t) * (fit - t);
        norm += rule.weights[i] * t * t;
    }
    CHECK(resid / norm < 1e-20);
}

TEST_CASE("solid evaluation and gradient") {
    const HarmonicBasis& basis = HarmonicBasis::get(3, 4);
    double x[3] = {0.7, -1.2, 0.4};
    for (int n : {2, 4})
        for (int m = 0; m < basis.count(n); ++m) {
            // homogeneity: p(t x) = t^n p(x)
            double t = 1.7;
            double tx[3] = {t * x[0], t * x[1], t * x[2]};
            CHECK(std::abs(basis.evaluate_solid(n, m, tx)
                           - std::pow(t, n) * basis.evaluate_solid(n, m, x)) < 1e-10);
            // gradient vs finite differences
            double g[3];
            basis.gradient_solid(n, m, x, g);
            for (int k = 0; k < 3; ++k) {
                double h = 1e-6;
                double xp[3] = {x[0], x[1], x[2]}, xm[3] = {x[0], x[1], x[2]};
                xp[k] += h;
                xm[k] -= h;
                double fd = (basis.evaluate_solid(n, m, xp) - basis.evaluate_solid(n, m, xm)) / (2 * h);
                CHECK(std::abs(fd - g[k]) < 1e-7);
            }
        }
}

TEST_CASE("degree cap and argument validation") {
    CHECK(max_degree(3) == 8);
    CHECK(max_degree(7) == 4);
    CHECK_THROWS_AS(HarmonicBasis::get(3, 10), InvalidArgument);
    CHECK_THROWS_AS(HarmonicBasis::get(3, 3), InvalidArgument);
    const HarmonicBasis& b = HarmonicBasis::get(3, 2);
    CHECK_THROWS_AS(b.polynomial(2, 99), InvalidArgument);
}
