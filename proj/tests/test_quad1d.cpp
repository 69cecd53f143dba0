#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/quad1d.hpp"
#include "riesz/specfun.hpp"

#include <cmath>

using namespace riesz::quad1d;

TEST_CASE("adaptive GK: smooth and endpoint-singular integrands") {
    auto r1 = integrate([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846);
    CHECK(std::abs(r1.value - 2.0) < 1e-13);

    // integrable endpoint singularity x^{-1/2}
    auto r2 = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12, 1e-12);
    CHECK(std::abs(r2.value - 2.0) < 1e-7);

    // (1-x)^{-0.8} on [0,1): integral = 5.  Bisection cannot localise such a
    // strong endpoint singularity past the double-precision grid, so accuracy
    // saturates; the returned error estimate has to cover the defect.
    auto r3 = integrate([](double x) { return std::pow(1.0 - x, -0.8); }, 0.0, 1.0, 1e-11, 1e-11);
    CHECK(std::abs(r3.value - 5.0) < 5e-3);
    CHECK(std::abs(r3.value - 5.0) < 5.0 * r3.abs_error + 1e-12);

    // oscillatory
    auto r4 = integrate([](double x) { return std::cos(10.0 * x); }, 0.0, 2.0);
    CHECK(std::abs(r4.value - std::sin(20.0) / 10.0) < 1e-12);
}

TEST_CASE("Gauss-Legendre exactness") {
    Rule1D r = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {
        double s = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], k);
        double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
        CHECK(std::abs(s - exact) < 1e-13);
    }
}

TEST_CASE("Gauss-Jacobi exactness against Beta moments") {
    double alpha = 0.75, beta = -0.25;
    Rule1D r = gauss_jacobi(10, alpha, beta);
    for (int k = 0; k <= 19; ++k) {
        double s = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(0.5 * (1.0 + r.nodes[i]), k);
        // int (1-x)^a (1+x)^b ((1+x)/2)^k dx = 2^{a+b+1} B(a+1, b+k+1)
        double exact = std::pow(2.0, alpha + beta + 1.0)
            * riesz::specfun::gamma(alpha + 1.0) * riesz::specfun::gamma(beta + k + 1.0)
            * riesz::specfun::rgamma(alpha + beta + k + 2.0);
        CHECK(std::abs(s - exact) < 1e-12 * std::abs(exact) + 1e-14);
    }
}

TEST_CASE("Gauss-Jacobi symmetric weight has symmetric nodes") {
    Rule1D r = gauss_jacobi(9, 1.5, 1.5);
    size_t n = r.nodes.size();
    for (size_t i = 0; i < n / 2; ++i) {
        CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);
        CHECK(r.weights[i] == r.weights[n - 1 - i]);
    }
    CHECK(r.nodes[n / 2] == 0.0);
}

TEST_CASE("interval mapping") {
    Rule1D r = map_to_interval(gauss_legendre(12), 1.0, 4.0);
    double s = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * r.nodes[i] * r.nodes[i];
    CHECK(std::abs(s - 21.0) < 1e-12);
}
