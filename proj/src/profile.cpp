#include "riesz/profile.hpp"
#include "riesz/error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>

namespace riesz::profile {

using harmonics::HarmonicBasis;

namespace {
int basis_max_of(const std::vector<HarmonicCoefficient>& coeffs) {
    int nmax = 0;
    for (const auto& c : coeffs) nmax = std::max(nmax, c.n);
    return nmax;
}
} // namespace

struct Profile::Impl {
    Homogeneity h;
    std::vector<HarmonicCoefficient> coeffs;  // physical side, empty for samplers
    Sampler fourier_fn;                       // set for sampler profiles
    Sampler physical_fn;
    double fourier_shift = 0.0;               // additive constant on the Fourier side
    double fit_residual = 0.0;

    explicit Impl(const Homogeneity& hh) : h(hh) {}

    bool harmonic() const { return !coeffs.empty() || !fourier_fn; }
};

Profile::Profile(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Profile Profile::from_harmonics(const Homogeneity& h,
                                std::vector<HarmonicCoefficient> coeffs) {
    auto impl = std::make_shared<Impl>(h);
    int nmax = 0;
    for (const auto& c : coeffs) {
        if (c.n % 2 != 0)
            throw InvalidArgument("Profile: odd harmonic degree " + std::to_string(c.n)
                                  + " violates evenness");
        nmax = std::max(nmax, c.n);
    }
    const auto& basis = HarmonicBasis::get(h.d, nmax);
    for (const auto& c : coeffs)
        if (c.m < 0 || c.m >= basis.count(c.n))
            throw InvalidArgument("Profile: harmonic index (" + std::to_string(c.n) + ","
                                  + std::to_string(c.m) + ") out of range");
    impl->coeffs = std::move(coeffs);

    // the profile must be strictly positive on the sphere
    Profile p(impl);
    auto rule = squad::build_rule(h.d, std::min(squad::default_order(h.d), 24));
    for (size_t i = 0; i < rule.size(); ++i)
        if (p.physical(rule.node(i)) <= 0.0)
            throw InvalidArgument("Profile: physical side not strictly positive on the sphere");
    return p;
}

Profile Profile::from_fourier_sampler(const Homogeneity& h, Sampler fourier,
                                      Sampler physical) {
    if (!fourier)
        throw InvalidArgument("Profile: null Fourier sampler");
    auto impl = std::make_shared<Impl>(h);
    impl->fourier_fn = std::move(fourier);
    impl->physical_fn = std::move(physical);
    return Profile(impl);
}

Profile Profile::from_fourier_table(const Homogeneity& h,
                                    const std::vector<std::vector<double>>& nodes,
                                    const std::vector<double>& values, int nmax) {
    if (nodes.size() != values.size() || nodes.empty())
        throw InvalidArgument("Profile: table nodes/values size mismatch");
    const auto& basis = HarmonicBasis::get(h.d, nmax);

    std::vector<std::pair<int, int>> index;
    for (int n = 0; n <= nmax; n += 2)
        for (int m = 0; m < basis.count(n); ++m)
            index.emplace_back(n, m);

    Eigen::MatrixXd A(nodes.size(), index.size());
    Eigen::VectorXd y(values.size());
    for (size_t r = 0; r < nodes.size(); ++r) {
        if (static_cast<int>(nodes[r].size()) != h.d)
            throw InvalidArgument("Profile: table node has wrong dimension");
        std::vector<double> w = nodes[r];
        double nn = 0.0;
        for (double v : w) nn += v * v;
        nn = std::sqrt(nn);
        if (std::abs(nn - 1.0) > 1e-6)
            throw InvalidArgument("Profile: table node not on the unit sphere");
        for (double& v : w) v /= nn;
        for (size_t c = 0; c < index.size(); ++c)
            A(r, c) = basis.evaluate(index[c].first, index[c].second, w.data());
        y(r) = values[r];
    }
    Eigen::VectorXd x = A.colPivHouseholderQr().solve(y);
    double resid = (A * x - y).norm() / std::max(1.0, y.norm());

    // table values are Fourier-side: divide by the multiplier to store the
    // physical-side coefficients
    std::vector<HarmonicCoefficient> coeffs;
    for (size_t c = 0; c < index.size(); ++c) {
        double b = specfun::fourier_multiplier(index[c].first, h);
        if (std::abs(x(c)) > 1e-14)
            coeffs.push_back({index[c].first, index[c].second, x(c) / b});
    }
    auto impl = std::make_shared<Impl>(h);
    impl->coeffs = std::move(coeffs);
    impl->fit_residual = resid;
    return Profile(impl);
}

double Profile::fourier(const double* omega) const {
    const Impl& im = *impl_;
    double v = im.fourier_shift;
    if (im.fourier_fn) {
        v += im.fourier_fn(omega);
    } else {
        const auto& basis = HarmonicBasis::get(im.h.d, basis_max_of(im.coeffs));
        for (const auto& c : im.coeffs)
            v += c.value * specfun::fourier_multiplier(c.n, im.h)
               * basis.evaluate(c.n, c.m, omega);
    }
    return v;
}

bool Profile::has_physical() const {
    return !impl_->coeffs.empty() || static_cast<bool>(impl_->physical_fn);
}

double Profile::physical(const double* omega) const {
    const Impl& im = *impl_;
    double shift = im.fourier_shift / specfun::kernel_constants(im.h).b_sd;
    if (!im.coeffs.empty()) {
        const auto& basis = HarmonicBasis::get(im.h.d, basis_max_of(im.coeffs));
        double v = shift;
        for (const auto& c : im.coeffs)
            v += c.value * basis.evaluate(c.n, c.m, omega);
        return v;
    }
    if (im.physical_fn)
        return im.physical_fn(omega) + shift;
    throw InvalidArgument("Profile: physical side not available; synthesize first");
}

double Profile::physical_solid(const double* x, double* grad) const {
    const Impl& im = *impl_;
    if (im.coeffs.empty())
        throw InvalidArgument("Profile: physical_solid requires a harmonic representation");
    int d = im.h.d;
    double r2 = 0.0;
    for (int k = 0; k < d; ++k) r2 += x[k] * x[k];
    double r = std::sqrt(r2);
    if (r == 0.0)
        throw InvalidArgument("Profile: physical_solid undefined at the origin");

    const auto& basis = HarmonicBasis::get(d, basis_max_of(im.coeffs));
    double value = im.fourier_shift / specfun::kernel_constants(im.h).b_sd;
    if (grad)
        for (int k = 0; k < d; ++k) grad[k] = 0.0;
    double g[7];
    for (const auto& c : im.coeffs) {
        double rpow = std::pow(r, -c.n);
        double p = basis.evaluate_solid(c.n, c.m, x);
        value += c.value * p * rpow;
        if (grad) {
            basis.gradient_solid(c.n, c.m, x, g);
            // grad of p(x) |x|^{-n} = (grad p) |x|^{-n} - n p x |x|^{-n-2}
            for (int k = 0; k < d; ++k)
                grad[k] += c.value * rpow * (g[k] - c.n * p * x[k] / r2);
        }
    }
    return value;
}

Profile Profile::synthesized(const squad::SphereRule& rule, int nmax) const {
    const Impl& im = *impl_;
    if (!im.coeffs.empty()) return *this;
    const auto& basis = HarmonicBasis::get(im.h.d, nmax);
    std::vector<HarmonicCoefficient> coeffs;
    double norm2 = 0.0, resid2 = 0.0;
    std::vector<double> fvals(rule.size());
    for (size_t i = 0; i < rule.size(); ++i) {
        fvals[i] = fourier(rule.node(i));
        norm2 += rule.weights[i] * fvals[i] * fvals[i];
    }
    std::vector<double> fit(rule.size(), 0.0);
    for (int n = 0; n <= nmax; n += 2)
        for (int m = 0; m < basis.count(n); ++m) {
            double proj = 0.0;
            for (size_t i = 0; i < rule.size(); ++i)
                proj += rule.weights[i] * fvals[i] * basis.evaluate(n, m, rule.node(i));
            if (std::abs(proj) > 1e-14) {
                double b = specfun::fourier_multiplier(n, im.h);
                coeffs.push_back({n, m, proj / b});
                for (size_t i = 0; i < rule.size(); ++i)
                    fit[i] += proj * basis.evaluate(n, m, rule.node(i));
            }
        }
    for (size_t i = 0; i < rule.size(); ++i)
        resid2 += rule.weights[i] * (fvals[i] - fit[i]) * (fvals[i] - fit[i]);

    auto impl = std::make_shared<Impl>(im.h);
    impl->coeffs = std::move(coeffs);
    impl->fit_residual = std::sqrt(resid2 / std::max(norm2, 1e-300));
    return Profile(impl);
}

const Homogeneity& Profile::homogeneity() const { return impl_->h; }
int Profile::dimension() const { return impl_->h.d; }
bool Profile::has_harmonics() const { return !impl_->coeffs.empty(); }

const std::vector<HarmonicCoefficient>& Profile::harmonics() const {
    if (impl_->coeffs.empty())
        throw InvalidArgument("Profile: no harmonic representation");
    return impl_->coeffs;
}

double Profile::fit_residual() const { return impl_->fit_residual; }

Profile Profile::fourier_shifted(double eps) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->fourier_shift += eps;
    return Profile(impl);
}

AuditResult positivity_audit(const Profile& p, const squad::SphereRule& rule, double tol) {
    AuditResult out;
    int d = rule.d;
    out.min_value = std::numeric_limits<double>::infinity();
    size_t best = 0;
    for (size_t i = 0; i < rule.size(); ++i) {
        double v = p.fourier(rule.node(i));
        if (v < out.min_value) {
            out.min_value = v;
            best = i;
        }
    }
    // local refinement: quadratic line fits along a tangent frame at the
    // current point, repeated with shrinking step
    std::vector<double> x(rule.node(best), rule.node(best) + d);
    auto normalize = [&](std::vector<double>& v) {
        double nn = 0.0;
        for (double c : v) nn += c * c;
        nn = std::sqrt(nn);
        for (double& c : v) c /= nn;
    };
    auto eval = [&](const std::vector<double>& v) { return p.fourier(v.data()); };
    double step = 3.0 / std::max(4, rule.order);
    std::vector<double> y(d);
    for (int round = 0; round < 60 && step > 1e-10; ++round) {
        // tangent frame: coordinate axes projected off x
        bool moved = false;
        for (int k = 0; k < d; ++k) {
            std::vector<double> t(d, 0.0);
            for (int j = 0; j < d; ++j) t[j] = (j == k ? 1.0 : 0.0) - x[k] * x[j];
            double tn = 0.0;
            for (double c : t) tn += c * c;
            if (tn < 1e-12) continue;
            tn = std::sqrt(tn);
            for (double& c : t) c /= tn;
            double f0 = out.min_value;
            std::vector<std::pair<double, std::vector<double>>> cand;
            for (double dir : {1.0, -1.0}) {
                for (int j = 0; j < d; ++j) y[j] = x[j] + dir * step * t[j];
                normalize(y);
                cand.emplace_back(eval(y), y);
            }
            // parabola vertex through (-1, fm), (0, f0), (1, fp)
            double fp = cand[0].first, fm = cand[1].first;
            double denom = fp - 2.0 * f0 + fm;
            if (denom > 1e-300) {
                double move = std::clamp(0.5 * (fm - fp) / denom, -2.0, 2.0);
                for (int j = 0; j < d; ++j) y[j] = x[j] + move * step * t[j];
                normalize(y);
                cand.emplace_back(eval(y), y);
            }
            for (auto& [v, pt] : cand)
                if (v < out.min_value) {
                    out.min_value = v;
                    x = pt;
                    moved = true;
                }
        }
        if (!moved) step *= 0.35;
    }
    out.argmin = x;
    out.strict = out.min_value > tol;
    return out;
}

HomotopyProfile::HomotopyProfile(const Profile& base, double t) : base_(base), t_(t) {
    if (t < 0.0 || t > 1.0)
        throw InvalidArgument("HomotopyProfile: t outside [0, 1]");
}

double HomotopyProfile::fourier(const double* omega) const {
    return t_ * base_.fourier(omega) + (1.0 - t_);
}

HomotopyProfile homotopy(const Profile& p, double t) {
    return HomotopyProfile(p, t);
}

} // namespace riesz::profile
