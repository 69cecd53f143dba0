#include "riesz/harmonics.hpp"
#include "riesz/error.hpp"
#include "riesz/squad.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace riesz::harmonics {

namespace {

using Exp = std::array<int, 7>;

std::vector<Exp> monomials_of_degree(int d, int n) {
    std::vector<Exp> out;
    Exp e{};
    // lexicographic, first variable weighted highest
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == d - 1) {
            e[var] = remaining;
            out.push_back(e);
            e[var] = 0;
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[var] = k;
            rec(var + 1, remaining - k);
        }
        e[var] = 0;
    };
    rec(0, n);
    return out;
}

long index_of(const std::vector<Exp>& list, const Exp& e) {
    auto it = std::lower_bound(list.begin(), list.end(), e,
                               [](const Exp& a, const Exp& b) { return a > b; });
    if (it == list.end() || *it != e) return -1;
    return it - list.begin();
}

// moments cache: exponent tuple -> integral over the sphere
double sphere_moment(int d, const Exp& e, std::map<Exp, double>& cache) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    std::vector<int> p(e.begin(), e.begin() + d);
    double v = squad::monomial_moment(d, p);
    cache.emplace(e, v);
    return v;
}

double inner_product(int d, const Polynomial& p, const Polynomial& q,
                     std::map<Exp, double>& cache) {
    double s = 0.0;
    for (const auto& mp : p)
        for (const auto& mq : q) {
            Exp e;
            for (int k = 0; k < 7; ++k) e[k] = mp.exp[k] + mq.exp[k];
            s += mp.coeff * mq.coeff * sphere_moment(d, e, cache);
        }
    return s;
}

void scale(Polynomial& p, double c) {
    for (auto& m : p) m.coeff *= c;
}

void axpy(Polynomial& p, double c, const Polynomial& q) {
    // p += c q; structure of p and q is the shared monomial list order
    for (const auto& mq : q) {
        bool found = false;
        for (auto& mp : p)
            if (mp.exp == mq.exp) {
                mp.coeff += c * mq.coeff;
                found = true;
                break;
            }
        if (!found)
            p.push_back({c * mq.coeff, mq.exp});
    }
}

void drop_tiny(Polynomial& p) {
    double maxc = 0.0;
    for (const auto& m : p) maxc = std::max(maxc, std::abs(m.coeff));
    std::erase_if(p, [&](const Monomial& m) { return std::abs(m.coeff) < 1e-14 * maxc; });
}

std::vector<Polynomial> build_degree(int d, int n) {
    if (n == 0) {
        Polynomial c{{1.0 / std::sqrt(squad::monomial_moment(d, std::vector<int>(d, 0))), Exp{}}};
        return {c};
    }
    std::vector<Exp> mono_n = monomials_of_degree(d, n);
    std::vector<Exp> mono_m = monomials_of_degree(d, n - 2);
    // descending-lexicographic order is what monomials_of_degree produces
    std::sort(mono_n.begin(), mono_n.end(), std::greater<>());
    std::sort(mono_m.begin(), mono_m.end(), std::greater<>());

    const size_t rows = mono_m.size(), cols = mono_n.size();
    std::vector<std::vector<double>> A(rows, std::vector<double>(cols, 0.0));
    for (size_t c = 0; c < cols; ++c) {
        const Exp& e = mono_n[c];
        for (int i = 0; i < d; ++i) {
            if (e[i] < 2) continue;
            Exp e2 = e;
            e2[i] -= 2;
            long r = index_of(mono_m, e2);
            A[r][c] += e[i] * (e[i] - 1.0);
        }
    }

    // row echelon with partial pivoting; free columns span the kernel
    std::vector<long> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t best = row;
        for (size_t i = row + 1; i < rows; ++i)
            if (std::abs(A[i][col]) > std::abs(A[best][col])) best = i;
        if (std::abs(A[best][col]) < 1e-9) continue;
        std::swap(A[best], A[row]);
        double inv = 1.0 / A[row][col];
        for (size_t c = col; c < cols; ++c) A[row][c] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row) continue;
            double f = A[i][col];
            if (f == 0.0) continue;
            for (size_t c = col; c < cols; ++c) A[i][c] -= f * A[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (long pc : pivot_col) is_pivot[pc] = true;

    std::vector<Polynomial> kernel;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Polynomial p;
        p.push_back({1.0, mono_n[fc]});
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            double v = -A[r][fc];
            if (std::abs(v) > 1e-13)
                p.push_back({v, mono_n[pivot_col[r]]});
        }
        kernel.push_back(std::move(p));
    }

    int expect = harmonic_space_dim(d, n);
    if (static_cast<int>(kernel.size()) != expect)
        throw Error(ErrorCode::Internal,
                    "harmonic basis: kernel dimension " + std::to_string(kernel.size())
                    + " != " + std::to_string(expect));

    // modified Gram-Schmidt in L^2(S^{d-1})
    std::map<Exp, double> cache;
    std::vector<Polynomial> basis;
    for (auto& cand : kernel) {
        Polynomial p = std::move(cand);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) {
                double c = inner_product(d, p, q, cache);
                axpy(p, -c, q);
            }
        double nrm = std::sqrt(inner_product(d, p, p, cache));
        scale(p, 1.0 / nrm);
        drop_tiny(p);
        basis.push_back(std::move(p));
    }
    return basis;
}

std::mutex g_mutex;
std::map<std::pair<int, int>, std::unique_ptr<HarmonicBasis>> g_cache;

} // namespace

int harmonic_space_dim(int d, int n) {
    if (n == 0) return 1;
    auto binom = [](int a, int b) {
        if (b < 0 || b > a) return 0.0;
        double r = 1.0;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    return static_cast<int>(std::lround(binom(n + d - 1, d - 1) - binom(n + d - 3, d - 1)));
}

int max_degree(int d) {
    if (d <= 3) return 8;
    if (d == 4) return 6;
    return 4;
}

HarmonicBasis::HarmonicBasis(int d, int nmax) : d_(d), nmax_(nmax) {
    for (int n = 0; n <= nmax; n += 2)
        by_degree_.push_back(build_degree(d, n));
}

const HarmonicBasis& HarmonicBasis::get(int d, int nmax) {
    if (d < 2 || d > 7)
        throw DomainError("HarmonicBasis: d must lie in [2, 7]");
    if (nmax % 2 != 0 || nmax < 0)
        throw InvalidArgument("HarmonicBasis: nmax must be even and >= 0");
    if (nmax > max_degree(d))
        throw InvalidArgument("HarmonicBasis: degree " + std::to_string(nmax)
                              + " exceeds the supported cap " + std::to_string(max_degree(d))
                              + " for d = " + std::to_string(d));
    std::lock_guard<std::mutex> lock(g_mutex);
    auto key = std::make_pair(d, nmax);
    auto it = g_cache.find(key);
    if (it == g_cache.end())
        it = g_cache.emplace(key, std::unique_ptr<HarmonicBasis>(new HarmonicBasis(d, nmax))).first;
    return *it->second;
}

int HarmonicBasis::count(int n) const {
    if (n % 2 != 0 || n < 0 || n > nmax_)
        throw InvalidArgument("HarmonicBasis::count: degree out of range");
    return static_cast<int>(by_degree_[n / 2].size());
}

const Polynomial& HarmonicBasis::polynomial(int n, int m) const {
    if (n % 2 != 0 || n < 0 || n > nmax_)
        throw InvalidArgument("HarmonicBasis: degree out of range");
    const auto& fns = by_degree_[n / 2];
    if (m < 0 || m >= static_cast<int>(fns.size()))
        throw InvalidArgument("HarmonicBasis: index m out of range for degree "
                              + std::to_string(n));
    return fns[m];
}

double HarmonicBasis::evaluate(int n, int m, const double* omega) const {
    return evaluate_solid(n, m, omega);
}

double HarmonicBasis::evaluate_solid(int n, int m, const double* x) const {
    const Polynomial& p = polynomial(n, m);
    double s = 0.0;
    for (const auto& mono : p) {
        double t = mono.coeff;
        for (int k = 0; k < d_; ++k)
            for (int j = 0; j < mono.exp[k]; ++j) t *= x[k];
        s += t;
    }
    return s;
}

void HarmonicBasis::gradient_solid(int n, int m, const double* x, double* grad) const {
    const Polynomial& p = polynomial(n, m);
    for (int k = 0; k < d_; ++k) grad[k] = 0.0;
    for (const auto& mono : p) {
        for (int k = 0; k < d_; ++k) {
            if (mono.exp[k] == 0) continue;
            double t = mono.coeff * mono.exp[k];
            for (int j = 0; j < d_; ++j) {
                int e = mono.exp[j] - (j == k ? 1 : 0);
                for (int i = 0; i < e; ++i) t *= x[j];
            }
            grad[k] += t;
        }
    }
}

} // namespace riesz::harmonics
