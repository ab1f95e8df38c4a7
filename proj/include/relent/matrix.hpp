// Dense real symmetric matrices, row-major, with the small set of exact
// algebraic operations the entropy functionals need.  Dimensions stay tiny
// (<= 16), so everything is plain triple-loop arithmetic; results that are
// symmetric in exact arithmetic are re-symmetrized to keep rounding from
// leaking asymmetry into later spectral steps.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace relent {

class HermitianMatrix {
public:
    // Zero matrix of dimension n.
    explicit HermitianMatrix(int n) : n_(checkDim(n)), a_(static_cast<size_t>(n) * n, 0.0) {}

    // Takes row-major entries and stores the symmetric part (a_ij + a_ji)/2.
    // Entries must be finite.
    HermitianMatrix(int n, std::vector<double> rowMajor) : n_(checkDim(n)), a_(std::move(rowMajor)) {
        if (a_.size() != static_cast<size_t>(n_) * n_)
            throw std::invalid_argument("HermitianMatrix: entry count does not match dimension");
        for (double v : a_)
            if (!std::isfinite(v))
                throw std::invalid_argument("HermitianMatrix: non-finite entry");
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                const double s = 0.5 * (at(i, j) + at(j, i));
                at(i, j) = s;
                at(j, i) = s;
            }
    }

    static HermitianMatrix identity(int n) {
        HermitianMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    static HermitianMatrix diagonal(const std::vector<double>& d) {
        HermitianMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    int dim() const noexcept { return n_; }

    double operator()(int i, int j) const noexcept { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<double>& data() const noexcept { return a_; }

    double maxAbs() const noexcept {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double trace() const noexcept {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    static int checkDim(int n) {
        if (n < 1) throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
        return n;
    }
    double& at(int i, int j) noexcept { return a_[static_cast<size_t>(i) * n_ + j]; }

    int n_;
    std::vector<double> a_;

    friend HermitianMatrix operator+(const HermitianMatrix&, const HermitianMatrix&);
    friend HermitianMatrix operator-(const HermitianMatrix&, const HermitianMatrix&);
    friend HermitianMatrix operator*(double, const HermitianMatrix&);
};

inline void requireSameDim(const HermitianMatrix& x, const HermitianMatrix& y, const char* what) {
    if (x.dim() != y.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch: " +
                                    std::to_string(x.dim()) + "x" + std::to_string(x.dim()) + " vs " +
                                    std::to_string(y.dim()) + "x" + std::to_string(y.dim()));
}

inline HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    requireSameDim(x, y, "operator+");
    HermitianMatrix r(x.dim());
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

inline HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    requireSameDim(x, y, "operator-");
    HermitianMatrix r(x.dim());
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

inline HermitianMatrix operator*(double c, const HermitianMatrix& x) {
    HermitianMatrix r(x.dim());
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = c * x.a_[i];
    return r;
}

// Largest |x_ij - y_ij|; the metric used by all closeness checks.
inline double maxAbsDiff(const HermitianMatrix& x, const HermitianMatrix& y) {
    requireSameDim(x, y, "maxAbsDiff");
    double m = 0.0;
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

namespace detail {

// C = A * B on raw row-major n x n buffers.
inline std::vector<double> matmul(int n, const double* a, const double* b) {
    std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a[static_cast<size_t>(i) * n + k];
            if (aik == 0.0) continue;
            const double* brow = b + static_cast<size_t>(k) * n;
            double* crow = c.data() + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    return c;
}

inline void symmetrizeInPlace(int n, std::vector<double>& a) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double s = 0.5 * (a[static_cast<size_t>(i) * n + j] + a[static_cast<size_t>(j) * n + i]);
            a[static_cast<size_t>(i) * n + j] = s;
            a[static_cast<size_t>(j) * n + i] = s;
        }
}

// sym(L * H * L) for raw buffers; the workhorse behind congruence and the
// spectral sandwich transforms.
//
// Each entry is the full double sum sum_{k,m} l_ik h_km l_mj, accumulated with
// error-free FMA products and Neumaier compensation.  Rounding stays near
// eps^2 * sum|l h l| instead of eps * ||L H||, so entries small relative to
// the intermediate product — congruences that nearly cancel, small
// eigenvalues of A^{-1/2} B A^{-1/2} — survive.  Dimensions here are tiny, so
// the O(n^4) entry cost is irrelevant.
inline std::vector<double> sandwich(int n, const double* l, const double* h) {
    std::vector<double> r(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double sum = 0.0, comp = 0.0;
            auto add = [&](double x) {
                const double t = sum + x;
                comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
                sum = t;
            };
            for (int k = 0; k < n; ++k) {
                const double lik = l[static_cast<size_t>(i) * n + k];
                if (lik == 0.0) continue;
                const double* hrow = h + static_cast<size_t>(k) * n;
                for (int m = 0; m < n; ++m) {
                    const double lmj = l[static_cast<size_t>(m) * n + j];
                    if (hrow[m] == 0.0 || lmj == 0.0) continue;
                    const double p1 = lik * hrow[m];
                    const double e1 = std::fma(lik, hrow[m], -p1);
                    const double p2 = p1 * lmj;
                    add(p2);
                    add(std::fma(p1, lmj, -p2));
                    add(e1 * lmj);
                }
            }
            const double v = sum + comp;
            r[static_cast<size_t>(i) * n + j] = v;
            r[static_cast<size_t>(j) * n + i] = v;
        }
    return r;
}

} // namespace detail

// C * H * C, re-symmetrized.  C and H must share dimensions.
inline HermitianMatrix congruence(const HermitianMatrix& c, const HermitianMatrix& h) {
    requireSameDim(c, h, "congruence");
    return HermitianMatrix(c.dim(), detail::sandwich(c.dim(), c.data().data(), h.data().data()));
}

} // namespace relent
