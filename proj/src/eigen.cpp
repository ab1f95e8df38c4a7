#include "relent/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace relent {

namespace {

// A few units of machine epsilon: one cyclic sweep drives every off-diagonal
// to rounding level, so stopping just above that floor costs at most one or
// two extra sweeps and keeps small eigenvalues of graded matrices accurate.
constexpr double kOffDiagTol = 1e-15;
constexpr int kMaxSweeps = 128;

double maxOffDiagonal(int n, const std::vector<double>& a) {
    double m = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) m = std::max(m, std::abs(a[static_cast<size_t>(p) * n + q]));
    return m;
}

std::string formatValue(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

EigenDecomposition eigh(const HermitianMatrix& h) {
    const int n = h.dim();
    EigenDecomposition out;
    out.n = n;

    if (n == 1) {
        out.eigenvalues = {h(0, 0)};
        out.eigenvectors = {1.0};
        return out;
    }

    std::vector<double> a = h.data();
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    // Convergence is measured against the input's own magnitude so that large
    // and badly scaled matrices terminate at their attainable rounding floor.
    const double tol = kOffDiagTol * std::max(1.0, h.maxAbs());

    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    auto doSweep = [&] {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) < 1e-300) continue;

                const double theta = 0.5 * (A(q, q) - A(p, p)) / apq;
                double t;
                if (std::abs(theta) > 1e154) {
                    t = 0.5 / theta;  // avoids theta^2 overflow; exact limit of the formula
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;

                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = A(i, p);
                        const double aiq = A(i, q);
                        A(i, p) = aip - s * (aiq + tau * aip);
                        A(p, i) = A(i, p);
                        A(i, q) = aiq + s * (aip - tau * aiq);
                        A(q, i) = A(i, q);
                    }
                    const double vip = V(i, p);
                    const double viq = V(i, q);
                    V(i, p) = vip - s * (viq + tau * vip);
                    V(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
    };

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (maxOffDiagonal(n, a) < tol) {
            converged = true;
            break;
        }
        doSweep();
    }
    if (!converged && maxOffDiagonal(n, a) >= tol)
        throw std::runtime_error("eigh: Jacobi iteration did not converge within " +
                                 std::to_string(kMaxSweeps) + " sweeps");

    // Two polish sweeps past the threshold push the remaining off-diagonal
    // mass to the rounding floor; the threshold alone can leave just-below-tol
    // entries that still disturb eigenvectors of close or small eigenvalues.
    for (int i = 0; i < 2; ++i) doSweep();

    // The rotated diagonal reaches a small eigenvalue through long chains of
    // subtractions whose rounding is absolute in the matrix norm, while the
    // converged eigenvectors are accurate to rounding in their own right.  A
    // compensated Rayleigh quotient against the original matrix restores each
    // eigenvalue to the accuracy of its vector.
    const std::vector<double>& h0 = h.data();
    for (int k = 0; k < n; ++k) {
        double num = 0.0, numC = 0.0, den = 0.0, denC = 0.0;
        auto add = [](double& s, double& c, double x) {
            const double t = s + x;
            c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
            s = t;
        };
        for (int i = 0; i < n; ++i) {
            const double vik = V(i, k);
            for (int j = 0; j < n; ++j) {
                const double term = vik * h0[static_cast<size_t>(i) * n + j];
                const double err = std::fma(vik, h0[static_cast<size_t>(i) * n + j], -term);
                const double p = term * V(j, k);
                add(num, numC, p);
                add(num, numC, std::fma(term, V(j, k), -p));
                add(num, numC, err * V(j, k));
            }
            const double sq = vik * vik;
            add(den, denC, sq);
            add(den, denC, std::fma(vik, vik, -sq));
        }
        A(k, k) = (num + numC) / (den + denC);
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<size_t>(i) * n + i] < a[static_cast<size_t>(j) * n + j];
    });

    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        out.eigenvalues[static_cast<size_t>(k)] = a[static_cast<size_t>(src) * n + src];
        for (int i = 0; i < n; ++i)
            out.eigenvectors[static_cast<size_t>(i) * n + k] = v[static_cast<size_t>(i) * n + src];
    }
    return out;
}

HermitianMatrix reconstruct(const EigenDecomposition& eig, const std::function<double(double)>& f) {
    const int n = eig.n;
    std::vector<double> fx(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double y = f(eig.eigenvalues[static_cast<size_t>(k)]);
        if (!std::isfinite(y))
            throw std::domain_error("spectral function undefined at eigenvalue " +
                                    formatValue(eig.eigenvalues[static_cast<size_t>(k)]));
        fx[static_cast<size_t>(k)] = y;
    }

    // V diag(fx) V^T: scale columns of V, multiply by V^T, symmetrize.
    std::vector<double> scaled(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            scaled[static_cast<size_t>(i) * n + k] =
                eig.eigenvectors[static_cast<size_t>(i) * n + k] * fx[static_cast<size_t>(k)];

    std::vector<double> r(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += scaled[static_cast<size_t>(i) * n + k] *
                       eig.eigenvectors[static_cast<size_t>(j) * n + k];
            r[static_cast<size_t>(i) * n + j] = acc;
            r[static_cast<size_t>(j) * n + i] = acc;
        }
    return HermitianMatrix(n, std::move(r));
}

HermitianMatrix applySpectral(const HermitianMatrix& h, const std::function<double(double)>& f) {
    return reconstruct(eigh(h), f);
}

EigenDecomposition requireStrictlyPositive(const HermitianMatrix& h, const char* label) {
    EigenDecomposition eig = eigh(h);
    const double floor = positivityFloor(h.maxAbs());
    if (eig.eigenvalues.front() < floor)
        throw std::domain_error(std::string(label) + " not strictly positive: min eigenvalue " +
                                formatValue(eig.eigenvalues.front()));
    return eig;
}

HermitianMatrix power(const HermitianMatrix& h, double p) {
    if (!std::isfinite(p)) throw std::invalid_argument("power: exponent must be finite");
    if (p == 0.0) return HermitianMatrix::identity(h.dim());
    if (p == 1.0) return h;

    const bool needsPositive = p < 0.0 || p != std::floor(p);
    if (needsPositive) {
        EigenDecomposition eig = requireStrictlyPositive(h, "matrix");
        return reconstruct(eig, [p](double t) { return std::pow(t, p); });
    }
    return applySpectral(h, [p](double t) { return std::pow(t, p); });
}

HermitianMatrix logm(const HermitianMatrix& h) {
    EigenDecomposition eig = requireStrictlyPositive(h, "matrix");
    return reconstruct(eig, [](double t) { return std::log(t); });
}

double minEigenvalue(const HermitianMatrix& h) { return eigh(h).eigenvalues.front(); }

LoewnerResult loewnerLeq(const HermitianMatrix& x, const HermitianMatrix& y, double tol) {
    requireSameDim(x, y, "loewnerLeq");
    if (!(tol >= 0.0)) throw std::invalid_argument("loewnerLeq: tolerance must be >= 0");
    const double m = minEigenvalue(y - x);
    LoewnerResult r;
    r.scale = 1.0 + std::max(x.maxAbs(), y.maxAbs());
    r.violation = std::max(0.0, -m);
    r.holds = m >= -tol * r.scale;
    return r;
}

} // namespace relent
