#include "relent/scalar_entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace relent {

namespace {

constexpr double kSumTol = 1e-12;

// Shared kernel of both sign conventions: sum a_j expm1(t ln(b_j/a_j)) / t.
// Evaluating S_lambda and -D_(1-lambda) through the identical accumulation
// makes the sign-convention identity exact in floating point.
double relativeKernel(const ProbVector& a, const ProbVector& b, double t) {
    double acc = 0.0;
    for (int j = 0; j < a.size(); ++j) acc += a[j] * std::expm1(t * std::log(b[j] / a[j]));
    return acc / t;
}

} // namespace

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw std::invalid_argument("ProbVector: must have at least one component");
    double sum = 0.0;
    for (double v : p_) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("ProbVector: components must be strictly positive");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::invalid_argument("ProbVector: components must sum to 1 within 1e-12");
}

double qLog(double x, double q) {
    if (!(x > 0.0)) throw std::domain_error("qLog: argument must be strictly positive");
    if (q == 1.0) return std::log(x);
    return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

double tsallisEntropy(const ProbVector& p, double q) {
    if (!(q > 0.0)) throw std::invalid_argument("tsallisEntropy: q must be > 0");
    if (q == 1.0) {
        double acc = 0.0;
        for (int j = 0; j < p.size(); ++j) acc -= p[j] * std::log(p[j]);
        return acc;
    }
    double sum = 0.0;
    for (int j = 0; j < p.size(); ++j) sum += std::pow(p[j], q);
    return (sum - 1.0) / (1.0 - q);
}

double tsallisRelativeEntropy(const ProbVector& a, const ProbVector& b, double lambda) {
    if (a.size() != b.size())
        throw std::invalid_argument("tsallisRelativeEntropy: dimension mismatch");
    if (!(lambda > 0.0) || lambda > 1.0)
        throw std::invalid_argument("tsallisRelativeEntropy: lambda must be in (0,1]");
    return relativeKernel(a, b, lambda);
}

double klLowerBound(const ProbVector& a, const ProbVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("klLowerBound: dimension mismatch");
    double acc = 0.0;
    for (int j = 0; j < a.size(); ++j) acc += a[j] * std::log(b[j] / a[j]);
    return acc;
}

double renyi2LowerBound(const ProbVector& a, const ProbVector& b, double lambda) {
    if (a.size() != b.size()) throw std::invalid_argument("renyi2LowerBound: dimension mismatch");
    if (!(lambda > 0.0) || lambda > 1.0)
        throw std::invalid_argument("renyi2LowerBound: lambda must be in (0,1]");
    double collision = 0.0;
    for (int j = 0; j < a.size(); ++j) collision += a[j] * (a[j] / b[j]);
    return std::expm1(-lambda * std::log(collision)) / lambda;
}

double tsallisDivergence(const ProbVector& a, const ProbVector& b, double q) {
    if (a.size() != b.size()) throw std::invalid_argument("tsallisDivergence: dimension mismatch");
    if (!(q >= 0.0) || q == 1.0)
        throw std::invalid_argument("tsallisDivergence: q must be >= 0 and != 1");
    return -relativeKernel(a, b, 1.0 - q);
}

} // namespace relent
