#include "relent/operator_entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace relent {

namespace {

constexpr double kTraceTol = 1e-12;

void requireNonzeroLambda(double lambda, const char* what) {
    if (lambda == 0.0 || !std::isfinite(lambda))
        throw std::invalid_argument(std::string(what) + ": lambda must be nonzero and finite");
}

} // namespace

DensityMatrix::DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {
    requireStrictlyPositive(m_, "density matrix");
    if (std::abs(m_.trace() - 1.0) > kTraceTol)
        throw std::invalid_argument("density matrix trace must be 1 within 1e-12");
}

OperatorPair::OperatorPair(const HermitianMatrix& a, const HermitianMatrix& b) : a_(a), b_(b) {
    requireSameDim(a, b, "OperatorPair");
    EigenDecomposition eigA = requireStrictlyPositive(a, "A");
    requireStrictlyPositive(b, "B");

    sqrtA_ = reconstruct(eigA, [](double t) { return std::sqrt(t); }).data();
    const std::vector<double> invSqrtA =
        reconstruct(eigA, [](double t) { return 1.0 / std::sqrt(t); }).data();

    const int n = a.dim();
    HermitianMatrix x(n, detail::sandwich(n, invSqrtA.data(), b.data().data()));
    xEig_ = eigh(x);
    if (xEig_.eigenvalues.front() <= 0.0)
        throw std::domain_error("OperatorPair: A^(-1/2) B A^(-1/2) lost positivity; "
                                "operands too ill-conditioned");
}

HermitianMatrix OperatorPair::kernelApply(const std::function<double(double)>& g) const {
    const HermitianMatrix inner = reconstruct(xEig_, g);
    return HermitianMatrix(a_.dim(), detail::sandwich(a_.dim(), sqrtA_.data(), inner.data().data()));
}

HermitianMatrix OperatorPair::naturalPower(double lambda) const {
    if (!std::isfinite(lambda)) throw std::invalid_argument("naturalPower: lambda must be finite");
    if (lambda == 0.0) return a_;
    if (lambda == 1.0) return b_;
    return kernelApply([lambda](double x) { return std::pow(x, lambda); });
}

HermitianMatrix OperatorPair::tsallisEntropy(double lambda, LambdaRange range) const {
    requireNonzeroLambda(lambda, "tsallisEntropy");
    if (range == LambdaRange::Standard && (lambda < 0.0 || lambda > 1.0))
        throw std::invalid_argument("tsallisEntropy: lambda must be in (0,1]");
    return kernelApply([lambda](double x) { return std::expm1(lambda * std::log(x)) / lambda; });
}

HermitianMatrix OperatorPair::relativeEntropy() const {
    return kernelApply([](double x) { return std::log(x); });
}

HermitianMatrix OperatorPair::generalizedRelativeEntropy(double lambda) const {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("generalizedRelativeEntropy: lambda must be finite");
    return kernelApply([lambda](double x) { return std::pow(x, lambda) * std::log(x); });
}

HermitianMatrix OperatorPair::generalizedTsallis(double mu, int k, double lambda) const {
    requireNonzeroLambda(lambda, "generalizedTsallis");
    if (!std::isfinite(mu)) throw std::invalid_argument("generalizedTsallis: mu must be finite");
    const double base = mu + (k - 1) * lambda;
    return kernelApply([base, lambda](double x) {
        return std::pow(x, base) * std::expm1(lambda * std::log(x)) / lambda;
    });
}

HermitianMatrix naturalPower(const HermitianMatrix& a, const HermitianMatrix& b, double lambda) {
    return OperatorPair(a, b).naturalPower(lambda);
}

HermitianMatrix tsallisOperatorEntropy(const HermitianMatrix& a, const HermitianMatrix& b,
                                       double lambda, LambdaRange range) {
    return OperatorPair(a, b).tsallisEntropy(lambda, range);
}

HermitianMatrix relativeOperatorEntropy(const HermitianMatrix& a, const HermitianMatrix& b) {
    return OperatorPair(a, b).relativeEntropy();
}

HermitianMatrix generalizedROE(const HermitianMatrix& a, const HermitianMatrix& b, double lambda) {
    return OperatorPair(a, b).generalizedRelativeEntropy(lambda);
}

HermitianMatrix generalizedTsallisEntropy(const HermitianMatrix& a, const HermitianMatrix& b,
                                          double mu, int k, double lambda) {
    return OperatorPair(a, b).generalizedTsallis(mu, k, lambda);
}

double quantumTsallisDivergence(const DensityMatrix& rho, const DensityMatrix& sigma, double q) {
    requireSameDim(rho.matrix(), sigma.matrix(), "quantumTsallisDivergence");
    if (!(q >= 0.0) || q >= 1.0)
        throw std::invalid_argument("quantumTsallisDivergence: q must be in [0,1)");

    const HermitianMatrix p = power(rho.matrix(), q);
    const HermitianMatrix s = power(sigma.matrix(), 1.0 - q);

    // trace(P S) for symmetric P, S is the entrywise dot product.
    double tr = 0.0;
    const int n = p.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr += p(i, j) * s(i, j);

    return (1.0 - tr) / (1.0 - q);
}

} // namespace relent
