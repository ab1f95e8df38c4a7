// Operator-valued relative entropy functionals over pairs of strictly
// positive matrices: the power mean A natural_lambda B, the Tsallis relative
// operator entropy, the (generalized) relative operator entropy, the
// two-parameter difference-quotient family that interpolates between them,
// and the scalar quantum Tsallis divergence on density matrices.
//
// All functionals of one (A,B) pair are evaluated through a single spectral
// decomposition of X = A^(-1/2) B A^(-1/2); OperatorPair exposes that shared
// context so chains of functionals at many parameter values stay internally
// consistent to rounding.
#pragma once

#include "relent/eigen.hpp"
#include "relent/matrix.hpp"

namespace relent {

// Parameter bundle for the functionals: exponent lambda, base offset mu,
// ladder index k, and the divergence order q.
struct EntropyParams {
    double lambda = 0.5;
    double mu = 0.0;
    int k = 1;
    double q = 0.5;
};

enum class LambdaRange {
    Standard,  // lambda restricted to (0,1]
    Relaxed,   // any lambda != 0
};

// Strictly positive matrix with unit trace (within 1e-12).
class DensityMatrix {
public:
    explicit DensityMatrix(HermitianMatrix m);
    const HermitianMatrix& matrix() const noexcept { return m_; }
    int dim() const noexcept { return m_.dim(); }

private:
    HermitianMatrix m_;
};

// Shared spectral context for one pair of strictly positive matrices.
class OperatorPair {
public:
    OperatorPair(const HermitianMatrix& a, const HermitianMatrix& b);

    int dim() const noexcept { return a_.dim(); }

    // A natural_lambda B = A^(1/2) X^lambda A^(1/2); exact at the endpoints
    // (lambda = 0 gives A, lambda = 1 gives B).
    HermitianMatrix naturalPower(double lambda) const;

    // (A natural_lambda B - A)/lambda through the kernel expm1(l ln x)/l.
    HermitianMatrix tsallisEntropy(double lambda, LambdaRange range = LambdaRange::Standard) const;

    // A^(1/2) (ln X) A^(1/2).
    HermitianMatrix relativeEntropy() const;

    // A^(1/2) X^lambda (ln X) A^(1/2); lambda = 0 reduces to relativeEntropy.
    HermitianMatrix generalizedRelativeEntropy(double lambda) const;

    // (A natural_(mu+k l) B - A natural_(mu+(k-1) l) B)/l for l != 0,
    // evaluated as x^(mu+(k-1)l) expm1(l ln x)/l on the spectrum of X.
    HermitianMatrix generalizedTsallis(double mu, int k, double lambda) const;

private:
    HermitianMatrix kernelApply(const std::function<double(double)>& g) const;

    HermitianMatrix a_, b_;
    std::vector<double> sqrtA_;  // raw n x n buffer of A^(1/2)
    EigenDecomposition xEig_;    // spectrum of X = A^(-1/2) B A^(-1/2)
};

// One-shot wrappers over OperatorPair.
HermitianMatrix naturalPower(const HermitianMatrix& a, const HermitianMatrix& b, double lambda);
HermitianMatrix tsallisOperatorEntropy(const HermitianMatrix& a, const HermitianMatrix& b,
                                       double lambda, LambdaRange range = LambdaRange::Standard);
HermitianMatrix relativeOperatorEntropy(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix generalizedROE(const HermitianMatrix& a, const HermitianMatrix& b, double lambda);
HermitianMatrix generalizedTsallisEntropy(const HermitianMatrix& a, const HermitianMatrix& b,
                                          double mu, int k, double lambda);

// (1 - trace(rho^q sigma^(1-q)))/(1 - q) for 0 <= q < 1.
double quantumTsallisDivergence(const DensityMatrix& rho, const DensityMatrix& sigma, double q);

} // namespace relent
