// Scalar (probability-vector) entropy functionals: the deformed logarithm,
// Tsallis entropy, the two-parameter relative entropies in both sign
// conventions, and the closed-form lower bounds they obey.
#pragma once

#include <vector>

#include "relent/matrix.hpp"

namespace relent {

// Finite probability distribution: strictly positive components summing to 1
// within 1e-12.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> p);

    int size() const noexcept { return static_cast<int>(p_.size()); }
    double operator[](int i) const noexcept { return p_[static_cast<size_t>(i)]; }
    const std::vector<double>& values() const noexcept { return p_; }

private:
    std::vector<double> p_;
};

// Deformed logarithm ln_q(x) = (x^(1-q) - 1)/(1-q); ln_1 = ln.  Requires x > 0.
double qLog(double x, double q);

// Tsallis entropy (sum p^q - 1)/(1 - q) with the Shannon limit at q = 1.
// Requires q > 0.
double tsallisEntropy(const ProbVector& p, double q);

// Relative entropy (sum a^(1-l) b^l - 1)/l for 0 < l <= 1, evaluated in the
// cancellation-free form sum a_j expm1(l ln(b_j/a_j)) / l.
double tsallisRelativeEntropy(const ProbVector& a, const ProbVector& b, double lambda);

// sum a_j ln(b_j/a_j): the limit of tsallisRelativeEntropy as lambda -> 0 and
// a lower bound for it at every lambda in (0,1].
double klLowerBound(const ProbVector& a, const ProbVector& b);

// ((sum a_j^2 / b_j)^(-l) - 1)/l: a second lower bound for
// tsallisRelativeEntropy built from the order-2 collision term.
double renyi2LowerBound(const ProbVector& a, const ProbVector& b, double lambda);

// Statistical-physics convention (1 - sum a^q b^(1-q))/(1 - q) for q >= 0,
// q != 1.  Satisfies tsallisRelativeEntropy(a,b,l) = -tsallisDivergence(a,b,1-l).
double tsallisDivergence(const ProbVector& a, const ProbVector& b, double q);

} // namespace relent
