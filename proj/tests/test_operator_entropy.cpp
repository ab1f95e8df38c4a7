#include <doctest.h>

#include <cmath>

#include "relent/eigen.hpp"
#include "relent/operator_entropy.hpp"
#include "relent/scalar_entropy.hpp"

using namespace relent;

namespace {

const HermitianMatrix kA = HermitianMatrix::diagonal({1.0, 4.0});
const HermitianMatrix kB = HermitianMatrix::diagonal({4.0, 1.0});

// Entrywise scalar counterpart of the operator kernels for commuting inputs.
double scalarTsallis(double a, double b, double lambda) {
    return a * std::expm1(lambda * std::log(b / a)) / lambda;
}

} // namespace

TEST_CASE("naturalPower endpoints are bitwise exact") {
    OperatorPair pair(kA, kB);
    CHECK(maxAbsDiff(pair.naturalPower(0.0), kA) == 0.0);
    CHECK(maxAbsDiff(pair.naturalPower(1.0), kB) == 0.0);
}

TEST_CASE("naturalPower on a commuting pair") {
    // A = diag(1,4), B = diag(4,1): A #_{1/2} B = diag(2, 2).
    HermitianMatrix g = naturalPower(kA, kB, 0.5);
    CHECK(g(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(g(0, 1)) < 1e-14);
}

TEST_CASE("tsallisOperatorEntropy on a commuting pair") {
    // x = B/A = (4, 1/4): kernel gives diag(2, -4) at lambda = 1/2.
    HermitianMatrix t = tsallisOperatorEntropy(kA, kB, 0.5);
    CHECK(t(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(t(1, 1) == doctest::Approx(-4.0).epsilon(1e-14));
}

TEST_CASE("relativeOperatorEntropy fixed value") {
    HermitianMatrix s =
        relativeOperatorEntropy(HermitianMatrix::diagonal({2.0, 2.0}), HermitianMatrix::identity(2));
    // 2 ln(1/2) = -1.3862943611198906 on both diagonal entries.
    CHECK(s(0, 0) == doctest::Approx(-1.3862943611198906).epsilon(1e-14));
    CHECK(s(1, 1) == doctest::Approx(-1.3862943611198906).epsilon(1e-14));
    CHECK(std::abs(s(0, 1)) < 1e-14);
}

TEST_CASE("generalizedROE at mu = 0 equals the relative operator entropy exactly") {
    OperatorPair pair(HermitianMatrix(2, {3.0, 1.0, 1.0, 2.0}),
                      HermitianMatrix(2, {2.0, -0.5, -0.5, 4.0}));
    CHECK(maxAbsDiff(pair.generalizedRelativeEntropy(0.0), pair.relativeEntropy()) == 0.0);
}

TEST_CASE("generalizedTsallis reduces to the plain kernels") {
    OperatorPair pair(HermitianMatrix(2, {3.0, 1.0, 1.0, 2.0}),
                      HermitianMatrix(2, {2.0, -0.5, -0.5, 4.0}));

    // (mu=0, k=1) leaves the base power at x^0, which is exact.
    for (double lambda : {0.25, 0.5, 0.75, 1.0})
        CHECK(maxAbsDiff(pair.generalizedTsallis(0.0, 1, lambda), pair.tsallisEntropy(lambda)) ==
              0.0);

    // (0, 1, 1) is B - A up to rounding.
    HermitianMatrix t1 = pair.generalizedTsallis(0.0, 1, 1.0);
    HermitianMatrix bMinusA(2, {-1.0, -1.5, -1.5, 2.0});
    CHECK(maxAbsDiff(t1, bMinusA) < 1e-12 * (1.0 + bMinusA.maxAbs()));
}

TEST_CASE("generalizedTsallis matches closed forms on well-conditioned pairs") {
    HermitianMatrix a(2, {2.0, 0.5, 0.5, 3.0});
    HermitianMatrix b(2, {1.5, -0.25, -0.25, 2.5});
    OperatorPair pair(a, b);
    const HermitianMatrix invB = power(b, -1.0);
    const HermitianMatrix aba = congruence(a, invB);
    const HermitianMatrix ababa = congruence(a, congruence(invB, a));

    HermitianMatrix viaKernel = pair.generalizedTsallis(0.0, 2, -1.0);
    HermitianMatrix closed = aba - ababa;
    CHECK(maxAbsDiff(viaKernel, closed) < 1e-12 * (1.0 + closed.maxAbs()));
}

TEST_CASE("operator functionals equal scalar formulas on commuting pairs") {
    const std::vector<double> da = {0.5, 2.0, 7.5};
    const std::vector<double> db = {3.0, 0.25, 5.0};
    const HermitianMatrix a = HermitianMatrix::diagonal(da);
    const HermitianMatrix b = HermitianMatrix::diagonal(db);
    OperatorPair pair(a, b);

    for (double lambda : {0.1, 0.5, 1.0}) {
        HermitianMatrix t = pair.tsallisEntropy(lambda);
        HermitianMatrix p = pair.naturalPower(lambda);
        for (int i = 0; i < 3; ++i) {
            CHECK(t(i, i) ==
                  doctest::Approx(scalarTsallis(da[i], db[i], lambda)).epsilon(1e-12));
            CHECK(p(i, i) ==
                  doctest::Approx(da[i] * std::pow(db[i] / da[i], lambda)).epsilon(1e-12));
        }
    }

    HermitianMatrix s = pair.relativeEntropy();
    HermitianMatrix g = pair.generalizedRelativeEntropy(0.75);
    HermitianMatrix gt = pair.generalizedTsallis(-0.5, 2, 0.25);
    for (int i = 0; i < 3; ++i) {
        const double x = db[i] / da[i];
        CHECK(s(i, i) == doctest::Approx(da[i] * std::log(x)).epsilon(1e-12));
        CHECK(g(i, i) == doctest::Approx(da[i] * std::pow(x, 0.75) * std::log(x)).epsilon(1e-12));
        const double base = -0.5 + (2 - 1) * 0.25;
        CHECK(gt(i, i) ==
              doctest::Approx(da[i] * std::pow(x, base) * std::expm1(0.25 * std::log(x)) / 0.25)
                  .epsilon(1e-12));
    }
}

TEST_CASE("1x1 operators agree with scalar formulas to high relative accuracy") {
    for (double a : {0.02, 1.0, 37.5})
        for (double b : {0.4, 2.25, 90.0}) {
            OperatorPair pair(HermitianMatrix::diagonal({a}), HermitianMatrix::diagonal({b}));
            for (double lambda : {0.25, 1.0}) {
                const double expected = scalarTsallis(a, b, lambda);
                CHECK(pair.tsallisEntropy(lambda)(0, 0) ==
                      doctest::Approx(expected).epsilon(1e-13));
            }
            CHECK(pair.relativeEntropy()(0, 0) ==
                  doctest::Approx(a * std::log(b / a)).epsilon(1e-13));
        }
}

TEST_CASE("tsallis operator entropy approaches the relative operator entropy as lambda -> 0") {
    HermitianMatrix a(2, {2.0, 0.3, 0.3, 1.0});
    HermitianMatrix b(2, {1.0, -0.2, -0.2, 3.0});
    OperatorPair pair(a, b);
    const HermitianMatrix s = pair.relativeEntropy();
    const double gapCoarse = maxAbsDiff(pair.tsallisEntropy(1e-3), s);
    const double gapFine = maxAbsDiff(pair.tsallisEntropy(1e-6), s);
    const double ratio = gapCoarse / gapFine;
    CHECK(ratio >= 400.0);
    CHECK(ratio <= 2500.0);
}

TEST_CASE("T_lambda is dominated by B - A") {
    const std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs = {
        {HermitianMatrix(2, {2.0, 0.5, 0.5, 3.0}), HermitianMatrix(2, {1.0, -0.3, -0.3, 2.0})},
        {HermitianMatrix::diagonal({0.5, 5.0}), HermitianMatrix::diagonal({2.0, 2.0})},
        {HermitianMatrix(3, {4.0, 1.0, 0.0, 1.0, 3.0, 0.5, 0.0, 0.5, 2.0}),
         HermitianMatrix(3, {2.0, 0.0, 0.3, 0.0, 1.0, 0.0, 0.3, 0.0, 5.0})},
    };
    for (const auto& [a, b] : pairs) {
        OperatorPair pair(a, b);
        const HermitianMatrix upper = b - a;
        for (double lambda : {0.1, 0.4, 0.8, 1.0})
            CHECK(loewnerLeq(pair.tsallisEntropy(lambda), upper, 1e-12).holds);
    }
}

TEST_CASE("weighted generalized Tsallis terms telescope to the power mean") {
    HermitianMatrix a(2, {3.0, 0.8, 0.8, 2.0});
    HermitianMatrix b(2, {1.5, -0.4, -0.4, 4.0});
    OperatorPair pair(a, b);
    const double lambda = 0.25;
    const int m = 3;
    HermitianMatrix sum(2);
    for (int k = 1; k <= m; ++k) sum = sum + lambda * pair.generalizedTsallis(0.0, k, lambda);
    HermitianMatrix target = pair.naturalPower(m * lambda) - a;
    CHECK(maxAbsDiff(sum, target) < 1e-10 * (1.0 + target.maxAbs()));
}

TEST_CASE("congruence equivariance of the Tsallis operator entropy") {
    HermitianMatrix a(2, {2.0, 0.5, 0.5, 1.5});
    HermitianMatrix b(2, {3.0, -0.5, -0.5, 2.0});
    HermitianMatrix c(2, {1.0, 0.25, 0.25, 2.0}); // SPD transformer
    const double lambda = 0.6;

    HermitianMatrix lhs = tsallisOperatorEntropy(congruence(c, a), congruence(c, b), lambda);
    HermitianMatrix rhs = congruence(c, tsallisOperatorEntropy(a, b, lambda));
    CHECK(maxAbsDiff(lhs, rhs) < 1e-9 * (1.0 + rhs.maxAbs()));
}

TEST_CASE("lambda range is policed unless relaxed") {
    OperatorPair pair(kA, kB);
    CHECK_THROWS_AS(pair.tsallisEntropy(0.0), std::invalid_argument);
    CHECK_THROWS_AS(pair.tsallisEntropy(1.5), std::invalid_argument);
    CHECK_THROWS_AS(pair.tsallisEntropy(-0.5), std::invalid_argument);

    // Relaxed range admits any nonzero lambda; commuting case stays scalar.
    HermitianMatrix t = pair.tsallisEntropy(1.5, LambdaRange::Relaxed);
    CHECK(t(0, 0) == doctest::Approx(scalarTsallis(1.0, 4.0, 1.5)).epsilon(1e-12));
    CHECK_THROWS_AS(pair.tsallisEntropy(0.0, LambdaRange::Relaxed), std::invalid_argument);
}

TEST_CASE("OperatorPair rejects invalid inputs") {
    CHECK_THROWS_WITH_AS(OperatorPair(HermitianMatrix::diagonal({1.0, -1.0}), kB),
                         doctest::Contains("strictly positive"), std::domain_error);
    CHECK_THROWS_WITH_AS(OperatorPair(kA, HermitianMatrix::diagonal({1.0, 0.0})),
                         doctest::Contains("strictly positive"), std::domain_error);
    CHECK_THROWS_AS(OperatorPair(kA, HermitianMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("DensityMatrix validation") {
    CHECK_NOTHROW(DensityMatrix(HermitianMatrix::diagonal({0.5, 0.5})));
    CHECK_THROWS_AS(DensityMatrix(HermitianMatrix::diagonal({0.6, 0.6})), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(HermitianMatrix::diagonal({1.5, -0.5})), std::domain_error);
}

TEST_CASE("quantumTsallisDivergence fixed values and domain") {
    DensityMatrix rho(HermitianMatrix::diagonal({0.5, 0.5}));
    DensityMatrix sigma(HermitianMatrix::diagonal({0.25, 0.75}));

    const double q = 0.5;
    const double expected =
        tsallisDivergence(ProbVector({0.5, 0.5}), ProbVector({0.25, 0.75}), q);
    CHECK(quantumTsallisDivergence(rho, sigma, q) == doctest::Approx(expected).epsilon(1e-12));

    // q = 0 vanishes; identical states give zero for every q.
    CHECK(std::abs(quantumTsallisDivergence(rho, sigma, 0.0)) < 1e-14);
    CHECK(std::abs(quantumTsallisDivergence(rho, rho, 0.3)) < 1e-14);

    CHECK_THROWS_AS(quantumTsallisDivergence(rho, sigma, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(quantumTsallisDivergence(rho, sigma, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(quantumTsallisDivergence(rho, sigma, -0.2), std::invalid_argument);
}

TEST_CASE("quantum divergence is positive on distinct noncommuting states") {
    DensityMatrix rho(HermitianMatrix(2, {0.7, 0.2, 0.2, 0.3}));
    DensityMatrix sigma(HermitianMatrix(2, {0.4, -0.1, -0.1, 0.6}));
    for (double q : {0.2, 0.5, 0.9}) CHECK(quantumTsallisDivergence(rho, sigma, q) > 0.0);
}
