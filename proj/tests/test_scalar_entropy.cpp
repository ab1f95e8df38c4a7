#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "relent/scalar_entropy.hpp"

using namespace relent;

TEST_CASE("ProbVector validation") {
    CHECK_NOTHROW(ProbVector({0.5, 0.5}));
    CHECK_NOTHROW(ProbVector({1.0}));
    CHECK_NOTHROW(ProbVector({0.999999, 1e-6}));

    CHECK_THROWS_AS(ProbVector({}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector({0.5, 0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector({1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector({0.6, 0.6}), std::invalid_argument);

    ProbVector p({0.25, 0.75});
    CHECK(p.size() == 2);
    CHECK(p[1] == 0.75);
}

TEST_CASE("qLog fixed values") {
    CHECK(qLog(4.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(qLog(1.0, 0.3) == 0.0);
    CHECK(qLog(std::exp(1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    // q -> 1 recovers the natural log continuously.
    CHECK(qLog(2.0, 1.0 - 1e-9) == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK_THROWS_AS(qLog(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(qLog(-1.0, 0.5), std::domain_error);
}

TEST_CASE("tsallisEntropy fixed values") {
    // Uniform on 4 points at q = 2: (sum p^2 - 1)/(1 - 2) = 3/4.
    CHECK(tsallisEntropy(ProbVector({0.25, 0.25, 0.25, 0.25}), 2.0) ==
          doctest::Approx(0.75).epsilon(1e-15));
    // q = 1 is Shannon entropy.
    CHECK(tsallisEntropy(ProbVector({0.5, 0.5}), 1.0) ==
          doctest::Approx(0.6931471805599453).epsilon(1e-15));
    // q -> 0+ approaches support minus one (q = 0 itself is out of domain).
    CHECK(tsallisEntropy(ProbVector({0.2, 0.3, 0.5}), 1e-9) == doctest::Approx(2.0).epsilon(1e-6));
    // Near-degenerate distribution keeps relative accuracy.
    CHECK(tsallisEntropy(ProbVector({0.999999, 1e-6}), 2.0) ==
          doctest::Approx(1.999998e-6).epsilon(1e-9));
    CHECK_THROWS_AS(tsallisEntropy(ProbVector({0.5, 0.5}), -0.5), std::invalid_argument);
    CHECK_THROWS_AS(tsallisEntropy(ProbVector({0.5, 0.5}), 0.0), std::invalid_argument);
}

TEST_CASE("tsallisRelativeEntropy fixed values and domain") {
    const ProbVector a({0.5, 0.5});
    const ProbVector b({0.25, 0.75});
    CHECK(tsallisRelativeEntropy(a, b, 0.5) ==
          doctest::Approx(-0.068148347421863431).epsilon(1e-15));
    // lambda = 1 collapses to sum(b - a) = 0.
    CHECK(std::abs(tsallisRelativeEntropy(a, b, 1.0)) < 1e-15);
    CHECK(tsallisRelativeEntropy(a, a, 0.7) == 0.0);

    CHECK_THROWS_AS(tsallisRelativeEntropy(a, b, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tsallisRelativeEntropy(a, b, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(tsallisRelativeEntropy(a, ProbVector({1.0}), 0.5), std::invalid_argument);
}

TEST_CASE("lower bounds: fixed values") {
    const ProbVector a({0.5, 0.5});
    const ProbVector b({0.25, 0.75});
    CHECK(klLowerBound(a, b) == doctest::Approx(-0.14384103622589045).epsilon(1e-15));
    CHECK(klLowerBound(b, a) == doctest::Approx(-0.13081203594113697).epsilon(1e-15));
    CHECK(klLowerBound(a, a) == 0.0);

    CHECK(renyi2LowerBound(a, b, 0.5) == doctest::Approx(-0.2679491924311227).epsilon(1e-15));
    CHECK(renyi2LowerBound(a, b, 1.0) == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("tsallisDivergence fixed values and domain") {
    const ProbVector a({0.5, 0.5});
    const ProbVector b({0.25, 0.75});
    CHECK(tsallisDivergence(a, b, 0.5) == doctest::Approx(0.068148347421863431).epsilon(1e-15));
    // q = 2: sum a^2/b - 1 = 1/3.
    CHECK(tsallisDivergence(a, b, 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // q = 0 vanishes on probability vectors.
    CHECK(std::abs(tsallisDivergence(a, b, 0.0)) < 1e-15);
    CHECK_THROWS_AS(tsallisDivergence(a, b, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tsallisDivergence(a, b, -0.1), std::invalid_argument);
}

TEST_CASE("sign identity between the two conventions") {
    // S_lambda(a|b) and -D_q(a|b) share one kernel evaluated at t = 1 - q.
    // When 1 - (1 - lambda) reproduces lambda exactly (all lambda >= 0.5,
    // where the subtractions are exact), the identity is bit-for-bit; for the
    // rest the reconstructed exponent differs by one ulp and the identity
    // holds to rounding, far inside 1e-14 relative.
    const std::vector<ProbVector> vectors = {
        ProbVector({0.5, 0.5}),
        ProbVector({0.25, 0.75}),
        ProbVector({0.1, 0.2, 0.3, 0.4}),
        ProbVector({0.7, 0.1, 0.2}),
        ProbVector({0.999, 0.001}),
    };
    for (const ProbVector& a : vectors)
        for (const ProbVector& b : vectors) {
            if (a.size() != b.size()) continue;
            for (int i = 1; i <= 10; ++i) {
                const double lambda = i / 10.0;
                if (lambda == 1.0) continue; // q = 0 is the D_q boundary
                const double q = 1.0 - lambda;
                const double s = tsallisRelativeEntropy(a, b, lambda);
                const double d = tsallisDivergence(a, b, q);
                if (1.0 - q == lambda) {
                    CHECK(s == -d);
                } else {
                    CHECK(std::abs(s + d) <= 1e-14 * std::max(1.0, std::abs(s)));
                }
            }
        }
}

TEST_CASE("relative entropy chain: kl and renyi2 bound S from below, zero from above") {
    const std::vector<ProbVector> vectors = {
        ProbVector({0.5, 0.5}),
        ProbVector({0.25, 0.75}),
        ProbVector({0.05, 0.9, 0.05}),
        ProbVector({0.4, 0.3, 0.2, 0.1}),
    };
    for (const ProbVector& a : vectors)
        for (const ProbVector& b : vectors) {
            if (a.size() != b.size()) continue;
            const double kl = klLowerBound(a, b);
            for (int i = 1; i <= 10; ++i) {
                const double lambda = i / 10.0;
                const double s = tsallisRelativeEntropy(a, b, lambda);
                CHECK(kl <= s + 1e-12);
                CHECK(s <= 1e-12);
                CHECK(renyi2LowerBound(a, b, lambda) <= s + 1e-12);
            }
        }
}

TEST_CASE("S_lambda approaches the kl bound linearly as lambda -> 0") {
    const ProbVector a({0.3, 0.45, 0.25});
    const ProbVector b({0.5, 0.2, 0.3});
    const double kl = klLowerBound(a, b);
    const double gapCoarse = std::abs(tsallisRelativeEntropy(a, b, 1e-3) - kl);
    const double gapFine = std::abs(tsallisRelativeEntropy(a, b, 1e-6) - kl);
    CHECK(gapFine <= 1e-5);
    const double ratio = gapCoarse / gapFine;
    CHECK(ratio >= 400.0);
    CHECK(ratio <= 2500.0);
}

TEST_CASE("halving lambda halves the gap") {
    const ProbVector a({0.6, 0.4});
    const ProbVector b({0.35, 0.65});
    const double kl = klLowerBound(a, b);
    double prev = std::abs(tsallisRelativeEntropy(a, b, std::ldexp(1.0, -1)) - kl);
    for (int i = 2; i <= 20; ++i) {
        const double gap = std::abs(tsallisRelativeEntropy(a, b, std::ldexp(1.0, -i)) - kl);
        CHECK(gap <= prev + 1e-12);
        prev = gap;
    }
    CHECK(prev <= 1e-5);
}
