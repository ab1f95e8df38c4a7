// Seeded random instance generation for the verification suites: SPD
// matrices with capped condition number, partitions of the identity, and
// probability vectors.  All randomness flows through SplitRng, which converts
// raw mt19937_64 words itself so that a given seed yields identical instances
// on every platform and thread count.
#pragma once

#include <cstdint>
#include <random>

#include "relent/matrix.hpp"
#include "relent/scalar_entropy.hpp"

namespace relent {

// Fixed splitting rule mapping (master seed, stream, index) to the sub-seed
// of one trial; streams keep the suites' instance draws independent.
std::uint64_t deriveTrialSeed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // log-uniform over [lo, hi]; lo > 0.
    double logUniform(double lo, double hi);

    // Uniform integer in [lo, hi] inclusive.
    int uniformInt(int lo, int hi);

private:
    std::mt19937_64 eng_;
};

// Random SPD matrix: eigenvalues log-uniform in [1/sqrt(cap), sqrt(cap)]
// conjugated by a random orthogonal matrix, so the condition number never
// exceeds cap.
HermitianMatrix randomSPD(int dim, double conditionCap, SplitRng& rng);

// Finite family of strictly positive blocks summing to the identity within
// 1e-11 in max norm.
class OperatorPartition {
public:
    explicit OperatorPartition(std::vector<HermitianMatrix> blocks);

    int size() const noexcept { return static_cast<int>(blocks_.size()); }
    int dim() const noexcept { return blocks_.front().dim(); }
    const HermitianMatrix& block(int j) const noexcept { return blocks_[static_cast<size_t>(j)]; }

private:
    std::vector<HermitianMatrix> blocks_;
};

// Draws SPD blocks M_j and normalizes them by S = sum M_j via
// A_j = S^(-1/2) M_j S^(-1/2).  Retries (up to 10 attempts) if the result
// fails the partition invariants; `attemptsOut` reports the attempt count.
OperatorPartition randomPartition(int n, int dim, double conditionCap, SplitRng& rng,
                                  int* attemptsOut = nullptr);

// Probability vector whose components all lie in [1e-3, 1].
ProbVector randomProbVector(int n, SplitRng& rng);

} // namespace relent
