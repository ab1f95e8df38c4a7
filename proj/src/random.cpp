#include "relent/random.hpp"

#include <cmath>
#include <stdexcept>

#include "relent/eigen.hpp"

namespace relent {

namespace {

constexpr double kPartitionSumTol = 1e-11;
constexpr int kMaxAttempts = 10;
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t deriveTrialSeed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = master;
    s ^= 0xa0761d6478bd642full * (stream + 1);
    s ^= 0xe7037ed1a0b428dbull * (index + 1);
    return mix64(mix64(s));
}

double SplitRng::logUniform(double lo, double hi) {
    if (!(lo > 0.0) || hi < lo) throw std::invalid_argument("logUniform: need 0 < lo <= hi");
    if (lo == hi) return lo;
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

int SplitRng::uniformInt(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("uniformInt: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
}

HermitianMatrix randomSPD(int dim, double conditionCap, SplitRng& rng) {
    if (dim < 1) throw std::invalid_argument("randomSPD: dimension must be >= 1");
    if (!(conditionCap >= 1.0)) throw std::invalid_argument("randomSPD: condition cap must be >= 1");

    const double hi = std::sqrt(conditionCap);
    const double lo = 1.0 / hi;

    std::vector<double> a(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i)
        a[static_cast<size_t>(i) * dim + i] = rng.logUniform(lo, hi);

    // Conjugate the diagonal by a product of random plane rotations; this
    // leaves the spectrum (and hence the condition bound) intact.
    for (int p = 0; p < dim; ++p) {
        for (int q = p + 1; q < dim; ++q) {
            const double th = rng.uniform(0.0, kTwoPi);
            const double c = std::cos(th);
            const double s = std::sin(th);
            for (int j = 0; j < dim; ++j) {  // rows p,q: G^T * A
                const double x = a[static_cast<size_t>(p) * dim + j];
                const double y = a[static_cast<size_t>(q) * dim + j];
                a[static_cast<size_t>(p) * dim + j] = c * x - s * y;
                a[static_cast<size_t>(q) * dim + j] = s * x + c * y;
            }
            for (int i = 0; i < dim; ++i) {  // cols p,q: A * G
                const double x = a[static_cast<size_t>(i) * dim + p];
                const double y = a[static_cast<size_t>(i) * dim + q];
                a[static_cast<size_t>(i) * dim + p] = c * x - s * y;
                a[static_cast<size_t>(i) * dim + q] = s * x + c * y;
            }
        }
    }
    return HermitianMatrix(dim, std::move(a));
}

OperatorPartition::OperatorPartition(std::vector<HermitianMatrix> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("OperatorPartition: needs at least one block");
    const int n = blocks_.front().dim();
    HermitianMatrix sum(n);
    for (const HermitianMatrix& b : blocks_) {
        requireSameDim(b, sum, "OperatorPartition");
        requireStrictlyPositive(b, "partition block");
        sum = sum + b;
    }
    if (maxAbsDiff(sum, HermitianMatrix::identity(n)) > kPartitionSumTol)
        throw std::invalid_argument("OperatorPartition: blocks must sum to the identity within 1e-11");
}

OperatorPartition randomPartition(int n, int dim, double conditionCap, SplitRng& rng,
                                  int* attemptsOut) {
    if (n < 1) throw std::invalid_argument("randomPartition: need at least one block");
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        std::vector<HermitianMatrix> raw;
        raw.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) raw.push_back(randomSPD(dim, conditionCap, rng));

        HermitianMatrix s(dim);
        for (const HermitianMatrix& m : raw) s = s + m;

        try {
            EigenDecomposition eigS = requireStrictlyPositive(s, "partition normalizer");
            const HermitianMatrix invSqrtS =
                reconstruct(eigS, [](double t) { return 1.0 / std::sqrt(t); });
            std::vector<HermitianMatrix> blocks;
            blocks.reserve(raw.size());
            for (const HermitianMatrix& m : raw)
                blocks.emplace_back(dim, detail::sandwich(dim, invSqrtS.data().data(),
                                                          m.data().data()));
            OperatorPartition part(std::move(blocks));
            if (attemptsOut) *attemptsOut = attempt;
            return part;
        } catch (const std::exception&) {
            if (attempt == kMaxAttempts)
                throw std::runtime_error("randomPartition: no valid partition after 10 attempts");
        }
    }
    throw std::runtime_error("randomPartition: unreachable");
}

ProbVector randomProbVector(int n, SplitRng& rng) {
    if (n < 1) throw std::invalid_argument("randomProbVector: need at least one component");
    if (n == 1) return ProbVector({1.0});

    constexpr double kFloor = 1e-3;
    // The floor construction needs n*kFloor well below 1 to leave room for
    // the normalized part.
    if (n * kFloor >= 0.5)
        throw std::invalid_argument("randomProbVector: too many components for the 1e-3 floor");
    std::vector<double> u(static_cast<size_t>(n));
    double sum = 0.0;
    for (double& v : u) {
        v = rng.uniform(kFloor, 1.0);
        sum += v;
    }
    // Mix the normalized draw with the uniform distribution so every
    // component stays at or above the floor after normalization.
    const double mixWeight = 1.0 - n * kFloor;
    for (double& v : u) v = mixWeight * (v / sum) + kFloor;
    return ProbVector(std::move(u));
}

} // namespace relent
