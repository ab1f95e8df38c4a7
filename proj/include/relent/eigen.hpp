// Spectral calculus for dense real symmetric matrices: cyclic Jacobi
// eigendecomposition plus the derived operations (matrix functions, powers,
// logarithm, Loewner order checks).
#pragma once

#include <functional>

#include "relent/matrix.hpp"

namespace relent {

// Relative floor below which a "strictly positive" matrix is rejected; keeps
// inverse powers and logarithms away from catastrophic amplification.
inline double positivityFloor(double maxAbsEntry) { return 1e-10 * (1.0 + maxAbsEntry); }

struct EigenDecomposition {
    int n = 0;
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // row-major n x n; column k pairs with eigenvalues[k]

    double vectorEntry(int i, int k) const noexcept {
        return eigenvectors[static_cast<size_t>(i) * n + k];
    }
};

// Cyclic Jacobi rotations until every off-diagonal entry is below
// 1e-13 * max(1, |H|_max); hard cap of 128 sweeps (non-convergence throws).
EigenDecomposition eigh(const HermitianMatrix& h);

// V f(Lambda) V^T from an existing decomposition.  Throws std::domain_error
// if f is not finite at some eigenvalue.
HermitianMatrix reconstruct(const EigenDecomposition& eig, const std::function<double(double)>& f);

// f applied to the spectrum of h.
HermitianMatrix applySpectral(const HermitianMatrix& h, const std::function<double(double)>& f);

// h^p.  p = 0 gives the identity and p = 1 returns h unchanged; a negative or
// non-integer exponent requires all eigenvalues above the positivity floor.
HermitianMatrix power(const HermitianMatrix& h, double p);

// Matrix logarithm of a strictly positive matrix.
HermitianMatrix logm(const HermitianMatrix& h);

double minEigenvalue(const HermitianMatrix& h);

struct LoewnerResult {
    bool holds = false;
    double violation = 0.0;  // max(0, -minEigenvalue(y - x)), absolute
    double scale = 1.0;      // 1 + max(|x|_max, |y|_max)
};

// Tests x <= y in the Loewner order, allowing slack tol * scale on the most
// negative eigenvalue of y - x.
LoewnerResult loewnerLeq(const HermitianMatrix& x, const HermitianMatrix& y, double tol);

// Validates min eigenvalue >= positivityFloor(|h|_max) and hands back the
// decomposition for reuse.  `label` names the operand in the error message.
EigenDecomposition requireStrictlyPositive(const HermitianMatrix& h, const char* label);

} // namespace relent
