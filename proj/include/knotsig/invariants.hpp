#pragma once

#include "knotsig/braid.hpp"
#include "knotsig/execution.hpp"
#include "knotsig/sympoly.hpp"

#include <Eigen/Dense>

#include <vector>

namespace knotsig {

/// Relative eigenvalue guard: |lambda| < tol * ||B|| means "too close to a
/// singular point" and raises DegenerateEvaluation.
inline constexpr double kSignatureTolerance = 1e-9;

struct JumpEntry {
    AlgebraicRoot root;
    int jump = 0;
};

/// Jumps of a signature-type function at roots on the upper semicircle,
/// ordered by increasing turn.
struct JumpDivisor {
    std::vector<JumpEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    std::vector<int> jumps() const;
    /// Sum of all jumps, i.e. the value reached at s = 1/2 from 0.
    int total() const;
};

/// Symmetrized Alexander polynomial det(t^1/2 V - t^-1/2 V^T) in the x-basis,
/// normalized to Delta(1) = 1. Throws knotsig::Error when det(V - V^T) != +-1.
SymPoly alexander(const IntMatrix& v);

/// Signature of a Hermitian matrix; throws DegenerateEvaluation when some
/// eigenvalue is below tol * spectral radius.
int hermitian_signature(const Eigen::MatrixXcd& b, double tol = kSignatureTolerance);

/// B(t) = (1 - t) V + (1 - conj t) V^T at t = exp(2 pi i s).
Eigen::MatrixXcd hermitian_form(const IntMatrix& v, double s);

/// sigma at t = exp(2 pi i s).
int signature_at(const IntMatrix& v, double s);

/// Offset used on both sides of each root: min(1e-3, gap / 4) where gap is
/// the smallest distance between consecutive turns, 0 and 1/2.
double jump_offset(const std::vector<double>& turns);

JumpDivisor jump_divisor(const IntMatrix& v, Execution exec = Execution::parallel);

struct SignatureSample {
    double s = 0;
    int sigma = 0;
    friend bool operator==(const SignatureSample&, const SignatureSample&) = default;
};

/// Step-plot samples: n grid midpoints (i + 1/2) / (2n) away from roots, one
/// point per inter-root gap, and s = 1/2. Sorted by s.
std::vector<SignatureSample> signature_samples(const IntMatrix& v, int n,
                                               Execution exec = Execution::parallel);

}  // namespace knotsig
