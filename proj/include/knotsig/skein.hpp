#pragma once

// Crossing-change formulas for the signature function and the jump divisor.

#include "knotsig/braid.hpp"
#include "knotsig/execution.hpp"
#include "knotsig/sympoly.hpp"

#include <cstdint>
#include <vector>

namespace knotsig {

/// A crossing whose change gives a knot with Delta nonzero at the root.
struct GoodProjection {
    BraidWord braid;
    std::size_t pos = 0;
    int epsilon = 1;  // sign of the chosen crossing
    AlgebraicRoot root;
    int threading = 0;  // cancelling pairs inserted to reach this word
};

/// Good crossings among the existing letters of b, left to right.
std::vector<GoodProjection> good_crossings(const BraidWord& b, const AlgebraicRoot& r);

/// First good crossing; if none, threads up to two cancelling pairs
/// (positions ascending, then generators ascending) and rescans.
/// Throws SearchExhausted when the budget runs out.
GoodProjection make_good(const BraidWord& b, const AlgebraicRoot& r, int max_threading = 2);

struct SkeinEvaluation {
    ThetaSign plus;   // sgn(Delta(K+), theta)
    ThetaSign minus;  // sgn(Delta(K-), theta)
    int jump = 0;     // 2 eps sgn(Delta(K+), theta) sgn(Delta(K-), theta)
};

SkeinEvaluation skein_evaluate(const GoodProjection& g);
int skein_jump(const GoodProjection& g);

/// sigma_s(K-) - sigma_s(K+) against the sign of Delta(K+) Delta(K-) at s.
/// Throws std::domain_error if either Alexander value vanishes at s.
bool verify_lemma_skeins(const BraidWord& b, std::size_t pos, double s);

struct TborderedResult {
    int trials = 0;
    int passed = 0;
    int resampled = 0;
    bool ok() const { return passed == trials; }
};

/// Random rho-bordered triples around an n x n Hermitian A0 with Gaussian
/// integer entries in [-5, 5]; determinant signs exact, signatures numeric.
/// Trial i draws from its own stream seeded by (seed, i), so serial and
/// parallel runs agree.
TborderedResult verify_lemma_tbordered(int n, int trials, std::uint64_t seed = 1,
                                       Execution exec = Execution::parallel);

}  // namespace knotsig
