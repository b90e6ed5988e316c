#pragma once

// The Q-function Q = P / Delta^2 on the unit circle, its Laurent expansion in
// the angle around each Alexander root, and the Jones jump divisor built from
// the leading term, compared against the signature jump divisor.

#include "knotsig/bigfloat.hpp"
#include "knotsig/braid.hpp"
#include "knotsig/invariants.hpp"
#include "knotsig/sympoly.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotsig {

struct KnotRecord {
    std::string name;
    BraidWord braid;
    std::optional<SymPoly> delta;
    std::optional<SymPoly> p1;
};

/// Throws knotsig::Error when the record's Delta differs from the Alexander
/// polynomial of its braid closure.
void cross_validate(const KnotRecord& rec);

/// Order reported for P = 0 (no pole of any order).
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// Lowest term c (theta - theta0)^order of Q around a simple root.
struct LaurentLeading {
    int order = 0;
    int sign = 0;
    /// c in turn units, P(x0) / (Delta'(x0) dx/ds)^2; only when order == -2.
    std::optional<BigFloat> numeric_c;
};

LaurentLeading laurent_leading(const SymPoly& delta, const SymPoly& p1, const AlgebraicRoot& r,
                               Precision prec = {});

/// sgn(c) * max(0, -order) * sgn(Im rho).
int jones_jump(const LaurentLeading& lead, bool upper_half = true);

/// Throws NonSimpleRoot when Delta has a repeated root on the circle.
JumpDivisor jj_divisor(const SymPoly& delta, const SymPoly& p1, Precision prec = {});

/// Q(exp(2 pi i s)) = P(x) / Delta(x)^2.
BigFloat q_value(const SymPoly& delta, const SymPoly& p1, const BigFloat& s);

/// Coefficient of (s - s0)^-2 of f from symmetric samples at s0 +- 1e-4 and
/// s0 +- 1e-5 with one Richardson step; odd terms cancel in the average.
BigFloat fit_double_pole(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& s0);

/// f(t) -> f(t^n) in the x-basis.
SymPoly parallel_pullback(const SymPoly& p, int n);

enum class Status { match, mismatch, not_simple, no_p_data, vacuous, search_exhausted };

std::string_view to_string(Status s);
/// MATCH, VACUOUS, NO_P_DATA and NOT_SIMPLE do not refute anything.
bool is_failure(Status s);

struct RootRow {
    AlgebraicRoot root;
    std::string turn;  // 20 significant digits
    int multiplicity = 1;
    int j = 0;
    std::optional<int> jj;
    std::optional<int> skein;
    std::optional<std::string> numeric_c;
};

struct KnotReport {
    std::string name;
    std::string braid;
    std::string delta;
    Status status = Status::vacuous;
    std::vector<RootRow> rows;
    int sigma_minus_one = 0;
    std::optional<int> sigma_from_jj;
    std::string note;
};

/// j vs jj on one record. Rows carry j for every upper root even when the
/// status is NOT_SIMPLE or NO_P_DATA.
KnotReport check_conjecture(const KnotRecord& rec, Precision prec = {});

}  // namespace knotsig
