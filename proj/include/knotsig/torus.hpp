#pragma once

#include "knotsig/bigfloat.hpp"
#include "knotsig/braid.hpp"
#include "knotsig/execution.hpp"
#include "knotsig/qjump.hpp"
#include "knotsig/sympoly.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace knotsig {

/// T(a, b) with 2 <= a < b coprime.
class TorusKnot {
public:
    TorusKnot(int a, int b);

    int a() const { return a_; }
    int b() const { return b_; }
    int genus() const { return (a_ - 1) * (b_ - 1) / 2; }
    std::string name() const;

    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;

private:
    int a_;
    int b_;
};

/// All torus knots with a * b <= max_ab, ordered by (a, b).
std::vector<TorusKnot> torus_knots(int max_ab);

/// (t^{ab/2} - t^{-ab/2})(t^{1/2} - t^{-1/2}) / ((t^{a/2} - t^{-a/2})(t^{b/2} - t^{-b/2})).
SymPoly delta_torus(const TorusKnot& k);

/// Exact P = Q Delta^2 from the closed form for Q(T(a, b)).
SymPoly p_torus(const TorusKnot& k);

/// Turns m/a + n/b (mod 1) lying in (0, 1/2), ascending.
std::vector<mpq_class> roots_torus(const TorusKnot& k);

struct TorusJump {
    mpq_class turn;
    int jump = 0;
};

/// Closed-form table: jump -2 at every upper-semicircle root.
std::vector<TorusJump> jump_torus(const TorusKnot& k);

/// Q(T(a, b))(exp(2 pi i s)) from the closed form with the x-derivative
/// worked out analytically. Throws DegenerateEvaluation at a root turn.
BigFloat q_torus(const TorusKnot& k, const BigFloat& s);

/// (sigma_1 sigma_2 ... sigma_{a-1})^b.
BraidWord torus_braid(const TorusKnot& k);

struct TorusRow {
    mpq_class turn;
    std::string turn_str;
    int kearton = 0;    // closed-form jump table
    int sine_sum = 0;   // exact sign of -4 (sum k a_k sin k theta)^2
    int fitted = 0;     // sign of the numerically fitted pole of q_torus
    int exact_p = 0;    // jj_divisor(delta_torus, p_torus)
    int seifert = 0;    // jump_divisor on the torus braid
    std::string fitted_c;
};

struct TorusReport {
    TorusKnot knot;
    Status status = Status::match;
    std::vector<TorusRow> rows;
    int sigma_minus_one = 0;
    std::string note;
};

TorusReport verify_torus(const TorusKnot& k, Precision prec = {40});

std::vector<TorusReport> sweep_torus(int max_ab, Execution exec = Execution::parallel, Precision prec = {40});

}  // namespace knotsig
