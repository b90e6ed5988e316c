#include "knotsig/qjump.hpp"

#include "knotsig/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotsig {

void cross_validate(const KnotRecord& rec)
{
    if (!rec.delta) return;
    const SymPoly computed = alexander(seifert_matrix(rec.braid));
    if (computed != *rec.delta)
        throw Error("record \"" + rec.name + "\": delta " + rec.delta->list_str() +
                    " differs from the Alexander polynomial of braid " + rec.braid.str() + ", which is " +
                    computed.list_str());
}

LaurentLeading laurent_leading(const SymPoly& delta, const SymPoly& p1, const AlgebraicRoot& r, Precision prec)
{
    if (r.multiplicity() > 1)
        throw NonSimpleRoot("root of multiplicity " + std::to_string(r.multiplicity()) +
                            " has no Jones jump");
    if (sign_at(delta, r) != 0) throw std::invalid_argument("laurent_leading: point is not a root of delta");
    if (theta_sign(delta, r).order != 1) throw NonSimpleRoot("delta vanishes to order > 1 at the root");

    LaurentLeading out;
    if (p1.is_zero()) {
        out.order = kInfiniteOrder;
        out.sign = 0;
        return out;
    }
    // (Delta'_theta)^2 > 0 at a simple root, so sgn(c) is the sign of the
    // first nonvanishing theta-derivative of P.
    const ThetaSign ts = theta_sign(p1, r);
    out.order = ts.order - 2;
    out.sign = ts.sign;
    if (out.order == -2) {
        const BigFloat x0 = r.x(prec);
        const BigFloat s0 = r.turn(prec);
        const BigFloat dx_ds = -x0.like(4L) * x0.pi_like() * sin(x0.like(2L) * x0.pi_like() * s0);
        const BigFloat denom = delta.derivative()(x0) * dx_ds;
        out.numeric_c = p1(x0) / (denom * denom);
    }
    return out;
}

int jones_jump(const LaurentLeading& lead, bool upper_half)
{
    if (lead.order == kInfiniteOrder || lead.order >= 0) return 0;
    return lead.sign * (-lead.order) * (upper_half ? 1 : -1);
}

JumpDivisor jj_divisor(const SymPoly& delta, const SymPoly& p1, Precision prec)
{
    JumpDivisor out;
    for (auto& r : isolate_roots(delta)) {
        if (r.multiplicity() > 1)
            throw NonSimpleRoot("Alexander polynomial " + delta.str() + " has a root of multiplicity " +
                                std::to_string(r.multiplicity()) + " on the unit circle");
        const int jj = jones_jump(laurent_leading(delta, p1, r, prec));
        out.entries.push_back({std::move(r), jj});
    }
    return out;
}

BigFloat q_value(const SymPoly& delta, const SymPoly& p1, const BigFloat& s)
{
    const BigFloat x = x_of_turn(s);
    const BigFloat d = delta(x);
    return p1(x) / (d * d);
}

BigFloat fit_double_pole(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& s0)
{
    auto scaled = [&](const BigFloat& h) {
        const BigFloat two = s0.like(2L);
        return h * h * (f(s0 + h) + f(s0 - h)) / two;
    };
    const BigFloat h1 = s0.like(mpq_class(1, 10000));
    const BigFloat h2 = s0.like(mpq_class(1, 100000));
    // c(h) = c + c0 h^2 + O(h^4); eliminate the h^2 term.
    return (s0.like(100L) * scaled(h2) - scaled(h1)) / s0.like(99L);
}

SymPoly parallel_pullback(const SymPoly& p, int n)
{
    if (n < 1) throw std::invalid_argument("parallel_pullback needs n >= 1");
    // t^k + t^-k = C_k(y) with y = t + 1/t = x + 2: C_0 = 2, C_1 = y,
    // C_{k+1} = y C_k - C_{k-1}.
    const SymPoly y{2, 1};
    SymPoly prev{2};
    SymPoly cur = y;
    for (int k = 1; k < n; ++k) {
        SymPoly next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    const SymPoly xn = cur - SymPoly{2};
    return p.compose(xn);
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::match: return "MATCH";
    case Status::mismatch: return "MISMATCH";
    case Status::not_simple: return "NOT_SIMPLE";
    case Status::no_p_data: return "NO_P_DATA";
    case Status::vacuous: return "VACUOUS";
    case Status::search_exhausted: return "SEARCH_EXHAUSTED";
    }
    return "?";
}

bool is_failure(Status s)
{
    return s == Status::mismatch || s == Status::search_exhausted;
}

KnotReport check_conjecture(const KnotRecord& rec, Precision prec)
{
    cross_validate(rec);
    const IntMatrix v = seifert_matrix(rec.braid);
    const SymPoly delta = alexander(v);
    const JumpDivisor j = jump_divisor(v, Execution::serial);

    KnotReport rep;
    rep.name = rec.name;
    rep.braid = rec.braid.str();
    rep.delta = delta.str();
    rep.sigma_minus_one = signature_at(v, 0.5);
    for (const auto& e : j.entries)
        rep.rows.push_back({e.root, e.root.turn(prec).str(20), e.root.multiplicity(), e.jump, {}, {}, {}});

    if (j.empty()) {
        rep.status = Status::vacuous;
        return rep;
    }
    if (std::any_of(j.entries.begin(), j.entries.end(), [](const JumpEntry& e) { return e.root.multiplicity() > 1; })) {
        rep.status = Status::not_simple;
        return rep;
    }
    if (!rec.p1) {
        rep.status = Status::no_p_data;
        return rep;
    }

    const JumpDivisor jj = jj_divisor(delta, *rec.p1, prec);
    bool all_match = jj.size() == j.size();
    for (auto& row : rep.rows) {
        auto it = std::find_if(jj.entries.begin(), jj.entries.end(),
                               [&](const JumpEntry& e) { return same_point(e.root, row.root); });
        if (it == jj.entries.end()) {
            all_match = false;
            continue;
        }
        row.jj = it->jump;
        const LaurentLeading lead = laurent_leading(delta, *rec.p1, row.root, prec);
        if (lead.numeric_c) row.numeric_c = lead.numeric_c->str(20);
        if (it->jump % 2 != 0)
            rep.note = "odd Jones jump: P vanishes to first order at a root";
        if (it->jump != row.j) all_match = false;
    }
    rep.sigma_from_jj = jj.total();
    rep.status = all_match ? Status::match : Status::mismatch;
    return rep;
}

}  // namespace knotsig
