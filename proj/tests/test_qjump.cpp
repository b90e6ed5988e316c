#include "fixtures.hpp"
#include "knotsig/errors.hpp"
#include "knotsig/qjump.hpp"

#include <doctest.h>

#include <cmath>

using namespace knotsig;

namespace {

const Precision kPrec{40};

AlgebraicRoot root_of(const SymPoly& p, std::size_t i = 0)
{
    return isolate_roots(p).at(i);
}

double rel(const BigFloat& a, double b)
{
    return std::abs(a.to_double() - b) / std::abs(b);
}

// c = P(x0) / (Delta'(x0) dx/ds)^2 with x0, dx/ds from long double trig
double closed_form_c(const SymPoly& delta, const SymPoly& p, const AlgebraicRoot& r)
{
    const double s0 = r.turn_double();
    const double x0 = 2 * std::cos(2 * M_PI * s0) - 2;
    const double dxds = -4 * M_PI * std::sin(2 * M_PI * s0);
    auto ev = [](const SymPoly& q, double x) {
        double v = 0;
        for (int k = q.degree(); k >= 0; --k) v = v * x + q.coeff(static_cast<std::size_t>(k)).get_d();
        return v;
    };
    const double d1 = ev(delta.derivative(), x0) * dxds;
    return ev(p, x0) / (d1 * d1);
}

}  // namespace

TEST_CASE("laurent_leading on the trefoil")
{
    const SymPoly d{1, 1};
    const SymPoly p{0, 2, 1};
    const LaurentLeading lead = laurent_leading(d, p, root_of(d), kPrec);
    CHECK(lead.order == -2);
    CHECK(lead.sign == -1);
    REQUIRE(lead.numeric_c);
    CHECK(lead.numeric_c->str(18) == "-0.00844343197019481429");
    // exact value -1 / (12 pi^2)
    CHECK(rel(*lead.numeric_c, -1.0 / (12 * M_PI * M_PI)) < 1e-14);
    CHECK(jones_jump(lead) == -2);
    CHECK(jones_jump(lead, false) == 2);
}

TEST_CASE("laurent_leading on 7_3")
{
    const SymPoly d{1, 5, 2};
    const SymPoly p{0, 22, 65, 46, 9};
    const LaurentLeading a = laurent_leading(d, p, root_of(d, 0), kPrec);
    const LaurentLeading b = laurent_leading(d, p, root_of(d, 1), kPrec);
    REQUIRE(a.numeric_c);
    REQUIRE(b.numeric_c);
    CHECK(a.numeric_c->str(18) == "-0.00388836700144941422");
    CHECK(b.numeric_c->str(18) == "-0.00542424178920663095");
}

TEST_CASE("closed-form c against an independent double-precision evaluation")
{
    for (const auto& k : fixtures::catalog()) {
        if (!k.p || k.p->is_zero()) continue;
        for (const auto& r : isolate_roots(*k.delta)) {
            const LaurentLeading lead = laurent_leading(*k.delta, *k.p, r, kPrec);
            REQUIRE(lead.numeric_c);
            CHECK(rel(*lead.numeric_c, closed_form_c(*k.delta, *k.p, r)) < 1e-10);
            // exact sign agrees with the numeric value
            CHECK(lead.sign == lead.numeric_c->sign());
        }
    }
}

TEST_CASE("numeric Laurent fit agrees with the closed form")
{
    for (const auto& k : fixtures::catalog()) {
        if (!k.p || k.p->is_zero()) continue;
        for (const auto& r : isolate_roots(*k.delta)) {
            CAPTURE(k.name);
            const LaurentLeading lead = laurent_leading(*k.delta, *k.p, r, kPrec);
            const BigFloat s0 = r.turn(kPrec);
            const BigFloat fit = fit_double_pole([&](const BigFloat& s) { return q_value(*k.delta, *k.p, s); }, s0);
            CHECK(rel(fit, lead.numeric_c->to_double()) < 1e-6);
        }
    }
}

TEST_CASE("orders other than -2")
{
    const SymPoly d{1, 1};
    const AlgebraicRoot r = root_of(d);
    const LaurentLeading zero = laurent_leading(d, SymPoly{}, r);
    CHECK(zero.order == kInfiniteOrder);
    CHECK(jones_jump(zero) == 0);
    CHECK_FALSE(zero.numeric_c);

    const LaurentLeading regular = laurent_leading(d, SymPoly{1, 2, 1} * SymPoly{3}, r);
    CHECK(regular.order == 0);
    CHECK(jones_jump(regular) == 0);

    // first-order zero of P: a simple pole in theta
    const LaurentLeading simple = laurent_leading(d, SymPoly{1, 1} * SymPoly{2, 1}, r);
    CHECK(simple.order == -1);
    CHECK(std::abs(jones_jump(simple)) == 1);

    CHECK_THROWS_AS(laurent_leading(SymPoly{1, 2, 1}, SymPoly{1}, root_of(SymPoly{1, 2, 1})), NonSimpleRoot);
    CHECK_THROWS_AS(laurent_leading(SymPoly{1, 3}, SymPoly{1}, r), std::invalid_argument);
}

TEST_CASE("jj divisor examples")
{
    const JumpDivisor t = jj_divisor(SymPoly{1, 1}, SymPoly{0, 2, 1});
    REQUIRE(t.size() == 1);
    CHECK(t.entries[0].jump == -2);
    CHECK(*t.entries[0].root.exact_turn() == mpq_class(1, 6));

    // P(-1/3) = -4 + 14/9 < 0
    CHECK(SymPoly({0, 12, 14})(mpq_class(-1, 3)) == mpq_class(-22, 9));
    CHECK(jj_divisor(SymPoly{1, 3}, SymPoly{0, 12, 14}).jumps() == std::vector<int>{-2});
    CHECK(jj_divisor(SymPoly{1, 5, 2}, SymPoly{0, 22, 65, 46, 9}).jumps() == std::vector<int>{-2, -2});
    CHECK(jj_divisor(SymPoly{1, -1}, SymPoly{}).empty());
    // zero entries are kept
    CHECK(jj_divisor(SymPoly{1, 1}, SymPoly{1, 2, 1}).jumps() == std::vector<int>{0});
    CHECK_THROWS_AS(jj_divisor(SymPoly{1, 2, 1}, SymPoly{1}), NonSimpleRoot);
}

TEST_CASE("mirror: negating P negates jj")
{
    for (const auto& k : fixtures::catalog()) {
        if (!k.p) continue;
        const JumpDivisor a = jj_divisor(*k.delta, *k.p);
        const JumpDivisor b = jj_divisor(*k.delta, -*k.p);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(b.entries[i].jump == -a.entries[i].jump);
    }
}

TEST_CASE("parallel pullback")
{
    const SymPoly f{1, 1};
    CHECK(parallel_pullback(f, 1) == f);
    CHECK(parallel_pullback(f, 2) == SymPoly{1, 4, 1});
    CHECK_THROWS(parallel_pullback(f, 0));

    // f(x(t^n)) == pullback(x(t)) at rational t
    for (const SymPoly& p : {SymPoly{1, 1}, SymPoly{0, 2, 1}, SymPoly{1, 5, 2}, SymPoly{0, 22, 65, 46, 9}})
        for (int n = 1; n <= 4; ++n) {
            const SymPoly q = parallel_pullback(p, n);
            CHECK(q.degree() == n * p.degree());
            for (const mpq_class t : {mpq_class(2), mpq_class(3), mpq_class(2, 7)}) {
                mpq_class tn = 1;
                for (int i = 0; i < n; ++i) tn *= t;
                CHECK(q(t - 2 + 1 / t) == p(tn - 2 + 1 / tn));
            }
        }
}

TEST_CASE("jj is compatible with parallels of the trefoil")
{
    const SymPoly d{1, 1};
    const SymPoly p{0, 2, 1};
    const JumpDivisor base = jj_divisor(d, p);
    for (int n : {2, 3}) {
        CAPTURE(n);
        const SymPoly dn = parallel_pullback(d, n);
        const SymPoly pn = parallel_pullback(p, n);
        const JumpDivisor pulled = jj_divisor(dn, pn);
        // one upper root of Delta(t^n) per root of Delta(t) on the full circle
        CHECK(pulled.size() == static_cast<std::size_t>(n));
        for (const auto& e : base.entries) {
            const double s = e.root.turn_double() / n;
            bool seen = false;
            for (const auto& f : pulled.entries)
                if (std::abs(f.root.turn_double() - s) < 1e-15) {
                    seen = true;
                    CHECK(f.jump == e.jump);
                }
            CHECK(seen);
        }
        // every pulled-back root inherits the sign of c at rho^n
        for (const auto& f : pulled.entries) {
            const double sn = std::fmod(n * f.root.turn_double(), 1.0);
            const double s_base = sn < 0.5 ? sn : 1.0 - sn;
            CHECK(std::abs(s_base - base.entries[0].root.turn_double()) < 1e-12);
            CHECK(f.jump == 2 * sign_at(pn, f.root));
        }
    }
}

TEST_CASE("check_conjecture statuses")
{
    KnotRecord tre{"3_1", BraidWord{1, 1, 1}, SymPoly{1, 1}, SymPoly{0, 2, 1}};
    KnotReport r = check_conjecture(tre);
    CHECK(r.status == Status::match);
    CHECK(r.sigma_minus_one == -2);
    CHECK(r.sigma_from_jj == -2);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].turn == "0.16666666666666666667");

    CHECK(check_conjecture({"4_1", BraidWord{1, -2, 1, -2}, SymPoly{1, -1}, SymPoly{}}).status == Status::vacuous);

    const BraidWord sq = connected_sum(BraidWord{1, 1, 1}, BraidWord{1, 1, 1});
    CHECK(check_conjecture({"3_1#3_1", sq, SymPoly{1, 2, 1}, SymPoly{0, 1}}).status == Status::not_simple);

    KnotReport np = check_conjecture({"7_5", BraidWord{1, 1, 1, 1, 2, -1, 2, 2}, std::nullopt, std::nullopt});
    CHECK(np.status == Status::no_p_data);
    CHECK(np.rows.size() == 2);
    for (const auto& row : np.rows) CHECK(row.j == -2);

    CHECK(check_conjecture({"bad", BraidWord{1, 1, 1}, SymPoly{1, 1}, SymPoly{0, -2, -1}}).status ==
          Status::mismatch);

    KnotReport odd = check_conjecture({"odd", BraidWord{1, 1, 1}, SymPoly{1, 1}, SymPoly{0, 1, 1}});
    CHECK(odd.status == Status::mismatch);
    CHECK(odd.note.find("odd") != std::string::npos);

    CHECK_THROWS_AS(check_conjecture({"wrong", BraidWord{1, 1, 1}, SymPoly{1, 3}, std::nullopt}), Error);
}

TEST_CASE("status names")
{
    CHECK(to_string(Status::match) == "MATCH");
    CHECK(to_string(Status::mismatch) == "MISMATCH");
    CHECK(to_string(Status::not_simple) == "NOT_SIMPLE");
    CHECK(to_string(Status::no_p_data) == "NO_P_DATA");
    CHECK(to_string(Status::vacuous) == "VACUOUS");
    CHECK(to_string(Status::search_exhausted) == "SEARCH_EXHAUSTED");
    CHECK(is_failure(Status::mismatch));
    CHECK(is_failure(Status::search_exhausted));
    CHECK_FALSE(is_failure(Status::no_p_data));
}
