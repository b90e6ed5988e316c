#include "knotsig/torus.hpp"

#include "knotsig/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knotsig {

TorusKnot::TorusKnot(int a, int b) : a_(a), b_(b)
{
    if (a < 2 || b <= a) throw std::invalid_argument("torus knot needs 2 <= a < b");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("T(" + std::to_string(a) + "," + std::to_string(b) + ") is not a knot: gcd != 1");
}

std::string TorusKnot::name() const
{
    return "T(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::vector<TorusKnot> torus_knots(int max_ab)
{
    std::vector<TorusKnot> out;
    for (int a = 2; a * (a + 1) <= max_ab; ++a)
        for (int b = a + 1; a * b <= max_ab; ++b)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

namespace {

// Dense integer polynomials in t, ascending.
using ZPoly = std::vector<mpz_class>;

ZPoly binomial_minus_one(int n)
{
    ZPoly p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b)
{
    ZPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Division by a monic polynomial; throws if the remainder is nonzero.
ZPoly exact_divide(ZPoly num, const ZPoly& den)
{
    const std::size_t dd = den.size() - 1;
    ZPoly quo(num.size() - dd);
    for (std::size_t k = num.size(); k-- > dd;) {
        const mpz_class q = num[k];
        quo[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= q * den[j];
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (num[k] != 0) throw Error("torus Alexander quotient left a nonzero remainder");
    return quo;
}

}  // namespace

SymPoly delta_torus(const TorusKnot& k)
{
    const int a = k.a();
    const int b = k.b();
    const ZPoly num = multiply(binomial_minus_one(a * b), binomial_minus_one(1));
    const ZPoly den = multiply(binomial_minus_one(a), binomial_minus_one(b));
    // The half-integer powers contribute t^-g, so the quotient is already the
    // palindromic coefficient list of t^-g .. t^g.
    return SymPoly::from_laurent(exact_divide(num, den));
}

SymPoly p_torus(const TorusKnot& k)
{
    const long a = k.a();
    const long b = k.b();
    const mpq_class ab(a * b);
    // Q = C0 + g / ab, with g in the x-basis:
    // g = 1/4 - (x+4) p'/p - (x(x+4) p'' + (x+2) p')/p + 2 x (x+4) p'^2 / p^2.
    const mpq_class c0 = mpq_class(1, 4) * (ab - mpq_class(a, b) - mpq_class(b, a));
    const SymPoly p = delta_torus(k);
    const SymPoly dp = p.derivative();
    const SymPoly ddp = dp.derivative();
    const SymPoly x{0, 1};
    const SymPoly x_plus_2{2, 1};
    const SymPoly x_plus_4{4, 1};
    const SymPoly x_x4 = x * x_plus_4;

    SymPoly regular = p * p * mpq_class(c0 + mpq_class(1) / (4 * ab));
    SymPoly rest = -(x_plus_4 * dp * p) - x_x4 * ddp * p - x_plus_2 * dp * p + x_x4 * dp * dp * mpq_class(2);
    return regular + rest * mpq_class(1 / ab);
}

std::vector<mpq_class> roots_torus(const TorusKnot& k)
{
    const long a = k.a();
    const long b = k.b();
    std::vector<mpq_class> out;
    for (long m = 1; m < a; ++m)
        for (long n = 1; n < b; ++n) {
            const long num = (m * b + n * a) % (a * b);
            if (2 * num < a * b) out.emplace_back(num, a * b);
        }
    for (auto& q : out) q.canonicalize();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TorusJump> jump_torus(const TorusKnot& k)
{
    std::vector<TorusJump> out;
    for (auto& s : roots_torus(k)) out.push_back({s, -2});
    return out;
}

BigFloat q_torus(const TorusKnot& k, const BigFloat& s)
{
    const long a = k.a();
    const long b = k.b();
    const SymPoly p = delta_torus(k);
    const SymPoly dp = p.derivative();
    const SymPoly ddp = dp.derivative();

    const BigFloat theta = s.like(2L) * s.pi_like() * s;
    const BigFloat sin_t = sin(theta);
    const BigFloat cos_t = cos(theta);
    const BigFloat cos_half = cos(theta / s.like(2L));
    const BigFloat x = s.like(2L) * cos_t - s.like(2L);

    const BigFloat f = p(x);
    const BigFloat guard = pow(s.like(2L), -static_cast<long>(s.bits() / 2));
    if (abs(f) < guard) throw DegenerateEvaluation("q_torus evaluated at an Alexander root");

    const BigFloat px = dp(x);
    const BigFloat f1 = -s.like(2L) * sin_t * px;
    const BigFloat f2 = s.like(4L) * sin_t * sin_t * ddp(x) - s.like(2L) * cos_t * px;

    const BigFloat g = s.like(mpq_class(1, 4)) - s.like(4L) * cos_half * cos_half * px / f + f2 / f -
                       s.like(2L) * f1 * f1 / (f * f);
    const BigFloat c0 = s.like(mpq_class(a * b) - mpq_class(a, b) - mpq_class(b, a)) / s.like(4L);
    return c0 + g / s.like(a * b);
}

BraidWord torus_braid(const TorusKnot& k)
{
    std::vector<int> letters;
    for (int rep = 0; rep < k.b(); ++rep)
        for (int g = 1; g < k.a(); ++g) letters.push_back(g);
    return BraidWord(std::move(letters));
}

TorusReport verify_torus(const TorusKnot& k, Precision prec)
{
    TorusReport rep{k, Status::match, {}, 0, {}};
    auto fail = [&](const std::string& why) {
        rep.status = Status::mismatch;
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += why;
    };

    const auto kearton = jump_torus(k);
    const SymPoly delta = delta_torus(k);
    const auto roots = isolate_roots(delta);
    const JumpDivisor exact = jj_divisor(delta, p_torus(k), prec);

    const IntMatrix v = seifert_matrix(torus_braid(k));
    if (alexander(v) != delta) fail("Seifert Alexander polynomial differs from the closed form");
    const JumpDivisor seifert = jump_divisor(v, Execution::serial);
    rep.sigma_minus_one = signature_at(v, 0.5);

    if (roots.size() != kearton.size() || seifert.size() != kearton.size() || exact.size() != kearton.size()) {
        fail("root counts differ");
        return rep;
    }

    const std::vector<mpq_class> laurent = delta.to_laurent();
    const long d = delta.degree();
    auto q = [&](const BigFloat& s) { return q_torus(k, s); };

    for (std::size_t i = 0; i < kearton.size(); ++i) {
        TorusRow row;
        row.turn = kearton[i].turn;
        row.turn_str = row.turn.get_str();
        row.kearton = kearton[i].jump;

        const BigFloat s0(row.turn, prec);
        const BigFloat x0 = x_of_turn(s0);
        const AlgebraicRoot r = roots[i].refined(prec.digits - 8);
        if (!(BigFloat(r.lo(), prec) < x0 && x0 < BigFloat(r.hi(), prec)))
            fail("isolated root " + std::to_string(i) + " does not contain turn " + row.turn_str);
        if (r.multiplicity() != 1) fail("non-simple root at turn " + row.turn_str);

        // Sine sum S = sum k a_k sin(k theta0); d/dtheta Delta = -2 S, so S != 0
        // exactly when Delta has a first-order zero in theta.
        const BigFloat theta0 = s0.like(2L) * s0.pi_like() * s0;
        BigFloat sine_sum = s0.like(0L);
        for (long j = 1; j <= d; ++j)
            sine_sum += s0.like(laurent[static_cast<std::size_t>(d + j)] * j) * sin(s0.like(j) * theta0);
        const ThetaSign ts = theta_sign(delta, r);
        row.sine_sum = ts.order == 1 ? -2 : 0;
        const BigFloat chain = delta.derivative()(x0) * (-s0.like(2L) * sin(theta0));
        const BigFloat residual = abs(chain + s0.like(2L) * sine_sum);
        if (residual > abs(chain) * pow(s0.like(10L), -static_cast<long>(prec.digits / 2)))
            fail("sine sum disagrees with the chain-rule derivative at turn " + row.turn_str);

        const BigFloat c = fit_double_pole(q, s0);
        row.fitted_c = c.str(20);
        row.fitted = abs(c) > s0.like(mpq_class(1, 1000000000000L)) ? 2 * c.sign() : 0;

        row.exact_p = exact.entries[i].jump;
        row.seifert = seifert.entries[i].jump;
        if (!same_point(seifert.entries[i].root, r) || !same_point(exact.entries[i].root, r))
            fail("root order differs between routes at turn " + row.turn_str);

        if (row.sine_sum != row.kearton || row.fitted != row.kearton || row.exact_p != row.kearton)
            fail("closed-form, sine-sum, fitted and exact jumps disagree at turn " + row.turn_str);
        else if (row.seifert != row.kearton)
            fail("signature jump " + std::to_string(row.seifert) + " vs Jones jump " + std::to_string(row.kearton) +
                 " at turn " + row.turn_str);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<TorusReport> sweep_torus(int max_ab, Execution exec, Precision prec)
{
    const auto knots = torus_knots(max_ab);
    std::vector<TorusReport> out(knots.size(), TorusReport{TorusKnot(2, 3), Status::match, {}, 0, {}});
    for_each_index(knots.size(), exec, [&](std::size_t i) { out[i] = verify_torus(knots[i], prec); });
    return out;
}

}  // namespace knotsig
