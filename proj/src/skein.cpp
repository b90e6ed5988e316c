#include "knotsig/skein.hpp"

#include "knotsig/errors.hpp"
#include "knotsig/invariants.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace knotsig {

namespace {

SymPoly alexander_of(const BraidWord& b)
{
    return alexander(seifert_matrix(b));
}

BraidWord with_sign(const BraidWord& b, std::size_t pos, int sign)
{
    std::vector<int> l = b.letters();
    l[pos] = sign * std::abs(l[pos]);
    return BraidWord(std::move(l));
}

void scan(const BraidWord& b, const AlgebraicRoot& r, int threading, bool first_only,
          std::vector<GoodProjection>& out)
{
    for (std::size_t pos = 0; pos < b.length(); ++pos) {
        if (sign_at(alexander_of(flip_crossing(b, pos)), r) == 0) continue;
        out.push_back({b, pos, b.letters()[pos] > 0 ? 1 : -1, r, threading});
        if (first_only) return;
    }
}

}  // namespace

std::vector<GoodProjection> good_crossings(const BraidWord& b, const AlgebraicRoot& r)
{
    std::vector<GoodProjection> out;
    scan(b, r, 0, false, out);
    return out;
}

GoodProjection make_good(const BraidWord& b, const AlgebraicRoot& r, int max_threading)
{
    if (sign_at(alexander_of(b), r) != 0)
        throw std::invalid_argument("make_good: the point is not a root of the Alexander polynomial of " + b.str());
    if (r.multiplicity() > 1) throw NonSimpleRoot("make_good needs a simple root");

    std::vector<BraidWord> frontier{b};
    for (int depth = 0; depth <= max_threading; ++depth) {
        std::vector<BraidWord> next;
        for (const BraidWord& w : frontier) {
            std::vector<GoodProjection> found;
            scan(w, r, depth, true, found);
            if (!found.empty()) return found.front();
            if (depth == max_threading) continue;
            for (std::size_t pos = 0; pos <= w.length(); ++pos)
                for (int gen = 1; gen < w.strands(); ++gen) next.push_back(insert_trivial_pair(w, pos, gen));
        }
        frontier = std::move(next);
    }
    throw SearchExhausted("no good crossing for " + b.str() + " within " + std::to_string(max_threading) +
                          " threading moves");
}

SkeinEvaluation skein_evaluate(const GoodProjection& g)
{
    const SymPoly plus = alexander_of(with_sign(g.braid, g.pos, 1));
    const SymPoly minus = alexander_of(with_sign(g.braid, g.pos, -1));
    SkeinEvaluation e;
    e.plus = theta_sign(plus, g.root);
    e.minus = theta_sign(minus, g.root);
    e.jump = 2 * g.epsilon * e.plus.sign * e.minus.sign;
    return e;
}

int skein_jump(const GoodProjection& g)
{
    return skein_evaluate(g).jump;
}

bool verify_lemma_skeins(const BraidWord& b, std::size_t pos, double s)
{
    if (pos >= b.length()) throw std::out_of_range("crossing index out of range");
    const BraidWord kp = with_sign(b, pos, 1);
    const BraidWord km = with_sign(b, pos, -1);
    const IntMatrix vp = seifert_matrix(kp);
    const IntMatrix vm = seifert_matrix(km);
    const BigFloat dp = eval_turn(alexander(vp), s);
    const BigFloat dm = eval_turn(alexander(vm), s);
    const BigFloat tiny(1e-12, Precision{});
    if (abs(dp) < tiny || abs(dm) < tiny)
        throw std::domain_error("Alexander polynomial vanishes at s = " + std::to_string(s));
    const int expected = dp.sign() * dm.sign() < 0 ? 2 : 0;
    return signature_at(vm, s) - signature_at(vp, s) == expected;
}

namespace {

struct GaussQ {
    mpq_class re;
    mpq_class im;

    bool is_zero() const { return re == 0 && im == 0; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b)
    {
        const mpq_class n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
};

using GaussMatrix = std::vector<std::vector<GaussQ>>;

// Exact determinant; real for Hermitian input.
mpq_class hermitian_det(GaussMatrix m)
{
    const std::size_t n = m.size();
    GaussQ det{1, 0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det.re = -det.re;
            det.im = -det.im;
        }
        det = det * m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            const GaussQ f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    if (det.im != 0) throw Error("Hermitian determinant has an imaginary part");
    return det.re;
}

Eigen::MatrixXcd to_complex(const GaussMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            out(i, j) = {e.re.get_d(), e.im.get_d()};
        }
    return out;
}

enum class Trial { pass, fail, degenerate };

Trial run_trial(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> half_steps(-10, 10);
    std::uniform_int_distribution<int> cos_num(-63, 63);

    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    GaussMatrix plus(dim, std::vector<GaussQ>(dim));
    const mpq_class a(half_steps(rng), 2);
    // cos(theta) = k / 64 keeps 2 - 2 cos(theta) rational with theta in (0, pi).
    const mpq_class cos_theta(cos_num(rng), 64);
    plus[0][0] = {a, 0};
    for (std::size_t j = 1; j < dim; ++j) {
        GaussQ v{entry(rng), entry(rng)};
        plus[0][j] = v;
        plus[j][0] = {v.re, -v.im};
    }
    for (std::size_t i = 1; i < dim; ++i) {
        plus[i][i] = {entry(rng), 0};
        for (std::size_t j = i + 1; j < dim; ++j) {
            GaussQ e{entry(rng), entry(rng)};
            plus[i][j] = e;
            plus[j][i] = {e.re, -e.im};
        }
    }
    GaussMatrix minus = plus;
    minus[0][0].re = a + 2 - 2 * cos_theta;

    const mpq_class det_plus = hermitian_det(plus);
    const mpq_class det_minus = hermitian_det(minus);
    if (det_plus == 0 || det_minus == 0) return Trial::degenerate;

    int sig_plus = 0;
    int sig_minus = 0;
    try {
        sig_plus = hermitian_signature(to_complex(plus));
        sig_minus = hermitian_signature(to_complex(minus));
    } catch (const DegenerateEvaluation&) {
        return Trial::degenerate;
    }
    const int expected = ::sgn(det_plus) * ::sgn(det_minus) < 0 ? 2 : 0;
    return sig_minus - sig_plus == expected ? Trial::pass : Trial::fail;
}

}  // namespace

TborderedResult verify_lemma_tbordered(int n, int trials, std::uint64_t seed, Execution exec)
{
    if (n < 0) throw std::invalid_argument("verify_lemma_tbordered needs n >= 0");
    std::vector<Trial> outcome(static_cast<std::size_t>(trials));
    std::vector<int> redraws(static_cast<std::size_t>(trials), 0);
    for_each_index(outcome.size(), exec, [&](std::size_t i) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(n)};
        std::mt19937_64 rng(seq);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            outcome[i] = run_trial(n, rng);
            if (outcome[i] != Trial::degenerate) return;
            ++redraws[i];
        }
    });
    TborderedResult res;
    res.trials = trials;
    for (std::size_t i = 0; i < outcome.size(); ++i) {
        res.passed += outcome[i] == Trial::pass ? 1 : 0;
        res.resampled += redraws[i];
    }
    return res;
}

}  // namespace knotsig
