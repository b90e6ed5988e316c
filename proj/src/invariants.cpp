#include "knotsig/invariants.hpp"

#include "knotsig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <numbers>
#include <numeric>
#include <set>

namespace knotsig {

std::vector<int> JumpDivisor::jumps() const
{
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.jump);
    return out;
}

int JumpDivisor::total() const
{
    int s = 0;
    for (const auto& e : entries) s += e.jump;
    return s;
}

namespace {

// Fraction-free Gaussian elimination; exact integer determinant.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

SymPoly alexander(const IntMatrix& v)
{
    const std::size_t n = v.size();
    if (n == 0) return SymPoly{1};
    if (n % 2) throw Error("Seifert matrix has odd dimension " + std::to_string(n));

    // det(tV - V^T) has degree <= n in t: sample at n + 1 integer points
    // centred on 0 and interpolate exactly (Newton form over Q).
    std::vector<mpq_class> nodes(n + 1);
    std::vector<mpq_class> divided(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const long t = static_cast<long>(k) - static_cast<long>(n / 2);
        std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = mpz_class(t) * static_cast<long>(v(i, j)) - static_cast<long>(v(j, i));
        nodes[k] = t;
        divided[k] = bareiss_det(std::move(m));
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t k = n; k >= level; --k)
            divided[k] = (divided[k] - divided[k - 1]) / (nodes[k] - nodes[k - level]);

    // Newton form -> monomial coefficients.
    std::vector<mpq_class> poly{divided[n]};
    for (std::size_t k = n; k-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * nodes[k];
        }
        next[0] += divided[k];
        poly = std::move(next);
    }
    poly.resize(n + 1);

    std::vector<mpz_class> palindrome(n + 1);
    mpz_class at_one = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (poly[k].get_den() != 1) throw Error("non-integral Alexander coefficient");
        palindrome[k] = poly[k].get_num();
        at_one += palindrome[k];
    }
    if (at_one != 1 && at_one != -1)
        throw Error("invalid Seifert matrix: det(V - V^T) = " + at_one.get_str() + ", expected +-1");
    if (at_one < 0)
        for (auto& c : palindrome) c = -c;
    return SymPoly::from_laurent(palindrome);
}

int hermitian_signature(const Eigen::MatrixXcd& b, double tol)
{
    if (b.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver failed to converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    const double radius = ev.cwiseAbs().maxCoeff();
    const double guard = tol * radius;
    int sig = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i]) <= guard || radius == 0.0)
        {
            char msg[96];
            std::snprintf(msg, sizeof msg, "eigenvalue %.3e within guard %.3e of zero", ev[i], guard);
            throw DegenerateEvaluation(msg);
        }
        sig += ev[i] > 0 ? 1 : -1;
    }
    return sig;
}

Eigen::MatrixXcd hermitian_form(const IntMatrix& v, double s)
{
    const auto n = static_cast<Eigen::Index>(v.size());
    const std::complex<double> t = std::polar(1.0, 2.0 * std::numbers::pi * s);
    const std::complex<double> a = 1.0 - t;
    const std::complex<double> b = 1.0 - std::conj(t);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = a * static_cast<double>(v(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) +
                      b * static_cast<double>(v(static_cast<std::size_t>(j), static_cast<std::size_t>(i)));
    return m;
}

int signature_at(const IntMatrix& v, double s)
{
    return hermitian_signature(hermitian_form(v, s));
}

double jump_offset(const std::vector<double>& turns)
{
    std::vector<double> marks{0.0, 0.5};
    marks.insert(marks.end(), turns.begin(), turns.end());
    std::sort(marks.begin(), marks.end());
    double gap = 0.5;
    for (std::size_t k = 1; k < marks.size(); ++k) gap = std::min(gap, marks[k] - marks[k - 1]);
    return std::min(1e-3, gap / 4);
}

JumpDivisor jump_divisor(const IntMatrix& v, Execution exec)
{
    const SymPoly delta = alexander(v);
    std::vector<AlgebraicRoot> roots = isolate_roots(delta);
    std::vector<double> turns;
    turns.reserve(roots.size());
    for (const auto& r : roots) turns.push_back(r.turn_double());
    const double delta_s = jump_offset(turns);

    std::vector<int> jumps(roots.size(), 0);
    for_each_index(roots.size(), exec, [&](std::size_t k) {
        double d = delta_s;
        for (int attempt = 0;; ++attempt) {
            try {
                jumps[k] = signature_at(v, turns[k] + d) - signature_at(v, turns[k] - d);
                return;
            } catch (const DegenerateEvaluation&) {
                if (attempt >= 6) throw;
                d /= 2;
            }
        }
    });

    JumpDivisor out;
    for (std::size_t k = 0; k < roots.size(); ++k) out.entries.push_back({roots[k], jumps[k]});
    return out;
}

std::vector<SignatureSample> signature_samples(const IntMatrix& v, int n, Execution exec)
{
    if (n < 2) throw std::invalid_argument("signature_samples needs n >= 2");
    const SymPoly delta = alexander(v);
    std::vector<double> turns;
    for (const auto& r : isolate_roots(delta)) turns.push_back(r.turn_double());
    const double guard = jump_offset(turns);

    std::set<double> points;
    for (int i = 0; i < n; ++i) {
        const double s = (i + 0.5) / (2.0 * n);
        const bool near_root =
            std::any_of(turns.begin(), turns.end(), [&](double r) { return std::abs(s - r) < guard; });
        if (!near_root) points.insert(s);
    }
    std::vector<double> marks{0.0};
    marks.insert(marks.end(), turns.begin(), turns.end());
    marks.push_back(0.5);
    for (std::size_t k = 1; k < marks.size(); ++k) points.insert((marks[k - 1] + marks[k]) / 2);
    points.insert(0.5);

    std::vector<SignatureSample> out;
    out.reserve(points.size());
    for (double s : points) out.push_back({s, 0});
    for_each_index(out.size(), exec, [&](std::size_t k) { out[k].sigma = signature_at(v, out[k].s); });
    return out;
}

}  // namespace knotsig
