#include "knotsig/sympoly.hpp"

#include "knotsig/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knotsig {

namespace {

int sgn(const mpq_class& q) { return ::sgn(q); }

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- SymPoly

SymPoly::SymPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

SymPoly::SymPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void SymPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class SymPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

bool SymPoly::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c.get_den() == 1; });
}

SymPoly SymPoly::from_laurent(std::span<const mpz_class> palindrome)
{
    if (palindrome.size() % 2 == 0)
        throw std::invalid_argument("Laurent coefficient list must have odd length");
    const std::size_t n = palindrome.size();
    for (std::size_t j = 0; j < n; ++j)
        if (palindrome[j] != palindrome[n - 1 - j])
            throw std::invalid_argument("Laurent polynomial is not symmetric under t -> 1/t");

    const long g = static_cast<long>(n / 2);
    std::vector<mpz_class> rest(palindrome.begin(), palindrome.end());
    std::vector<mpq_class> out(static_cast<std::size_t>(g) + 1);
    // x^d = sum_j (-1)^j C(2d, j) t^(d-j); peel from the top degree down.
    for (long d = g; d >= 0; --d) {
        mpz_class a = rest[static_cast<std::size_t>(d + g)];
        out[static_cast<std::size_t>(d)] = a;
        if (a == 0) continue;
        for (long j = 0; j <= 2 * d; ++j) {
            mpz_class term = binomial(2 * d, j) * a;
            if (j % 2) term = -term;
            rest[static_cast<std::size_t>(d - j + g)] -= term;
        }
    }
    return SymPoly(std::move(out));
}

std::vector<mpq_class> SymPoly::to_laurent() const
{
    const long d = degree();
    if (d < 0) return {mpq_class(0)};
    std::vector<mpq_class> out(static_cast<std::size_t>(2 * d + 1));
    for (long k = 0; k <= d; ++k) {
        const mpq_class& a = coeffs_[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        for (long j = 0; j <= 2 * k; ++j) {
            mpq_class term = mpq_class(binomial(2 * k, j)) * a;
            if (j % 2) term = -term;
            out[static_cast<std::size_t>(k - j + d)] += term;
        }
    }
    return out;
}

mpq_class SymPoly::operator()(const mpq_class& x) const
{
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigFloat SymPoly::operator()(const BigFloat& x) const
{
    BigFloat acc = x.like(0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += x.like(*it);
    }
    return acc;
}

SymPoly SymPoly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return SymPoly(std::move(d));
}

SymPoly SymPoly::monic() const
{
    if (is_zero()) return {};
    SymPoly r(*this);
    const mpq_class lead = leading();
    for (auto& c : r.coeffs_) c /= lead;
    return r;
}

SymPoly SymPoly::compose(const SymPoly& inner) const
{
    SymPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += SymPoly(std::vector<mpq_class>{*it});
    }
    return acc;
}

SymPoly SymPoly::operator-() const
{
    SymPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

SymPoly& SymPoly::operator*=(const mpq_class& c)
{
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

// ---------------------------------------------------------------- text I/O

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    SymPoly parse()
    {
        skip_ws();
        if (peek() == '[') return parse_list();
        return parse_sum();
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        std::ostringstream os;
        os << "polynomial parse error at column " << pos_ + 1 << ": " << what << " in \"" << s_ << "\"";
        throw ParseError(os.str());
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }

    mpz_class parse_uint()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    mpq_class parse_rational_unsigned()
    {
        mpq_class q(parse_uint());
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            mpz_class den = parse_uint();
            if (den == 0) fail("zero denominator");
            q = mpq_class(q.get_num(), den);
            q.canonicalize();
        }
        return q;
    }

    SymPoly parse_list()
    {
        ++pos_;  // '['
        std::vector<mpq_class> coeffs;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            if (!at_end()) fail("trailing characters");
            return {};
        }
        for (;;) {
            skip_ws();
            int sign = 1;
            if (peek() == '-' || peek() == '+') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            mpq_class c = parse_rational_unsigned();
            coeffs.push_back(sign < 0 ? mpq_class(-c) : c);
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            fail("expected ',' or ']'");
        }
        if (!at_end()) fail("trailing characters");
        return SymPoly(std::move(coeffs));
    }

    SymPoly parse_sum()
    {
        std::vector<mpq_class> coeffs;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;

            mpq_class c = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = parse_rational_unsigned();
                have_coeff = true;
                skip_ws();
                if (peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (peek() != 'x' && peek() != 'z') fail("expected variable after '*'");
                }
            }
            std::size_t power = 0;
            if (peek() == 'x' || peek() == 'z') {
                const char var = peek();
                ++pos_;
                skip_ws();
                unsigned long e = 1;
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    mpz_class ez = parse_uint();
                    if (!ez.fits_ulong_p() || ez > 100000) fail("exponent too large");
                    e = ez.get_ui();
                }
                if (var == 'z') {
                    if (e % 2) fail("odd power of z");
                    e /= 2;
                }
                power = e;
            } else if (!have_coeff) {
                fail("expected coefficient or variable");
            }
            if (coeffs.size() <= power) coeffs.resize(power + 1);
            coeffs[power] += sign < 0 ? mpq_class(-c) : c;
        }
        if (first) fail("empty polynomial");
        return SymPoly(std::move(coeffs));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SymPoly SymPoly::parse(std::string_view text)
{
    return PolyParser(text).parse();
}

std::string SymPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "x";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::string SymPoly::list_str() const
{
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ",";
        out += coeffs_[k].get_str();
    }
    return out + "]";
}

// ---------------------------------------------------------------- division

std::pair<SymPoly, SymPoly> divmod(const SymPoly& num, const SymPoly& den)
{
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> rem = num.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {SymPoly{}, num};
    std::vector<mpq_class> quo(static_cast<std::size_t>(num.degree() - dd + 1));
    const mpq_class& lead = den.leading();
    for (int k = num.degree(); k >= dd; --k) {
        mpq_class q = rem[static_cast<std::size_t>(k)] / lead;
        quo[static_cast<std::size_t>(k - dd)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {SymPoly(std::move(quo)), SymPoly(std::move(rem))};
}

SymPoly gcd(const SymPoly& a, const SymPoly& b)
{
    SymPoly u = a.monic();
    SymPoly v = b.monic();
    while (!v.is_zero()) {
        SymPoly r = divmod(u, v).second.monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

std::vector<SymPoly> squarefree_factors(const SymPoly& p)
{
    std::vector<SymPoly> out;
    if (p.degree() < 1) return out;
    const SymPoly dp = p.derivative();
    SymPoly a = gcd(p, dp);
    SymPoly b = divmod(p, a).first;
    SymPoly c = divmod(dp, a).first;
    SymPoly d = c - b.derivative();
    while (b.degree() >= 1) {
        SymPoly f = gcd(b, d);
        out.push_back(f.monic());
        b = divmod(b, f).first;
        c = divmod(d, f).first;
        d = c - b.derivative();
    }
    // Drop trailing constant factors so the list ends at the top multiplicity.
    while (!out.empty() && out.back().degree() < 1) out.pop_back();
    return out;
}

SymPoly squarefree_part(const SymPoly& p)
{
    if (p.degree() < 1) return p.is_zero() ? SymPoly{} : SymPoly{1};
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

// ---------------------------------------------------------------- evaluation

BigFloat x_of_turn(const BigFloat& s)
{
    const BigFloat two = s.like(2L);
    return two * cos(two * s.pi_like() * s) - two;
}

BigFloat turn_of_x(const BigFloat& x)
{
    const BigFloat two = x.like(2L);
    return acos(x.like(1L) + x / two) / (two * x.pi_like());
}

BigFloat eval_turn(const SymPoly& p, const BigFloat& s)
{
    return p(x_of_turn(s));
}

BigFloat eval_turn(const SymPoly& p, double s, Precision prec)
{
    return eval_turn(p, BigFloat(s, prec));
}

// ---------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const SymPoly& squarefree)
{
    if (squarefree.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    auto scaled = [](const SymPoly& p) {
        // Positive rescaling keeps every sign intact while bounding growth.
        if (p.is_zero()) return p;
        return p * mpq_class(1 / abs(p.leading()));
    };
    chain_.push_back(scaled(squarefree));
    if (squarefree.degree() < 1) return;
    chain_.push_back(scaled(squarefree.derivative()));
    for (;;) {
        SymPoly r = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(scaled(r));
    }
}

int SturmSequence::variations(const mpq_class& at) const
{
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = sgn(p(at));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count(const mpq_class& lo, const mpq_class& hi) const
{
    return variations(lo) - variations(hi);
}

// ---------------------------------------------------------------- roots

AlgebraicRoot::AlgebraicRoot(SymPoly defpoly, mpq_class lo, mpq_class hi, int multiplicity)
    : defpoly_(std::move(defpoly)), lo_(std::move(lo)), hi_(std::move(hi)), multiplicity_(multiplicity)
{
    if (multiplicity_ < 1) throw std::invalid_argument("root multiplicity must be positive");
    if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval must satisfy lo < hi");
    if (lo_ < -4 || hi_ > 0) throw std::invalid_argument("isolating interval must lie in [-4, 0]");
    sign_lo_ = sgn(defpoly_(lo_));
    if (sign_lo_ == 0 || sgn(defpoly_(hi_)) == 0)
        throw std::invalid_argument("isolating interval endpoint is a root");
    if (SturmSequence(defpoly_).count(lo_, hi_) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
}

AlgebraicRoot AlgebraicRoot::bisected() const
{
    AlgebraicRoot r(*this);
    mpq_class mid = (lo_ + hi_) / 2;
    int s = sgn(defpoly_(mid));
    if (s == 0) {
        // The midpoint is the root itself; recentre a half-width window on it.
        mpq_class q = (hi_ - lo_) / 4;
        r.lo_ = mid - q;
        r.hi_ = mid + q;
        r.sign_lo_ = sgn(defpoly_(r.lo_));
    } else if (s == sign_lo_) {
        r.lo_ = mid;
    } else {
        r.hi_ = mid;
    }
    return r;
}

AlgebraicRoot AlgebraicRoot::refined(unsigned digits) const
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const mpq_class target(1, scale);
    AlgebraicRoot r(*this);
    while (r.width() >= target) r = r.bisected();
    return r;
}

BigFloat AlgebraicRoot::x(Precision prec) const
{
    AlgebraicRoot r = refined(prec.digits + 8);
    return BigFloat(mpq_class((r.lo_ + r.hi_) / 2), prec);
}

BigFloat AlgebraicRoot::turn(Precision prec) const
{
    if (auto q = exact_turn()) return BigFloat(*q, prec);
    return turn_of_x(x(prec));
}

double AlgebraicRoot::turn_double() const
{
    return turn(Precision{20}).to_double();
}

std::optional<mpq_class> AlgebraicRoot::exact_turn() const
{
    static const std::pair<long, mpq_class> table[] = {
        {-1, mpq_class(1, 6)}, {-2, mpq_class(1, 4)}, {-3, mpq_class(1, 3)}};
    for (const auto& [x0, s0] : table) {
        mpq_class c(x0);
        if (lo_ < c && c < hi_ && defpoly_(c) == 0) return s0;
    }
    return std::nullopt;
}

namespace {

SymPoly strip_endpoint_factors(SymPoly f)
{
    const SymPoly x_factor{0, 1};
    const SymPoly x4_factor{4, 1};
    while (f.degree() >= 1 && f(mpq_class(0)) == 0) f = divmod(f, x_factor).first;
    while (f.degree() >= 1 && f(mpq_class(-4)) == 0) f = divmod(f, x4_factor).first;
    return f;
}

mpq_class split_point(const SymPoly& f, const mpq_class& lo, const mpq_class& hi)
{
    mpq_class w = hi - lo;
    mpq_class m = (lo + hi) / 2;
    for (long k = 3; f(m) == 0; ++k) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k));
        m = lo + w / 2 + w / mpq_class(den);
    }
    return m;
}

}  // namespace

std::vector<AlgebraicRoot> isolate_roots(const SymPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("cannot isolate the roots of the zero polynomial");
    std::vector<AlgebraicRoot> roots;
    const auto factors = squarefree_factors(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        SymPoly f = strip_endpoint_factors(factors[i]).monic();
        if (f.degree() < 1) continue;
        const SturmSequence sturm(f);
        struct Span {
            mpq_class lo, hi;
            int count;
        };
        std::vector<Span> stack{{mpq_class(-4), mpq_class(0), sturm.count(-4, 0)}};
        while (!stack.empty()) {
            Span s = stack.back();
            stack.pop_back();
            if (s.count == 0) continue;
            if (s.count == 1) {
                roots.emplace_back(f, s.lo, s.hi, static_cast<int>(i + 1));
                continue;
            }
            mpq_class m = split_point(f, s.lo, s.hi);
            int left = sturm.count(s.lo, m);
            stack.push_back({m, s.hi, s.count - left});
            stack.push_back({s.lo, m, left});
        }
    }
    // Roots from different squarefree factors may have overlapping intervals;
    // refine until the ordering by interval is unambiguous.
    for (;;) {
        std::sort(roots.begin(), roots.end(),
                  [](const AlgebraicRoot& a, const AlgebraicRoot& b) { return a.lo() > b.lo(); });
        bool overlap = false;
        for (std::size_t k = 1; k < roots.size(); ++k) {
            if (roots[k].hi() > roots[k - 1].lo()) {
                roots[k] = roots[k].bisected();
                roots[k - 1] = roots[k - 1].bisected();
                overlap = true;
            }
        }
        if (!overlap) break;
    }
    return roots;
}

bool same_point(const AlgebraicRoot& a, const AlgebraicRoot& b)
{
    const SymPoly g = gcd(a.defpoly(), b.defpoly());
    if (g.degree() < 1) return false;
    const SturmSequence sturm(g);
    AlgebraicRoot ra = a;
    AlgebraicRoot rb = b;
    if (sturm.count(ra.lo(), ra.hi()) == 0 || sturm.count(rb.lo(), rb.hi()) == 0) return false;
    for (;;) {
        if (ra.hi() <= rb.lo() || rb.hi() <= ra.lo()) return false;
        const mpq_class lo = std::min(ra.lo(), rb.lo());
        const mpq_class hi = std::max(ra.hi(), rb.hi());
        if (sturm.count(lo, hi) == 1) return true;
        ra = ra.bisected();
        rb = rb.bisected();
    }
}

int sign_at(const SymPoly& p, const AlgebraicRoot& r)
{
    if (p.is_zero()) return 0;
    if (p.degree() == 0) return sgn(p.leading());
    const SymPoly g = gcd(p, r.defpoly());
    if (g.degree() >= 1 && SturmSequence(g).count(r.lo(), r.hi()) >= 1) return 0;

    const SymPoly q = squarefree_part(p);
    const SturmSequence sturm(q);
    AlgebraicRoot cur = r;
    for (;;) {
        if (q(cur.lo()) != 0 && sturm.count(cur.lo(), cur.hi()) == 0) return sgn(p(cur.lo()));
        cur = cur.bisected();
    }
}

ThetaSign theta_sign(const SymPoly& p, const AlgebraicRoot& r)
{
    if (p.is_zero()) throw std::invalid_argument("theta_sign of the zero polynomial");
    SymPoly q = p;
    int order = 0;
    int s = sign_at(q, r);
    while (s == 0) {
        q = q.derivative();
        ++order;
        s = sign_at(q, r);
    }
    return {order, (order % 2) ? -s : s};
}

}  // namespace knotsig
