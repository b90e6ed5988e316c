#include "knotsig/braid.hpp"

#include "knotsig/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotsig {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : n_(rows.size())
{
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("IntMatrix must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix r(*this);
    for (auto& v : r.data_) v = -v;
    return r;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix r(a.n_ + b.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.n_; ++i)
        for (std::size_t j = 0; j < b.n_; ++j) r(a.n_ + i, a.n_ + j) = b(i, j);
    return r;
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- BraidWord

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters))
{
    if (letters_.empty()) throw std::invalid_argument("braid word must be nonempty");
    int top = 0;
    for (int l : letters_) {
        if (l == 0) throw std::invalid_argument("braid letter 0 is not a generator");
        top = std::max(top, std::abs(l));
    }
    strands_ = top + 1;
}

BraidWord BraidWord::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "braid parse error at column " << pos + 1 << ": " << what << " in \"" << text << "\"";
        throw ParseError(os.str());
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<int> letters;
    for (;;) {
        skip();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        if (pos - start > 6) fail("generator index too large");
        int v = std::stoi(std::string(text.substr(start, pos - start)));
        if (v == 0) fail("letter 0 is not a generator");
        letters.push_back(neg ? -v : v);
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
        }
        fail("expected ',' or ']'");
    }
    skip();
    if (pos != text.size()) fail("trailing characters");
    return BraidWord(std::move(letters));
}

std::string BraidWord::str() const
{
    std::string out = "[";
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(letters_[k]);
    }
    return out + "]";
}

int BraidWord::components() const
{
    std::vector<int> perm(static_cast<std::size_t>(strands_));
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : letters_) {
        const auto i = static_cast<std::size_t>(std::abs(l) - 1);
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
    }
    return cycles;
}

BraidWord flip_crossing(const BraidWord& b, std::size_t pos)
{
    if (pos >= b.length()) throw std::out_of_range("crossing index " + std::to_string(pos) + " out of range");
    std::vector<int> l = b.letters();
    l[pos] = -l[pos];
    return BraidWord(std::move(l));
}

BraidWord mirror(const BraidWord& b)
{
    std::vector<int> l = b.letters();
    for (int& v : l) v = -v;
    return BraidWord(std::move(l));
}

BraidWord insert_trivial_pair(const BraidWord& b, std::size_t pos, int gen)
{
    if (pos > b.length()) throw std::out_of_range("insertion index " + std::to_string(pos) + " out of range");
    if (gen < 1 || gen > b.strands() - 1)
        throw std::out_of_range("generator " + std::to_string(gen) + " out of range");
    std::vector<int> l = b.letters();
    const auto at = l.begin() + static_cast<std::ptrdiff_t>(pos);
    l.insert(at, {gen, -gen});
    return BraidWord(std::move(l));
}

BraidWord stabilize(const BraidWord& b, bool positive)
{
    std::vector<int> l = b.letters();
    l.push_back(positive ? b.strands() : -b.strands());
    return BraidWord(std::move(l));
}

BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2)
{
    const int shift = b1.strands() - 1;
    std::vector<int> l = b1.letters();
    for (int v : b2.letters()) l.push_back(v > 0 ? v + shift : v - shift);
    return BraidWord(std::move(l));
}

// ---------------------------------------------------------------- Seifert

IntMatrix seifert_matrix(const BraidWord& b)
{
    const int comps = b.components();
    if (comps != 1)
        throw Error("braid " + b.str() + " closes to a link with " + std::to_string(comps) +
                    " components, not a knot");

    const auto& w = b.letters();
    const std::size_t len = w.size();
    // next[i]: index of the next letter on the same generator, 0 if none.
    // A loop runs from band i to band next[i].
    std::vector<std::size_t> next(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j)
            if (std::abs(w[j]) == std::abs(w[i])) {
                next[i] = j;
                break;
            }

    std::vector<std::size_t> loops;
    for (std::size_t i = 0; i < len; ++i)
        if (next[i]) loops.push_back(i);

    IntMatrix full(len);
    for (std::size_t i : loops) {
        const std::size_t hi = next[i];
        for (std::size_t j = i; j < len; ++j) {
            if (j == i) {
                // Both bands positive: -1; both negative: +1; mixed: 0.
                const int s = w[i] + w[hi];
                full(i, i) = s > 0 ? -1 : (s < 0 ? 1 : 0);
                continue;
            }
            if (!next[j]) continue;
            if (hi > next[j] || hi < j) continue;  // nested or disjoint spans
            if (hi == j) {
                // Consecutive loops on one generator share band j.
                if (w[j] > 0)
                    full(j, i) = 1;
                else
                    full(i, j) = -1;
                continue;
            }
            const int ci = std::abs(w[i]);
            const int cj = std::abs(w[j]);
            if (std::abs(ci - cj) != 1) continue;
            // Interleaved loops on adjacent generators.
            if (ci - cj == 1)
                full(j, i) = -1;
            else
                full(i, j) = 1;
        }
    }

    IntMatrix v(loops.size());
    for (std::size_t a = 0; a < loops.size(); ++a)
        for (std::size_t c = 0; c < loops.size(); ++c) v(a, c) = full(loops[a], loops[c]);
    return v;
}

}  // namespace knotsig
