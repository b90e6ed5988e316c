#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace knotsig {

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t size() const { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator-() const;
    /// Block diagonal sum [[A, 0], [0, B]].
    friend IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

/// A braid word: letter i > 0 is the generator sigma_i, i < 0 its inverse.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(std::vector<int> letters);
    BraidWord(std::initializer_list<int> letters) : BraidWord(std::vector<int>(letters)) {}

    /// "[-1,3,3,3,2,1,1,-3,2]"
    static BraidWord parse(std::string_view text);
    std::string str() const;

    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    int strands() const { return strands_; }

    /// Number of components of the closure (cycles of the permutation).
    int components() const;
    bool is_knot() const { return components() == 1; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    std::vector<int> letters_;
    int strands_ = 0;
};

/// Negate the letter at pos; throws std::out_of_range.
BraidWord flip_crossing(const BraidWord& b, std::size_t pos);
/// Negate every letter.
BraidWord mirror(const BraidWord& b);
/// Insert (gen, -gen) before pos (pos == length appends).
BraidWord insert_trivial_pair(const BraidWord& b, std::size_t pos, int gen);
/// Markov stabilization: add a strand and append +-strands-th generator.
BraidWord stabilize(const BraidWord& b, bool positive);
/// Juxtaposition of two braids on disjoint strand ranges, closing to the
/// connected sum (b1 on strands 1..n1, b2 shifted onto n1..n1+n2-1).
BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2);

/// Seifert matrix of the closure from the canonical surface: one disk per
/// strand, one band per letter, one homology loop per pair of consecutive
/// letters on the same generator. Throws knotsig::Error for links.
IntMatrix seifert_matrix(const BraidWord& b);

}  // namespace knotsig
