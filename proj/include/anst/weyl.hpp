#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace anst {

// A subset of the simple roots {1,...,n-1} of S_n, root i being s_i.
class SimpleRootSet {
public:
    SimpleRootSet() = default;
    explicit SimpleRootSet(int n, std::uint32_t mask = 0);
    SimpleRootSet(int n, const std::vector<int>& members);

    static SimpleRootSet full(int n);

    int rank() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> i) & 1u); }
    void insert(int i);
    void erase(int i);
    int size() const;
    bool empty() const { return mask_ == 0; }
    std::vector<int> members() const;

    SimpleRootSet complement() const;
    SimpleRootSet operator|(const SimpleRootSet& o) const;
    SimpleRootSet operator&(const SimpleRootSet& o) const;
    bool is_subset_of(const SimpleRootSet& o) const;

    // "1,3" or "-" for the empty set.
    std::string str() const;

    bool operator==(const SimpleRootSet&) const = default;

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

class Permutation {
public:
    static constexpr int kMaxRank = 16;

    Permutation() = default;
    static Permutation identity(int n);
    static Permutation from_one_line(const std::vector<int>& word);
    static Permutation simple(int n, int i);
    // s_{a_1} * ... * s_{a_l} under function composition.
    static Permutation from_word(int n, const std::vector<int>& letters);

    int rank() const { return n_; }
    // 1-based: the value w(i).
    int operator()(int i) const { return w_[i - 1]; }
    std::vector<int> one_line() const;

    // (a * b)(i) = a(b(i)).
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    // s_i * w swaps the values i and i+1.
    Permutation left_mul_simple(int i) const;
    // w * s_i swaps the positions i and i+1.
    Permutation right_mul_simple(int i) const;

    bool has_left_descent(int i) const;
    bool has_right_descent(int i) const { return w_[i - 1] > w_[i]; }
    bool is_identity() const;

    // Lexicographic index among all n! permutations.
    std::uint64_t index() const;

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxRank> w_{};
};

int length(const Permutation& w);
// Letters a_1..a_l with w = s_{a_1} * ... * s_{a_l}.
std::vector<int> reduced_word(const Permutation& w);

SimpleRootSet descents_left(const Permutation& w);
SimpleRootSet ascents_left(const Permutation& w);
SimpleRootSet descents_right(const Permutation& w);
SimpleRootSet support(const Permutation& w);

// Subword recursion along a fixed reduced word of w.
bool bruhat_leq(const Permutation& x, const Permutation& w);
// Rank-matrix criterion, kept as an independent cross-check.
bool bruhat_leq_rank_matrix(const Permutation& x, const Permutation& w);

Permutation longest_element(const SimpleRootSet& I);

std::vector<Permutation> enumerate_group(int n);
std::vector<Permutation> enumerate_parabolic(const SimpleRootSet& I);

// Block sizes of the composition of n cut at the roots outside I.
std::vector<int> block_sizes(const SimpleRootSet& I);

// Element of S_n^{d_L}, one permutation per embedding.
struct MultiWeylElement {
    std::vector<Permutation> comps;

    MultiWeylElement() = default;
    explicit MultiWeylElement(std::vector<Permutation> c) : comps(std::move(c)) {}
    static MultiWeylElement identity(int n, int d);

    int rank() const { return comps.empty() ? 0 : comps.front().rank(); }
    int embeddings() const { return static_cast<int>(comps.size()); }
    std::string str() const;

    auto operator<=>(const MultiWeylElement&) const = default;
    bool operator==(const MultiWeylElement&) const = default;
};

int length(const MultiWeylElement& w);

struct AscentSets {
    SimpleRootSet union_set;
    SimpleRootSet intersection;
};

// Per component {i : l(s_i w_sigma) > l(w_sigma)}, combined both ways.
AscentSets ascent_set_I(const MultiWeylElement& w);

// Enumerates S_n^d in (length, one-line lex) order.
std::vector<MultiWeylElement> enumerate_multi(int n, int d);
std::vector<MultiWeylElement> enumerate_multi_parabolic(const SimpleRootSet& I, int d);

} // namespace anst
