#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anst/weyl.hpp"

namespace anst {

// Subset of Delta_n(k) = {r, 2r, ..., (k-1)r}, stored by block index i (root ir).
class BlockSet {
public:
    BlockSet() = default;
    BlockSet(int r, int k, std::uint32_t mask = 0);
    BlockSet(int r, int k, const std::vector<int>& members);

    static BlockSet full(int r, int k);
    // Delta_{k,j} = Delta_n(k) minus {jr}.
    static BlockSet all_but(int r, int k, int j);

    int r() const { return r_; }
    int k() const { return k_; }
    int n() const { return r_ * k_; }
    std::uint32_t mask() const { return mask_; }

    bool contains(int i) const { return i >= 1 && i < k_ && ((mask_ >> i) & 1u); }
    int size() const;
    bool empty() const { return mask_ == 0; }
    std::vector<int> members() const;

    BlockSet complement() const;
    BlockSet operator|(const BlockSet& o) const;
    BlockSet operator&(const BlockSet& o) const;
    BlockSet minus(const BlockSet& o) const;
    bool is_subset_of(const BlockSet& o) const;

    // The roots {ir : i in members} inside Delta_n.
    SimpleRootSet roots() const;
    std::string str() const;

    bool operator==(const BlockSet&) const = default;

private:
    int r_ = 1;
    int k_ = 1;
    std::uint32_t mask_ = 0;
};

// Delta_n^k: simple roots of GL_n not divisible by r.
SimpleRootSet delta_nk(int r, int k);
// Delta_n^k together with the roots of I: the simple roots of L_I^<r>.
SimpleRootSet levi_roots(const BlockSet& I);
// The blocks {i : ir in X}.
BlockSet blocks_of(const SimpleRootSet& X, int r, int k);
// Every subset of {1..k-1}, in increasing mask order.
std::vector<BlockSet> all_block_sets(int r, int k);

// Block sizes (k_1,...,k_l) of L_I^<r>, in units of r.
std::vector<int> partition_of(const BlockSet& I);

bool is_min_double_coset_rep(const Permutation& w, const SimpleRootSet& I, const SimpleRootSet& J);
std::vector<Permutation> min_double_coset_reps(int n, const SimpleRootSet& I, const SimpleRootSet& J);

// b_ij = |I_i ∩ w(J_j)| for the position blocks I_i, J_j.
std::vector<std::vector<int>> coset_matrix(const Permutation& w, const SimpleRootSet& I,
                                           const SimpleRootSet& J);

// w°(ir + l) = w(i)r + l.
Permutation block_embed(const Permutation& w_small, int r);

bool is_in_W_IJ(const Permutation& w, const BlockSet& I, const BlockSet& J);

// a_{i,I} = r(sum_{j<i} k_j - sum_{j>i} k_j).
std::vector<long long> modulus_exponents(const BlockSet& I);

} // namespace anst
