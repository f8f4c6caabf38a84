#include "anst/cosets.hpp"

#include <bit>

#include "anst/config.hpp"
#include "anst/errors.hpp"

namespace anst {

BlockSet::BlockSet(int r, int k, std::uint32_t mask) : r_(r), k_(k), mask_(mask)
{
    require(r >= 1 && k >= 1, "r and k must be positive");
    require(r * k <= 32 && k <= 31, "rank out of range");
    require((mask & ~full(r, k).mask_) == 0, "block index outside 1..k-1");
}

BlockSet::BlockSet(int r, int k, const std::vector<int>& members) : BlockSet(r, k)
{
    for (int i : members) {
        require(i >= 1 && i < k, "block index " + std::to_string(i) + " outside 1.." +
                                     std::to_string(k - 1));
        mask_ |= 1u << i;
    }
}

BlockSet BlockSet::full(int r, int k)
{
    BlockSet b;
    b.r_ = r;
    b.k_ = k;
    b.mask_ = k >= 2 ? (((1u << (k - 1)) - 1u) << 1) : 0u;
    return b;
}

BlockSet BlockSet::all_but(int r, int k, int j)
{
    require(j >= 1 && j < k, "block index outside 1..k-1");
    BlockSet b = full(r, k);
    b.mask_ &= ~(1u << j);
    return b;
}

int BlockSet::size() const { return std::popcount(mask_); }

std::vector<int> BlockSet::members() const
{
    std::vector<int> out;
    for (int i = 1; i < k_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

BlockSet BlockSet::complement() const { return BlockSet(r_, k_, full(r_, k_).mask_ & ~mask_); }

BlockSet BlockSet::operator|(const BlockSet& o) const
{
    require(r_ == o.r_ && k_ == o.k_, "block set shape mismatch");
    return BlockSet(r_, k_, mask_ | o.mask_);
}

BlockSet BlockSet::operator&(const BlockSet& o) const
{
    require(r_ == o.r_ && k_ == o.k_, "block set shape mismatch");
    return BlockSet(r_, k_, mask_ & o.mask_);
}

BlockSet BlockSet::minus(const BlockSet& o) const
{
    require(r_ == o.r_ && k_ == o.k_, "block set shape mismatch");
    return BlockSet(r_, k_, mask_ & ~o.mask_);
}

bool BlockSet::is_subset_of(const BlockSet& o) const { return (mask_ & ~o.mask_) == 0; }

SimpleRootSet BlockSet::roots() const
{
    SimpleRootSet s(n());
    for (int i : members()) s.insert(i * r_);
    return s;
}

std::string BlockSet::str() const
{
    if (mask_ == 0) return "-";
    std::string s;
    for (int i : members()) {
        if (!s.empty()) s += ',';
        s += std::to_string(i);
    }
    return s;
}

SimpleRootSet delta_nk(int r, int k)
{
    SimpleRootSet s(r * k);
    for (int a = 1; a < r * k; ++a)
        if (a % r != 0) s.insert(a);
    return s;
}

SimpleRootSet levi_roots(const BlockSet& I) { return delta_nk(I.r(), I.k()) | I.roots(); }

BlockSet blocks_of(const SimpleRootSet& X, int r, int k)
{
    require(X.rank() == r * k, "rank mismatch");
    std::vector<int> m;
    for (int i = 1; i < k; ++i)
        if (X.contains(i * r)) m.push_back(i);
    return BlockSet(r, k, m);
}

std::vector<BlockSet> all_block_sets(int r, int k)
{
    std::vector<BlockSet> out;
    std::uint32_t top = k >= 2 ? (1u << (k - 1)) : 1u;
    for (std::uint32_t m = 0; m < top; ++m) out.emplace_back(r, k, m << 1);
    return out;
}

std::vector<int> partition_of(const BlockSet& I)
{
    std::vector<int> parts;
    int cur = 0;
    for (int i = 1; i <= I.k(); ++i) {
        ++cur;
        if (i == I.k() || !I.contains(i)) {
            parts.push_back(cur);
            cur = 0;
        }
    }
    return parts;
}

bool is_min_double_coset_rep(const Permutation& w, const SimpleRootSet& I, const SimpleRootSet& J)
{
    require(w.rank() == I.rank() && w.rank() == J.rank(), "rank mismatch");
    for (int j : J.members())
        if (w.has_right_descent(j)) return false;
    for (int i : I.members())
        if (w.has_left_descent(i)) return false;
    return true;
}

std::vector<Permutation> min_double_coset_reps(int n, const SimpleRootSet& I, const SimpleRootSet& J)
{
    require(I.rank() == n && J.rank() == n, "rank mismatch");
    std::vector<Permutation> out;
    for (const auto& w : enumerate_group(n))
        if (is_min_double_coset_rep(w, I, J)) out.push_back(w);
    return out;
}

namespace {

// Block number (0-based) of each position 1..n.
std::vector<int> block_of_position(const SimpleRootSet& X)
{
    std::vector<int> b(X.rank() + 1, 0);
    int cur = 0;
    for (int a = 1; a <= X.rank(); ++a) {
        b[a] = cur;
        if (!X.contains(a)) ++cur;
    }
    return b;
}

} // namespace

std::vector<std::vector<int>> coset_matrix(const Permutation& w, const SimpleRootSet& I,
                                           const SimpleRootSet& J)
{
    require(is_min_double_coset_rep(w, I, J), "w is not a minimal double coset representative");
    std::vector<int> bi = block_of_position(I), bj = block_of_position(J);
    std::size_t rows = block_sizes(I).size(), cols = block_sizes(J).size();
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (int a = 1; a <= w.rank(); ++a) ++m[bi[w(a)]][bj[a]];
    return m;
}

Permutation block_embed(const Permutation& w_small, int r)
{
    require(r >= 1, "r must be positive");
    int k = w_small.rank();
    std::vector<int> word(static_cast<std::size_t>(r * k));
    for (int i = 0; i < k; ++i)
        for (int l = 1; l <= r; ++l) word[i * r + l - 1] = (w_small(i + 1) - 1) * r + l;
    return Permutation::from_one_line(word);
}

bool is_in_W_IJ(const Permutation& w, const BlockSet& I, const BlockSet& J)
{
    require(I.r() == J.r() && I.k() == J.k(), "block set shape mismatch");
    require(w.rank() == I.n(), "rank mismatch");
    if (!is_min_double_coset_rep(w, levi_roots(I), levi_roots(J))) return false;
    // w sends the root a to e_{w(a)} - e_{w(a+1)}; it must again be in Delta_n^k.
    int r = I.r();
    for (int a = 1; a < w.rank(); ++a) {
        if (a % r == 0) continue;
        if (w(a + 1) != w(a) + 1 || w(a) % r == 0) return false;
    }
    return true;
}

std::vector<long long> modulus_exponents(const BlockSet& I)
{
    std::vector<int> parts = partition_of(I);
    std::vector<long long> a;
    long long before = 0, total = 0;
    for (int p : parts) total += p;
    for (int p : parts) {
        long long after = total - before - p;
        a.push_back(static_cast<long long>(I.r()) * (before - after));
        before += p;
    }
    return a;
}

} // namespace anst
