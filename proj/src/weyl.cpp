#include "anst/weyl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "anst/config.hpp"
#include "anst/errors.hpp"

namespace anst {

namespace {

int g_enumeration_bound = kDefaultEnumerationBound;

} // namespace

int enumeration_bound() { return g_enumeration_bound; }

void set_enumeration_bound(int n)
{
    require(n >= 1 && n <= Permutation::kMaxRank, "enumeration bound out of range");
    g_enumeration_bound = n;
}

void check_enumeration_bound(int n)
{
    if (n > g_enumeration_bound)
        throw ResourceError("rank " + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(g_enumeration_bound));
}

// ---- SimpleRootSet ----

SimpleRootSet::SimpleRootSet(int n, std::uint32_t mask) : n_(n), mask_(mask)
{
    require(n >= 1 && n <= 32, "rank out of range");
    std::uint32_t allowed = n >= 2 ? (((1u << (n - 1)) - 1u) << 1) : 0u;
    require((mask & ~allowed) == 0, "simple root outside 1..n-1");
}

SimpleRootSet::SimpleRootSet(int n, const std::vector<int>& members) : SimpleRootSet(n)
{
    for (int i : members) insert(i);
}

SimpleRootSet SimpleRootSet::full(int n)
{
    return SimpleRootSet(n, n >= 2 ? (((1u << (n - 1)) - 1u) << 1) : 0u);
}

void SimpleRootSet::insert(int i)
{
    require(i >= 1 && i < n_, "simple root " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n_ - 1));
    mask_ |= 1u << i;
}

void SimpleRootSet::erase(int i)
{
    if (i >= 1 && i < n_) mask_ &= ~(1u << i);
}

int SimpleRootSet::size() const { return std::popcount(mask_); }

std::vector<int> SimpleRootSet::members() const
{
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

SimpleRootSet SimpleRootSet::complement() const
{
    return SimpleRootSet(n_, full(n_).mask_ & ~mask_);
}

SimpleRootSet SimpleRootSet::operator|(const SimpleRootSet& o) const
{
    require(n_ == o.n_, "rank mismatch");
    return SimpleRootSet(n_, mask_ | o.mask_);
}

SimpleRootSet SimpleRootSet::operator&(const SimpleRootSet& o) const
{
    require(n_ == o.n_, "rank mismatch");
    return SimpleRootSet(n_, mask_ & o.mask_);
}

bool SimpleRootSet::is_subset_of(const SimpleRootSet& o) const
{
    return (mask_ & ~o.mask_) == 0;
}

std::string SimpleRootSet::str() const
{
    if (mask_ == 0) return "-";
    std::string s;
    for (int i : members()) {
        if (!s.empty()) s += ',';
        s += std::to_string(i);
    }
    return s;
}

// ---- Permutation ----

Permutation Permutation::identity(int n)
{
    require(n >= 1 && n <= kMaxRank, "rank out of range");
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.w_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& word)
{
    int n = static_cast<int>(word.size());
    require(n >= 1 && n <= kMaxRank, "rank out of range");
    std::vector<bool> seen(n + 1, false);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
        int v = word[i];
        require(v >= 1 && v <= n && !seen[v], "not a permutation of 1..n");
        seen[v] = true;
        p.w_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Permutation Permutation::simple(int n, int i)
{
    require(i >= 1 && i < n, "simple reflection index out of range");
    Permutation p = identity(n);
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& letters)
{
    Permutation p = identity(n);
    for (int a : letters) p = p * simple(n, a);
    return p;
}

std::vector<int> Permutation::one_line() const
{
    return std::vector<int>(w_.begin(), w_.begin() + n_);
}

Permutation Permutation::operator*(const Permutation& o) const
{
    require(n_ == o.n_, "rank mismatch");
    Permutation p;
    p.n_ = n_;
    for (int i = 0; i < n_; ++i) p.w_[i] = w_[o.w_[i] - 1];
    return p;
}

Permutation Permutation::inverse() const
{
    Permutation p;
    p.n_ = n_;
    for (int i = 0; i < n_; ++i) p.w_[w_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return p;
}

Permutation Permutation::left_mul_simple(int i) const
{
    Permutation p = *this;
    for (int a = 0; a < n_; ++a) {
        if (p.w_[a] == i)
            p.w_[a] = static_cast<std::uint8_t>(i + 1);
        else if (p.w_[a] == i + 1)
            p.w_[a] = static_cast<std::uint8_t>(i);
    }
    return p;
}

Permutation Permutation::right_mul_simple(int i) const
{
    Permutation p = *this;
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

bool Permutation::has_left_descent(int i) const
{
    for (int a = 0; a < n_; ++a) {
        if (w_[a] == i) return false;
        if (w_[a] == i + 1) return true;
    }
    return false;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < n_; ++i)
        if (w_[i] != i + 1) return false;
    return true;
}

std::uint64_t Permutation::index() const
{
    std::uint64_t idx = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < n_; ++i) {
        int v = w_[i];
        int smaller_unused = std::popcount(~used & ((1u << v) - 2u));
        idx = idx * static_cast<std::uint64_t>(n_ - i) + static_cast<std::uint64_t>(smaller_unused);
        used |= 1u << v;
    }
    return idx;
}

std::string Permutation::str() const
{
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += std::to_string(w_[i]);
    }
    return s + "]";
}

int length(const Permutation& w)
{
    int n = w.rank(), inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

std::vector<int> reduced_word(const Permutation& w)
{
    std::vector<int> letters;
    Permutation cur = w;
    int n = w.rank();
    while (!cur.is_identity()) {
        for (int i = 1; i < n; ++i) {
            if (cur.has_left_descent(i)) {
                letters.push_back(i);
                cur = cur.left_mul_simple(i);
                break;
            }
        }
    }
    return letters;
}

SimpleRootSet descents_left(const Permutation& w)
{
    SimpleRootSet d(w.rank());
    for (int i = 1; i < w.rank(); ++i)
        if (w.has_left_descent(i)) d.insert(i);
    return d;
}

SimpleRootSet ascents_left(const Permutation& w) { return descents_left(w).complement(); }

SimpleRootSet descents_right(const Permutation& w)
{
    SimpleRootSet d(w.rank());
    for (int i = 1; i < w.rank(); ++i)
        if (w.has_right_descent(i)) d.insert(i);
    return d;
}

SimpleRootSet support(const Permutation& w)
{
    // s_i lies in the support iff w does not preserve {1..i}.
    SimpleRootSet s(w.rank());
    int n = w.rank(), running_max = 0;
    for (int i = 1; i < n; ++i) {
        running_max = std::max(running_max, w(i));
        if (running_max > i) s.insert(i);
    }
    return s;
}

bool bruhat_leq(const Permutation& x, const Permutation& w)
{
    require(x.rank() == w.rank(), "rank mismatch");
    Permutation cx = x;
    for (int s : reduced_word(w)) {
        if (cx.has_left_descent(s)) cx = cx.left_mul_simple(s);
    }
    return cx.is_identity();
}

bool bruhat_leq_rank_matrix(const Permutation& x, const Permutation& w)
{
    require(x.rank() == w.rank(), "rank mismatch");
    int n = x.rank();
    for (int j = 1; j <= n; ++j) {
        int cx = 0, cw = 0;
        for (int i = 1; i <= n; ++i) {
            if (x(i) >= j) ++cx;
            if (w(i) >= j) ++cw;
            if (cx > cw) return false;
        }
    }
    return true;
}

std::vector<int> block_sizes(const SimpleRootSet& I)
{
    std::vector<int> sizes;
    int cur = 0;
    for (int i = 1; i <= I.rank(); ++i) {
        ++cur;
        if (i == I.rank() || !I.contains(i)) {
            sizes.push_back(cur);
            cur = 0;
        }
    }
    return sizes;
}

Permutation longest_element(const SimpleRootSet& I)
{
    std::vector<int> word(I.rank());
    int start = 1;
    for (int sz : block_sizes(I)) {
        for (int a = 0; a < sz; ++a) word[start - 1 + a] = start + sz - 1 - a;
        start += sz;
    }
    return Permutation::from_one_line(word);
}

std::vector<Permutation> enumerate_group(int n)
{
    require(n >= 1, "rank must be positive");
    check_enumeration_bound(n);
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Permutation> enumerate_parabolic(const SimpleRootSet& I)
{
    int n = I.rank();
    check_enumeration_bound(n);
    std::vector<int> sizes = block_sizes(I);
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    // Odometer over the blocks, the last block varying fastest.
    std::vector<int> starts;
    for (int s = 0, acc = 0; s < static_cast<int>(sizes.size()); ++s) {
        starts.push_back(acc);
        acc += sizes[s];
    }
    while (true) {
        out.push_back(Permutation::from_one_line(word));
        int b = static_cast<int>(sizes.size()) - 1;
        for (; b >= 0; --b) {
            auto first = word.begin() + starts[b];
            if (std::next_permutation(first, first + sizes[b])) break;
        }
        if (b < 0) break;
    }
    return out;
}

// ---- MultiWeylElement ----

MultiWeylElement MultiWeylElement::identity(int n, int d)
{
    require(d >= 1, "need at least one embedding");
    return MultiWeylElement(std::vector<Permutation>(d, Permutation::identity(n)));
}

std::string MultiWeylElement::str() const
{
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ';';
        s += comps[i].str();
    }
    return s;
}

int length(const MultiWeylElement& w)
{
    int l = 0;
    for (const auto& c : w.comps) l += length(c);
    return l;
}

AscentSets ascent_set_I(const MultiWeylElement& w)
{
    require(!w.comps.empty(), "empty Weyl element");
    int n = w.rank();
    AscentSets out{SimpleRootSet(n), SimpleRootSet::full(n)};
    for (const auto& c : w.comps) {
        require(c.rank() == n, "component rank mismatch");
        SimpleRootSet a = ascents_left(c);
        out.union_set = out.union_set | a;
        out.intersection = out.intersection & a;
    }
    return out;
}

namespace {

std::vector<MultiWeylElement> product(const std::vector<Permutation>& base, int d)
{
    require(d >= 1, "need at least one embedding");
    std::vector<MultiWeylElement> out;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        std::vector<Permutation> c;
        c.reserve(d);
        for (int s = 0; s < d; ++s) c.push_back(base[idx[s]]);
        out.emplace_back(std::move(c));
        int s = d - 1;
        for (; s >= 0; --s) {
            if (++idx[s] < base.size()) break;
            idx[s] = 0;
        }
        if (s < 0) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int la = length(a), lb = length(b);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

} // namespace

std::vector<MultiWeylElement> enumerate_multi(int n, int d)
{
    return product(enumerate_group(n), d);
}

std::vector<MultiWeylElement> enumerate_multi_parabolic(const SimpleRootSet& I, int d)
{
    return product(enumerate_parabolic(I), d);
}

} // namespace anst
