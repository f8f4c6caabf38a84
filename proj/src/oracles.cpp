#include "anst/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "anst/errors.hpp"

namespace anst::oracle {

bool subword_leq(const Permutation& x, const Permutation& w)
{
    require(x.rank() == w.rank(), "rank mismatch");
    std::vector<int> word = reduced_word(w);
    std::size_t l = word.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
        Permutation p = Permutation::identity(w.rank());
        for (std::size_t i = 0; i < l; ++i)
            if ((mask >> i) & 1u) p = p * Permutation::simple(w.rank(), word[i]);
        if (p == x) return true;
    }
    return false;
}

long long count_matrices(const std::vector<int>& rows, const std::vector<int>& cols)
{
    if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0))
        return 0;
    std::vector<int> left = cols;
    std::function<long long(std::size_t, std::size_t, int)> fill = [&](std::size_t i, std::size_t j,
                                                                       int remaining) -> long long {
        if (i == rows.size()) {
            for (int c : left)
                if (c != 0) return 0;
            return 1;
        }
        if (j + 1 == cols.size()) {
            if (remaining > left[j]) return 0;
            left[j] -= remaining;
            long long r = fill(i + 1, 0, i + 1 < rows.size() ? rows[i + 1] : 0);
            left[j] += remaining;
            return r;
        }
        long long total = 0;
        for (int v = 0; v <= std::min(remaining, left[j]); ++v) {
            left[j] -= v;
            total += fill(i, j + 1, remaining - v);
            left[j] += v;
        }
        return total;
    };
    if (rows.empty()) return 1;
    return fill(0, 0, rows[0]);
}

long long count_double_cosets(const SimpleRootSet& I, const SimpleRootSet& J)
{
    int n = I.rank();
    std::vector<Permutation> left = enumerate_parabolic(I), right = enumerate_parabolic(J);
    std::set<Permutation> seen;
    long long count = 0;
    for (const auto& w : enumerate_group(n)) {
        if (seen.count(w)) continue;
        ++count;
        for (const auto& a : left)
            for (const auto& b : right) seen.insert(a * w * b);
    }
    return count;
}

namespace {

using Poly = std::vector<long long>;

Poly add(Poly a, const Poly& b, long long scale = 1, int shift = 0)
{
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += scale * b[i];
    return a;
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

class RPolys {
public:
    const Poly& get(const Permutation& x, const Permutation& w)
    {
        auto key = std::make_pair(x, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Poly result;
        if (w.is_identity()) {
            if (x.is_identity()) result = {1};
        } else {
            int s = 1;
            while (!w.has_left_descent(s)) ++s;
            Permutation sw = w.left_mul_simple(s), sx = x.left_mul_simple(s);
            if (x.has_left_descent(s)) {
                result = get(sx, sw);
            } else {
                Poly a = get(x, sw), b = get(sx, sw);
                result = add(add(add({}, a, 1, 1), a, -1), b, 1, 1);
            }
        }
        while (!result.empty() && result.back() == 0) result.pop_back();
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    std::map<std::pair<Permutation, Permutation>, Poly> memo_;
};

} // namespace

std::map<Permutation, KLPolynomial> kl_column(const Permutation& w)
{
    std::vector<Permutation> below;
    for (const auto& x : enumerate_group(w.rank()))
        if (bruhat_leq_rank_matrix(x, w)) below.push_back(x);
    std::stable_sort(below.begin(), below.end(),
                     [](const auto& a, const auto& b) { return length(a) > length(b); });

    RPolys R;
    std::map<Permutation, KLPolynomial> P;
    int lw = length(w);
    for (const auto& x : below) {
        if (x == w) {
            P[x] = KLPolynomial{{1}};
            continue;
        }
        Poly F;
        for (const auto& [y, py] : P)
            if (bruhat_leq_rank_matrix(x, y)) F = add(F, mul(R.get(x, y), py.coeffs));
        int d = lw - length(x);
        KLPolynomial p;
        for (int j = 0; 2 * j < d && j < static_cast<int>(F.size()); ++j) {
            p.coeffs.resize(j + 1, 0);
            p.coeffs[j] = -F[j];
        }
        p.trim();
        P[x] = p;
    }
    return P;
}

} // namespace anst::oracle
