#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "anst/cosets.hpp"
#include "anst/weyl.hpp"

namespace anst {

// Integer polynomial in q; coeffs[d] is the coefficient of q^d, trailing zeros trimmed.
struct KLPolynomial {
    std::vector<long long> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long coeff(int d) const;
    long long at_one() const;
    void trim();
    std::string str() const;

    bool operator==(const KLPolynomial&) const = default;
};

// Memo table for P_{x,w}. Entries are computed once and never change afterwards;
// concurrent callers may race to compute the same entry and keep the first result.
class KLCache {
public:
    // Cap from ANST_KL_CACHE_CAP, or a large default.
    static std::size_t default_cap();

    explicit KLCache(std::size_t cap = default_cap());

    KLPolynomial poly(const Permutation& x, const Permutation& w);
    // mu(z, v) != 0 for z < v, sorted by z.
    std::vector<std::pair<Permutation, long long>> mu_list(const Permutation& v);

    std::size_t size() const;
    std::size_t cap() const { return cap_; }
    void clear();
    // Overwrites one entry. Used to check that the test suites notice corruption.
    void poison(const Permutation& x, const Permutation& w, KLPolynomial p);

private:
    using MuList = std::vector<std::pair<Permutation, long long>>;

    std::shared_ptr<const MuList> mu_list_ptr(const Permutation& v);
    void insert(std::uint64_t key, const KLPolynomial& p);

    std::size_t cap_;
    mutable std::shared_mutex poly_mutex_;
    std::unordered_map<std::uint64_t, KLPolynomial> polys_;
    mutable std::shared_mutex mu_mutex_;
    std::unordered_map<std::uint64_t, std::shared_ptr<const MuList>> mus_;
};

KLCache& global_kl_cache();

// Largest rank accepted by the KL routines (pair keys must fit in 64 bits).
constexpr int kKLMaxRank = 12;

// Elements z < v with l(z) = l(v) - 1.
std::vector<Permutation> bruhat_lower_covers(const Permutation& v);
// All z <= v, sorted.
std::vector<Permutation> bruhat_lower_interval(const Permutation& v);

KLPolynomial kl_poly(const Permutation& x, const Permutation& w);

// m(w', w) = prod_sigma P_{w'_sigma, w_sigma}(1).
long long verma_mult(const MultiWeylElement& wprime, const MultiWeylElement& w);

// [M_K : L(w)] = sum over w' in W_{Delta_n^k ∪ K} of (-1)^{l(w')} m(w', w).
long long parabolic_verma_mult(const BlockSet& K, const MultiWeylElement& w);

// sum over u in W_X of (-1)^{l(u)} P_{u,w}(1), for one embedding.
long long signed_parabolic_sum(const SimpleRootSet& X, const Permutation& w);

} // namespace anst
