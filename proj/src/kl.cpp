#include "anst/kl.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>

#include "anst/config.hpp"
#include "anst/errors.hpp"

namespace anst {

long long KLPolynomial::coeff(int d) const
{
    return d >= 0 && d < static_cast<int>(coeffs.size()) ? coeffs[d] : 0;
}

long long KLPolynomial::at_one() const
{
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

void KLPolynomial::trim()
{
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string KLPolynomial::str() const
{
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        long long c = coeffs[d];
        if (c == 0) continue;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        if (d == 0 || a != 1) s += std::to_string(a);
        if (d >= 1) s += "q";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

namespace {

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t pair_key(const Permutation& x, const Permutation& w)
{
    int n = w.rank();
    return ((x.index() * factorial(n) + w.index()) << 4) | static_cast<std::uint64_t>(n);
}

std::uint64_t single_key(const Permutation& v)
{
    return (v.index() << 4) | static_cast<std::uint64_t>(v.rank());
}

void add_shifted(std::vector<long long>& acc, const KLPolynomial& p, int shift, long long scale)
{
    if (p.is_zero()) return;
    if (acc.size() < p.coeffs.size() + shift) acc.resize(p.coeffs.size() + shift, 0);
    for (std::size_t d = 0; d < p.coeffs.size(); ++d) acc[d + shift] += scale * p.coeffs[d];
}

} // namespace

std::size_t KLCache::default_cap()
{
    if (const char* env = std::getenv("ANST_KL_CACHE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 50'000'000;
}

KLCache::KLCache(std::size_t cap) : cap_(cap) {}

std::size_t KLCache::size() const
{
    std::shared_lock lock(poly_mutex_);
    return polys_.size();
}

void KLCache::clear()
{
    std::unique_lock a(poly_mutex_);
    std::unique_lock b(mu_mutex_);
    polys_.clear();
    mus_.clear();
}

void KLCache::poison(const Permutation& x, const Permutation& w, KLPolynomial p)
{
    std::unique_lock lock(poly_mutex_);
    polys_[pair_key(x, w)] = std::move(p);
}

void KLCache::insert(std::uint64_t key, const KLPolynomial& p)
{
    std::unique_lock lock(poly_mutex_);
    if (polys_.size() >= cap_ && !polys_.count(key))
        throw ResourceError("KL cache cap of " + std::to_string(cap_) + " entries reached");
    polys_.emplace(key, p);
}

KLPolynomial KLCache::poly(const Permutation& x, const Permutation& w)
{
    require(x.rank() == w.rank(), "rank mismatch");
    if (w.rank() > kKLMaxRank)
        throw ResourceError("KL rank " + std::to_string(w.rank()) + " exceeds " +
                            std::to_string(kKLMaxRank));
    check_enumeration_bound(w.rank());
    if (x == w) return KLPolynomial{{1}};
    if (!bruhat_leq(x, w)) return KLPolynomial{};

    std::uint64_t key = pair_key(x, w);
    {
        std::shared_lock lock(poly_mutex_);
        auto it = polys_.find(key);
        if (it != polys_.end()) return it->second;
    }

    int s = 1;
    while (!w.has_left_descent(s)) ++s;
    Permutation v = w.left_mul_simple(s);
    bool c = x.has_left_descent(s);
    Permutation sx = x.left_mul_simple(s);

    std::vector<long long> acc;
    add_shifted(acc, poly(sx, v), c ? 0 : 1, 1);
    add_shifted(acc, poly(x, v), c ? 1 : 0, 1);
    int lw = length(w);
    auto mus = mu_list_ptr(v);
    for (const auto& [z, mu] : *mus) {
        if (!z.has_left_descent(s)) continue;
        KLPolynomial pxz = poly(x, z);
        if (pxz.is_zero()) continue;
        add_shifted(acc, pxz, (lw - length(z)) / 2, -mu);
    }
    KLPolynomial result{std::move(acc)};
    result.trim();
    insert(key, result);
    return result;
}

std::shared_ptr<const KLCache::MuList> KLCache::mu_list_ptr(const Permutation& v)
{
    std::uint64_t key = single_key(v);
    {
        std::shared_lock lock(mu_mutex_);
        auto it = mus_.find(key);
        if (it != mus_.end()) return it->second;
    }
    auto list = std::make_shared<MuList>();
    int lv = length(v);
    for (const auto& z : bruhat_lower_interval(v)) {
        int gap = lv - length(z);
        if (gap % 2 == 0) continue;
        long long mu = poly(z, v).coeff((gap - 1) / 2);
        if (mu != 0) list->emplace_back(z, mu);
    }
    std::unique_lock lock(mu_mutex_);
    auto [it, inserted] = mus_.emplace(key, std::move(list));
    return it->second;
}

std::vector<std::pair<Permutation, long long>> KLCache::mu_list(const Permutation& v)
{
    return *mu_list_ptr(v);
}

KLCache& global_kl_cache()
{
    static KLCache cache;
    return cache;
}

std::vector<Permutation> bruhat_lower_covers(const Permutation& v)
{
    std::vector<Permutation> out;
    int n = v.rank();
    std::vector<int> word = v.one_line();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (word[i] < word[j]) continue;
            bool cover = true;
            for (int m = i + 1; m < j && cover; ++m)
                if (word[m] > word[j] && word[m] < word[i]) cover = false;
            if (!cover) continue;
            std::swap(word[i], word[j]);
            out.push_back(Permutation::from_one_line(word));
            std::swap(word[i], word[j]);
        }
    return out;
}

std::vector<Permutation> bruhat_lower_interval(const Permutation& v)
{
    std::set<Permutation> seen{v};
    std::vector<Permutation> frontier{v};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& z : bruhat_lower_covers(p))
                if (seen.insert(z).second) next.push_back(z);
        frontier = std::move(next);
    }
    return std::vector<Permutation>(seen.begin(), seen.end());
}

KLPolynomial kl_poly(const Permutation& x, const Permutation& w)
{
    return global_kl_cache().poly(x, w);
}

long long verma_mult(const MultiWeylElement& wprime, const MultiWeylElement& w)
{
    require(wprime.embeddings() == w.embeddings() && wprime.rank() == w.rank(),
            "shape mismatch");
    long long m = 1;
    for (int s = 0; s < w.embeddings() && m != 0; ++s)
        m *= kl_poly(wprime.comps[s], w.comps[s]).at_one();
    return m;
}

long long signed_parabolic_sum(const SimpleRootSet& X, const Permutation& w)
{
    require(X.rank() == w.rank(), "rank mismatch");
    long long total = 0;
    for (const auto& u : enumerate_parabolic(X)) {
        long long p = kl_poly(u, w).at_one();
        total += (length(u) % 2 ? -p : p);
    }
    return total;
}

long long parabolic_verma_mult(const BlockSet& K, const MultiWeylElement& w)
{
    require(w.rank() == K.n(), "rank mismatch between block set and Weyl element");
    // The sum over W_X^{d_L} factors over the embeddings.
    SimpleRootSet X = levi_roots(K);
    long long m = 1;
    for (const auto& c : w.comps) {
        m *= signed_parabolic_sum(X, c);
        if (m == 0) break;
    }
    return m;
}

} // namespace anst
