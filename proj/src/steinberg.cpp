#include "anst/steinberg.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "anst/errors.hpp"
#include "anst/kl.hpp"
#include "anst/weights.hpp"

namespace anst {

int tits_sign(const BlockSet& Kprime, const BlockSet& K)
{
    if (!K.is_subset_of(Kprime) || Kprime.size() != K.size() + 1) return 0;
    int added = Kprime.minus(K).members().front();
    int i = 0;
    for (int m : Kprime.members()) {
        ++i;
        if (m == added) break;
    }
    return i % 2 ? -1 : 1;
}

FormalComplex::FormalComplex(const BlockSet& I) : base_(I)
{
    BlockSet rest = I.complement();
    terms_.resize(static_cast<std::size_t>(rest.size()) + 1);
    for (const auto& K : all_block_sets(I.r(), I.k()))
        if (I.is_subset_of(K)) terms_[K.minus(I).size()].add(K.mask(), 1);
}

FormalComplex::Chain FormalComplex::differential(const Chain& c) const
{
    Chain out;
    for (const auto& [mask, coeff] : c.terms()) {
        BlockSet Kp(base_.r(), base_.k(), mask);
        for (int x : Kp.minus(base_).members()) {
            BlockSet K(base_.r(), base_.k(), mask & ~(1u << x));
            out.add(K.mask(), coeff * tits_sign(Kp, K));
        }
    }
    return out;
}

bool tits_differential_squares_to_zero(int r, int k)
{
    for (const auto& I : all_block_sets(r, k)) {
        FormalComplex cx(I);
        for (int j = 0; j <= cx.top_degree(); ++j)
            for (const auto& [mask, c] : cx.term(j).terms()) {
                FormalComplex::Chain e;
                e.add(mask, 1);
                if (!cx.differential(cx.differential(e)).is_zero()) return false;
            }
    }
    return true;
}

namespace {

SimpleRootSet dominance_of(const MultiWeylElement& w)
{
    return dominance_set(w, IntegralWeight::zero(w.rank(), w.embeddings()));
}

bool label_ok(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S, std::string* why)
{
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (J.r() != S.r() || J.k() != S.k()) return fail("J and S have different shapes");
    if (w.embeddings() < 1 || w.rank() != J.n()) return fail("Weyl element rank does not match r*k");
    if (!S.is_subset_of(J)) return fail("S is not contained in J");
    SimpleRootSet dom = dominance_of(w);
    if (!delta_nk(J.r(), J.k()).is_subset_of(dom))
        return fail("w.0 is not dominant for Delta_n^k");
    if (!J.roots().is_subset_of(dom)) return fail("J is not contained in the blocks of I(w)");
    return true;
}

// Sum over w' in W_X^{d} of (-1)^{l(w')} m(w', w), bucketed by the support blocks of w'.
std::vector<long long> signed_sum_by_support(const MultiWeylElement& w, const BlockSet& J)
{
    int r = J.r(), k = J.k();
    std::size_t buckets = std::size_t{1} << k;
    SimpleRootSet X = levi_roots(J);
    std::vector<Permutation> group = enumerate_parabolic(X);
    std::vector<long long> combined(buckets, 0);
    combined[0] = 1;
    for (const auto& c : w.comps) {
        std::vector<long long> local(buckets, 0);
        for (const auto& u : group) {
            long long p = kl_poly(u, c).at_one();
            if (p == 0) continue;
            std::uint32_t t = blocks_of(support(u), r, k).mask();
            local[t] += (length(u) % 2 ? -p : p);
        }
        std::vector<long long> next(buckets, 0);
        for (std::size_t a = 0; a < buckets; ++a) {
            if (combined[a] == 0) continue;
            for (std::size_t b = 0; b < buckets; ++b)
                if (local[b] != 0) next[a | b] += combined[a] * local[b];
        }
        combined = std::move(next);
    }
    return combined;
}

} // namespace

bool is_admissible_label(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S)
{
    return label_ok(w, J, S, nullptr);
}

void check_label(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S)
{
    std::string why;
    if (!label_ok(w, J, S, &why)) throw PreconditionError(why);
}

long long steinberg_multiplicity(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S)
{
    check_label(w, J, S);
    std::vector<long long> by_support = signed_sum_by_support(w, J);
    std::uint32_t need = J.minus(S).mask();
    long long total = 0;
    for (std::uint32_t t = 0; t < by_support.size(); ++t)
        if ((t & need) == need && (t & ~J.mask()) == 0) total += by_support[t];
    return J.minus(S).size() % 2 ? -total : total;
}

long long steinberg_multiplicity_oracle(const MultiWeylElement& w, const BlockSet& J,
                                        const BlockSet& S)
{
    check_label(w, J, S);
    long long total = 0;
    for (const auto& K : all_block_sets(J.r(), J.k())) {
        if (!S.is_subset_of(K) || !K.is_subset_of(J)) continue;
        long long m = parabolic_verma_mult(K, w);
        total += K.minus(S).size() % 2 ? -m : m;
    }
    return total;
}

namespace {

int resolve_max_len(int n, int d_L, int max_len)
{
    if (max_len >= 0) return max_len;
    require(n <= 6, "max_len must be supplied when n > 6");
    return d_L * n * (n - 1) / 2;
}

std::vector<MultiWeylElement> window(const BlockSet& S, int d_L, int max_len)
{
    SimpleRootSet need = levi_roots(S);
    std::vector<MultiWeylElement> out;
    for (auto& w : enumerate_multi(S.n(), d_L)) {
        if (length(w) > max_len) break;
        if (need.is_subset_of(dominance_of(w))) out.push_back(std::move(w));
    }
    return out;
}

// J with S ⊆ J ⊆ blocks of the dominance set of w, in mask order.
std::vector<BlockSet> admissible_J(const MultiWeylElement& w, const BlockSet& S)
{
    BlockSet top = blocks_of(dominance_of(w), S.r(), S.k());
    std::vector<BlockSet> out;
    for (const auto& J : all_block_sets(S.r(), S.k()))
        if (S.is_subset_of(J) && J.is_subset_of(top)) out.push_back(J);
    return out;
}

} // namespace

std::vector<Constituent> enumerate_constituents(const BlockSet& S, int d_L, int max_len, int threads)
{
    require(d_L >= 1, "d_L must be positive");
    max_len = resolve_max_len(S.n(), d_L, max_len);
    std::vector<MultiWeylElement> ws = window(S, d_L, max_len);
    std::vector<std::vector<Constituent>> per_w(ws.size());

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < ws.size(); i += step)
            for (const auto& J : admissible_J(ws[i], S)) {
                long long m = steinberg_multiplicity(ws[i], J, S);
                if (m != 0) per_w[i].push_back(Constituent{{ws[i], J, S}, m});
            }
    };

    threads = std::max(1, threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        pool.clear();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<Constituent> out;
    for (auto& v : per_w)
        for (auto& c : v) out.push_back(std::move(c));
    return out;
}

std::vector<ConstituentLabel> admissible_labels(int r, int k, int d_L)
{
    BlockSet empty(r, k);
    std::vector<ConstituentLabel> out;
    for (const auto& w : window(empty, d_L, d_L * r * k * (r * k - 1) / 2))
        for (const auto& J : admissible_J(w, empty))
            for (const auto& S : all_block_sets(r, k))
                if (S.is_subset_of(J)) out.push_back(ConstituentLabel{w, J, S});
    return out;
}

bool smooth_tits_euler_check(const BlockSet& I)
{
    using G = GrothVector<std::uint32_t>;
    FormalComplex cx(I);
    // [i_K] = sum of e_J over J ⊇ K, each with multiplicity one.
    std::function<G(const BlockSet&)> realize = [](const BlockSet& K) {
        G v;
        for (const auto& J : all_block_sets(K.r(), K.k()))
            if (K.is_subset_of(J)) v.add(J.mask(), 1);
        return v;
    };
    G expected;
    expected.add(I.mask(), 1);
    return cx.euler(realize) == expected;
}

bool analytic_tits_euler_check(const BlockSet& S, int d_L, int max_len)
{
    using G = GrothVector<LabelKey>;
    require(d_L >= 1, "d_L must be positive");
    max_len = resolve_max_len(S.n(), d_L, max_len);
    BlockSet empty(S.r(), S.k());
    std::vector<MultiWeylElement> ws = window(empty, d_L, max_len);

    // [I_K] = sum over labels (w, J) with K ⊆ J of [M_K : L(w)] e_{(w,J)}.
    std::function<G(const BlockSet&)> realize = [&](const BlockSet& K) {
        G v;
        for (const auto& w : ws) {
            std::vector<BlockSet> Js = admissible_J(w, K);
            if (Js.empty()) continue;
            long long m = parabolic_verma_mult(K, w);
            for (const auto& J : Js) v.add(LabelKey{w, J.mask()}, m);
        }
        return v;
    };
    FormalComplex cx(S);
    G lhs = cx.euler(realize);

    G rhs;
    for (const auto& w : ws) {
        if (!levi_roots(S).is_subset_of(dominance_of(w))) continue;
        for (const auto& J : admissible_J(w, S))
            rhs.add(LabelKey{w, J.mask()}, steinberg_multiplicity(w, J, S));
    }
    return lhs == rhs;
}

} // namespace anst
