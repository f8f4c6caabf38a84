#include "anst/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "anst/cosets.hpp"
#include "anst/ext.hpp"
#include "anst/kl.hpp"
#include "anst/oracles.hpp"
#include "anst/segments.hpp"
#include "anst/steinberg.hpp"
#include "anst/weights.hpp"
#include "anst/weyl.hpp"

namespace anst {

bool SelfTestReport::ok() const
{
    for (const auto& s : suites)
        if (s.failures != 0) return false;
    return true;
}

namespace {

class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++r_.checks;
        if (ok) return;
        ++r_.failures;
        if (r_.samples.size() < 5) r_.samples.push_back(describe());
    }

    SuiteResult result() const { return r_; }

private:
    SuiteResult r_;
};

long long factorial(int n)
{
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<SimpleRootSet> all_root_sets(int n)
{
    std::vector<SimpleRootSet> out;
    for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) out.emplace_back(n, m << 1);
    return out;
}

SuiteResult weyl_suite(SelfTestLevel level, std::mt19937_64& rng)
{
    Suite s("weyl");
    for (int n = 1; n <= 5; ++n) {
        auto G = enumerate_group(n);
        s.check(static_cast<long long>(G.size()) == factorial(n), [&] { return "group size"; });
        for (const auto& w : G) {
            s.check(static_cast<int>(reduced_word(w).size()) == length(w),
                    [&] { return "reduced word length " + w.str(); });
            s.check(ascents_left(w) == descents_left(w).complement(),
                    [&] { return "ascents " + w.str(); });
            SimpleRootSet letters(n);
            for (int a : reduced_word(w)) letters.insert(a);
            s.check(support(w) == letters, [&] { return "support " + w.str(); });
            for (const auto& x : G) {
                bool a = bruhat_leq(x, w), b = bruhat_leq_rank_matrix(x, w);
                s.check(a == b, [&] { return "bruhat criteria " + x.str() + " " + w.str(); });
                if (n <= 5) s.check(a == oracle::subword_leq(x, w), [&] {
                    return "bruhat subword " + x.str() + " " + w.str();
                });
            }
        }
        for (const auto& I : all_root_sets(n)) {
            long long expect = 1;
            for (int b : block_sizes(I)) expect *= factorial(b);
            auto P = enumerate_parabolic(I);
            s.check(static_cast<long long>(P.size()) == expect, [&] { return "parabolic size " + I.str(); });
            Permutation w0 = longest_element(I);
            for (const auto& u : P)
                s.check(bruhat_leq(u, w0), [&] { return "longest element " + I.str(); });
        }
    }
    if (level == SelfTestLevel::Full) {
        for (int n : {6, 7}) {
            auto G = enumerate_group(n);
            std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
            for (int t = 0; t < 20000; ++t) {
                const auto& x = G[pick(rng)];
                const auto& w = G[pick(rng)];
                s.check(bruhat_leq(x, w) == bruhat_leq_rank_matrix(x, w),
                        [&] { return "bruhat criteria " + x.str() + " " + w.str(); });
                s.check(length(x * w) <= length(x) + length(w), [&] { return "subadditivity"; });
            }
        }
    }
    return s.result();
}

SuiteResult cosets_suite(SelfTestLevel level)
{
    Suite s("cosets");
    int top = level == SelfTestLevel::Full ? 7 : 5;
    for (int n = 1; n <= top; ++n) {
        auto sets = all_root_sets(n);
        for (const auto& I : sets)
            for (const auto& J : sets) {
                auto reps = min_double_coset_reps(n, I, J);
                long long m = oracle::count_matrices(block_sizes(I), block_sizes(J));
                s.check(static_cast<long long>(reps.size()) == m,
                        [&] { return "matrix count n=" + std::to_string(n) + " " + I.str() + " " + J.str(); });
                if (n <= 4)
                    s.check(static_cast<long long>(reps.size()) == oracle::count_double_cosets(I, J),
                            [&] { return "orbit count " + I.str() + " " + J.str(); });
            }
    }
    for (int k = 1; k <= 8; ++k)
        for (int r = 1; r <= 3; ++r)
            for (const auto& I : all_block_sets(r, k)) {
                auto a = modulus_exponents(I);
                auto parts = partition_of(I);
                long long sum = 0;
                for (std::size_t i = 0; i < parts.size(); ++i) sum += a[i] * parts[i];
                s.check(sum == 0, [&] { return "modulus sum " + I.str(); });
            }
    for (int r = 1; r <= 2; ++r)
        for (int k = 1; k <= 3; ++k) {
            auto G = enumerate_group(k);
            for (const auto& x : G)
                for (const auto& y : G)
                    s.check(block_embed(x * y, r) == block_embed(x, r) * block_embed(y, r),
                            [&] { return "block_embed homomorphism"; });
            for (const auto& x : G)
                s.check(length(block_embed(x, r)) == r * r * length(x),
                        [&] { return "block_embed length " + x.str(); });
        }
    return s.result();
}

SuiteResult weights_suite()
{
    Suite s("weights");
    for (int d = 1; d <= 2; ++d) {
        auto W = enumerate_multi(4, d);
        IntegralWeight lambda = IntegralWeight::zero(4, d);
        for (int sg = 0; sg < d; ++sg) lambda.rows[sg] = {3 + sg, 1, 0, -2};
        for (const auto& w : W) {
            SimpleRootSet dom = dominance_set(w, lambda);
            s.check(dom == ascent_set_I(w).intersection, [&] { return "dominance " + w.str(); });
            s.check(dom == dominance_set(w, IntegralWeight::zero(4, d)),
                    [&] { return "dominance stable " + w.str(); });
            if (d == 1)
                for (const auto& u : W) {
                    MultiWeylElement uw({u.comps[0] * w.comps[0]});
                    s.check(dot_action(uw, lambda) == dot_action(u, dot_action(w, lambda)),
                            [&] { return "dot action " + u.str() + " " + w.str(); });
                }
        }
    }
    return s.result();
}

void kl_pair_checks(Suite& s, const Permutation& x, const Permutation& w)
{
    KLPolynomial p = kl_poly(x, w);
    bool leq = bruhat_leq(x, w);
    s.check(p.is_zero() != leq, [&] { return "support " + x.str() + " " + w.str(); });
    if (!leq) return;
    s.check(p.coeff(0) == 1, [&] { return "constant term " + x.str() + " " + w.str(); });
    for (long long c : p.coeffs) s.check(c >= 0, [&] { return "negative coefficient"; });
    if (x != w)
        s.check(2 * p.degree() <= length(w) - length(x) - 1,
                [&] { return "degree bound " + x.str() + " " + w.str(); });
    s.check(p == kl_poly(x.inverse(), w.inverse()), [&] { return "inverse symmetry " + x.str() + " " + w.str(); });
    for (int i = 1; i < w.rank(); ++i)
        if (w.has_left_descent(i) && !x.has_left_descent(i))
            s.check(p == kl_poly(x.left_mul_simple(i), w), [&] { return "descent invariance"; });
}

SuiteResult kl_suite(SelfTestLevel level, std::mt19937_64& rng)
{
    Suite s("kl");
    for (int n = 2; n <= 5; ++n) {
        auto G = enumerate_group(n);
        for (const auto& w : G) {
            for (const auto& x : G) kl_pair_checks(s, x, w);
            if (n <= 4 || level == SelfTestLevel::Full)
                for (const auto& [x, p] : oracle::kl_column(w))
                    s.check(kl_poly(x, w) == p, [&] { return "R-polynomial oracle " + x.str() + " " + w.str(); });
        }
    }
    Permutation e4 = Permutation::identity(4), w0 = Permutation::from_one_line({4, 3, 2, 1});
    s.check(kl_poly(e4, Permutation::from_one_line({3, 4, 1, 2})) == KLPolynomial{{1, 1}},
            [&] { return "P_{e,3412} != 1+q"; });
    for (const auto& x : enumerate_group(4))
        s.check(kl_poly(x, w0) == KLPolynomial{{1}}, [&] { return "P_{x,w0} != 1"; });

    if (level == SelfTestLevel::Full) {
        for (int n : {6, 7}) {
            auto G = enumerate_group(n);
            std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
            int samples = n == 6 ? 400 : 60;
            for (int t = 0; t < samples; ++t) kl_pair_checks(s, G[pick(rng)], G[pick(rng)]);
            for (int t = 0; t < (n == 6 ? 3 : 1); ++t) {
                const auto& w = G[pick(rng)];
                for (const auto& [x, p] : oracle::kl_column(w))
                    s.check(kl_poly(x, w) == p, [&] { return "R-polynomial oracle " + x.str() + " " + w.str(); });
            }
        }
    }
    return s.result();
}

SuiteResult segments_suite(SelfTestLevel level)
{
    Suite s("segments");
    int top = level == SelfTestLevel::Full ? 6 : 5;
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= top; ++k) {
            TwistTuple base = pi_base_twists(r, k);
            Rational central(0);
            for (int i = 1; i <= k; ++i) central += (base[i - 1] - (k - i)) * r;
            s.check(central == Rational(0), [&] { return "centrality"; });
            auto segs = pi_I_segments(BlockSet(r, k));
            for (int i = 0; i < k; ++i)
                s.check(segs[i].block_length == 1 && segs[i].twist == base[i], [&] { return "pi_I(empty)"; });
            auto jd = jacquet_decomposition(r, k);
            std::set<TwistTuple> distinct;
            for (const auto& [w, t] : jd) distinct.insert(t);
            s.check(static_cast<long long>(distinct.size()) == factorial(k), [&] { return "jacquet distinct"; });
            s.check(static_cast<long long>(jh_factors(r, k).size()) == (1LL << (k - 1)), [&] { return "jh count"; });
            std::size_t covered = 0;
            for (const auto& I : all_block_sets(r, k)) {
                auto fiber = theta_fiber(I);
                covered += fiber.size();
                Permutation expect = longest_element(SimpleRootSet(k, I.complement().mask()));
                int shortest = 1 << 30;
                int count_shortest = 0;
                for (const auto& w : fiber) {
                    int l = length(w);
                    if (l < shortest) {
                        shortest = l;
                        count_shortest = 0;
                    }
                    if (l == shortest) ++count_shortest;
                }
                s.check(count_shortest == 1 && length(expect) == shortest &&
                            std::find(fiber.begin(), fiber.end(), expect) != fiber.end(),
                        [&] { return "theta fiber minimum " + I.str(); });
            }
            s.check(static_cast<long long>(covered) == factorial(k), [&] { return "theta fibers cover"; });
        }
    return s.result();
}

SuiteResult steinberg_suite(SelfTestLevel level)
{
    Suite s("steinberg");
    struct Shape { int r, k, d; };
    std::vector<Shape> shapes = {{1, 3, 1}, {2, 2, 1}, {1, 4, 1}, {2, 2, 2}, {1, 3, 2}};
    if (level == SelfTestLevel::Full) shapes.push_back({1, 5, 1});
    for (auto [r, k, d] : shapes) {
        for (const auto& L : admissible_labels(r, k, d)) {
            long long a = steinberg_multiplicity(L.w, L.J, L.S);
            long long b = steinberg_multiplicity_oracle(L.w, L.J, L.S);
            s.check(a == b, [&] { return "formula vs oracle " + L.w.str() + " J=" + L.J.str() + " S=" + L.S.str(); });
            s.check(a >= 0, [&] { return "negative multiplicity " + L.w.str(); });
            if (L.J == L.S) s.check(a == parabolic_verma_mult(L.S, L.w), [&] { return "J=S"; });
        }
        for (const auto& S : all_block_sets(r, k))
            s.check(analytic_tits_euler_check(S, d), [&] { return "analytic Tits S=" + S.str(); });
    }
    for (int k = 1; k <= 6; ++k)
        for (const auto& I : all_block_sets(1, k))
            s.check(smooth_tits_euler_check(I), [&] { return "smooth Tits " + I.str(); });
    for (int k = 1; k <= 5; ++k)
        s.check(tits_differential_squares_to_zero(1, k), [&] { return "d^2 != 0"; });
    return s.result();
}

SuiteResult ext_suite()
{
    Suite s("ext");
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 5; ++k)
            for (int d = 1; d <= 3; ++d) {
                s.check(consistency_check_thm_main(r, k, d), [&] { return "consistency"; });
                for (int i = 1; i < k; ++i) {
                    ExtQuery q;
                    q.flavor = Flavor::Analytic;
                    q.degree = 1;
                    q.r = r;
                    q.k = k;
                    q.n = r * k;
                    q.d_L = d;
                    q.left.kind = RepDescriptor::Kind::GenSteinberg;
                    q.left.set = BlockSet(r, k, std::vector<int>{i});
                    q.right.kind = RepDescriptor::Kind::StAn;
                    long long r7 = ext_dim(q).dim();
                    q.right.kind = RepDescriptor::Kind::SigmaI;
                    q.right.index = i;
                    s.check(r7 == ext_dim(q).dim() && r7 == d + 1, [&] { return "R7 vs R8"; });
                }
                for (const auto& I : all_block_sets(r, k))
                    for (const auto& J : all_block_sets(r, k)) {
                        if ((I | J) != BlockSet::full(r, k)) continue;
                        int shift = I.complement().size();
                        for (int deg = 0; deg <= k + 1; ++deg) {
                            ExtQuery a;
                            a.r = r;
                            a.k = k;
                            a.n = r * k;
                            a.d_L = d;
                            a.degree = deg;
                            a.left.kind = RepDescriptor::Kind::GenSteinberg;
                            a.left.set = I;
                            a.right.kind = RepDescriptor::Kind::IndFull;
                            a.right.set = J;
                            ExtQuery b = a;
                            b.left.kind = RepDescriptor::Kind::IndFull;
                            b.left.set = BlockSet::full(r, k);
                            b.degree = deg - shift;
                            long long expect = b.degree < 0 ? 0 : ext_dim(b).dim();
                            s.check(ext_dim(a).dim() == expect, [&] { return "R1/R3 coherence"; });
                        }
                    }
            }
    return s.result();
}

} // namespace

SelfTestReport run_selftest(SelfTestLevel level, bool inject_fault)
{
    SelfTestReport rep;
    rep.level = level == SelfTestLevel::Full ? "full" : "quick";
    std::mt19937_64 rng(20240611);
    if (inject_fault) {
        Permutation e = Permutation::identity(4);
        Permutation w = Permutation::from_one_line({3, 4, 1, 2});
        global_kl_cache().clear();
        global_kl_cache().poison(e, w, KLPolynomial{{1, 2}});
    }
    rep.suites.push_back(weyl_suite(level, rng));
    rep.suites.push_back(cosets_suite(level));
    rep.suites.push_back(weights_suite());
    rep.suites.push_back(kl_suite(level, rng));
    rep.suites.push_back(segments_suite(level));
    rep.suites.push_back(steinberg_suite(level));
    rep.suites.push_back(ext_suite());
    if (inject_fault) global_kl_cache().clear();
    return rep;
}

} // namespace anst
