#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "anst/config.hpp"
#include "anst/cosets.hpp"
#include "anst/errors.hpp"
#include "anst/ext.hpp"
#include "anst/io.hpp"
#include "anst/kl.hpp"
#include "anst/segments.hpp"
#include "anst/selftest.hpp"
#include "anst/steinberg.hpp"
#include "anst/weights.hpp"

namespace anst {

namespace {

using Json = nlohmann::ordered_json;

std::optional<int> opt_int(const CLI::Option* o, int v)
{
    return o->count() ? std::optional<int>(v) : std::nullopt;
}

Json matrix_json(const std::vector<std::vector<int>>& m)
{
    Json j = Json::array();
    for (const auto& row : m) j.push_back(row);
    return j;
}

Json twists_json(const TwistTuple& t)
{
    Json j = Json::array();
    for (const auto& q : t) j.push_back(rational_str(q));
    return j;
}

struct Common {
    std::string format = "json";
    bool verbose = false;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json"}));
    sub->add_flag("--verbose", c.verbose, "Human-readable summary on stderr");
}

// ---- verbs ----

struct WeylArgs {
    std::string w, x, longest, parabolic;
    int n = 0;
};

Json run_weyl(const WeylArgs& a, const CLI::Option* n_opt)
{
    auto n = opt_int(n_opt, a.n);
    if (!a.longest.empty() || !a.parabolic.empty()) {
        require(n.has_value(), "--n is required with --longest or --parabolic");
        Json j;
        if (!a.longest.empty()) {
            SimpleRootSet I = parse_root_set(a.longest, *n);
            Permutation w0 = longest_element(I);
            j["I"] = I.str();
            j["longest"] = w0.str();
            j["length"] = length(w0);
        }
        if (!a.parabolic.empty()) {
            SimpleRootSet I = parse_root_set(a.parabolic, *n);
            Json list = Json::array();
            for (const auto& u : enumerate_parabolic(I)) list.push_back(u.str());
            j["parabolic"] = I.str();
            j["count"] = list.size();
            j["elements"] = list;
        }
        return j;
    }
    require(!a.w.empty(), "--w is required");
    MultiWeylElement w = parse_multi(a.w, n);
    Json j;
    j["w"] = w.str();
    j["length"] = length(w);
    Json comps = Json::array();
    for (const auto& c : w.comps) {
        Json cj;
        cj["w"] = c.str();
        cj["length"] = length(c);
        cj["reduced_word"] = word_str(reduced_word(c));
        cj["left_descents"] = descents_left(c).str();
        cj["support"] = support(c).str();
        comps.push_back(cj);
    }
    j["components"] = comps;
    AscentSets I = ascent_set_I(w);
    j["I_union"] = I.union_set.str();
    j["I_intersection"] = I.intersection.str();
    if (!a.x.empty()) {
        MultiWeylElement x = parse_multi(a.x, w.rank());
        require(x.embeddings() == w.embeddings(), "--x and --w have different embedding counts");
        bool leq = true;
        for (int s = 0; s < w.embeddings(); ++s) leq = leq && bruhat_leq(x.comps[s], w.comps[s]);
        j["x"] = x.str();
        j["bruhat_leq"] = leq;
    }
    return j;
}

struct CosetArgs {
    std::string I = "-", J = "-", embed;
    int n = 0, r = 0, k = 0;
};

Json run_cosets(const CosetArgs& a, const CLI::Option* n_opt)
{
    Json j;
    if (!a.embed.empty()) {
        require(a.r >= 1, "--r is required with --embed");
        Permutation small = parse_permutation(a.embed, a.k >= 1 ? std::optional<int>(a.k) : std::nullopt);
        j["w"] = small.str();
        j["r"] = a.r;
        j["embedded"] = block_embed(small, a.r).str();
        return j;
    }
    if (n_opt->count()) {
        SimpleRootSet I = parse_root_set(a.I, a.n), J = parse_root_set(a.J, a.n);
        auto reps = min_double_coset_reps(a.n, I, J);
        j["n"] = a.n;
        j["I"] = I.str();
        j["J"] = J.str();
        j["count"] = reps.size();
        Json list = Json::array();
        for (const auto& w : reps) {
            Json e;
            e["w"] = w.str();
            e["length"] = length(w);
            e["matrix"] = matrix_json(coset_matrix(w, I, J));
            list.push_back(e);
        }
        j["reps"] = list;
        return j;
    }
    require(a.r >= 1 && a.k >= 1, "give either --n or both --r and --k");
    BlockSet I = parse_block_set(a.I, a.r, a.k), J = parse_block_set(a.J, a.r, a.k);
    check_enumeration_bound(I.n());
    j["r"] = a.r;
    j["k"] = a.k;
    j["I"] = I.str();
    j["J"] = J.str();
    j["partition_I"] = partition_of(I);
    j["partition_J"] = partition_of(J);
    j["modulus_exponents_I"] = modulus_exponents(I);
    Json list = Json::array();
    for (const auto& w : enumerate_group(I.n()))
        if (is_in_W_IJ(w, I, J)) list.push_back(w.str());
    j["W_IJ"] = list;
    return j;
}

struct KLArgs {
    std::string x, w;
    int n = 0;
};

Json run_kl(const KLArgs& a, const CLI::Option* n_opt)
{
    auto n = opt_int(n_opt, a.n);
    Permutation w = parse_permutation(a.w, n);
    Permutation x = parse_permutation(a.x, w.rank());
    Json j;
    j["coeffs"] = kl_poly(x, w).coeffs;
    return j;
}

struct MultArgs {
    std::string w, wp, K;
    int n = 0, r = 0, k = 0;
};

Json run_mult(const MultArgs& a, const CLI::Option* n_opt)
{
    Json j;
    if (!a.K.empty()) {
        require(a.r >= 1 && a.k >= 1, "--r and --k are required with --K");
        BlockSet K = parse_block_set(a.K, a.r, a.k);
        MultiWeylElement w = parse_multi(a.w, K.n());
        j["K"] = K.str();
        j["w"] = w.str();
        j["m"] = parabolic_verma_mult(K, w);
        return j;
    }
    require(!a.wp.empty(), "give --wp for a Verma multiplicity or --K for a parabolic one");
    auto n = opt_int(n_opt, a.n);
    MultiWeylElement w = parse_multi(a.w, n);
    MultiWeylElement wp = parse_multi(a.wp, w.rank());
    j["wp"] = wp.str();
    j["w"] = w.str();
    j["m"] = verma_mult(wp, w);
    return j;
}

struct SteinbergArgs {
    int r = 0, k = 0, dL = 1, max_len = -1, parallel = 1;
    std::string S = "-", J, w;
    bool oracle = false;
};

Json label_json(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S, long long m)
{
    Json e;
    e["w"] = w.str();
    e["J"] = J.str();
    e["S"] = S.str();
    e["m"] = m;
    return e;
}

Json run_steinberg(const SteinbergArgs& a)
{
    BlockSet S = parse_block_set(a.S, a.r, a.k);
    require(a.dL >= 1, "--dL must be positive");
    if (!a.w.empty()) {
        require(!a.J.empty(), "--J is required with --w");
        BlockSet J = parse_block_set(a.J, a.r, a.k);
        MultiWeylElement w = parse_multi(a.w, S.n());
        require(w.embeddings() == a.dL, "--w must have dL components separated by ';'");
        Json e = label_json(w, J, S, steinberg_multiplicity(w, J, S));
        if (a.oracle) e["oracle"] = steinberg_multiplicity_oracle(w, J, S);
        return e;
    }
    Json results = Json::array();
    if (!a.J.empty()) {
        // Every minimal representative admissible for this J, zeros included.
        BlockSet J = parse_block_set(a.J, a.r, a.k);
        int max_len = a.max_len;
        if (max_len < 0) {
            require(S.n() <= 6, "--max-len must be supplied when n > 6");
            max_len = a.dL * S.n() * (S.n() - 1) / 2;
        }
        for (const auto& w : enumerate_multi(S.n(), a.dL)) {
            if (length(w) > max_len) break;
            if (!is_admissible_label(w, J, S)) continue;
            Json e = label_json(w, J, S, steinberg_multiplicity(w, J, S));
            if (a.oracle) e["oracle"] = steinberg_multiplicity_oracle(w, J, S);
            results.push_back(e);
        }
    } else {
        for (const auto& c : enumerate_constituents(S, a.dL, a.max_len, a.parallel)) {
            Json e = label_json(c.label.w, c.label.J, c.label.S, c.m);
            if (a.oracle) e["oracle"] = steinberg_multiplicity_oracle(c.label.w, c.label.J, c.label.S);
            results.push_back(e);
        }
    }
    Json j;
    j["r"] = a.r;
    j["k"] = a.k;
    j["dL"] = a.dL;
    j["S"] = S.str();
    j["count"] = results.size();
    j["results"] = results;
    return j;
}

Json run_jh(int r, int k)
{
    Json j;
    auto f = jh_factors(r, k);
    j["r"] = r;
    j["k"] = k;
    j["count"] = f.size();
    Json list = Json::array();
    for (const auto& I : f) list.push_back(I.str());
    j["factors"] = list;
    return j;
}

Json run_segments(int r, int k, const std::string& I_text)
{
    Json j;
    j["r"] = r;
    j["k"] = k;
    j["base_twists"] = twists_json(pi_base_twists(r, k));
    BlockSet I = parse_block_set(I_text, r, k);
    j["I"] = I.str();
    Json segs = Json::array();
    for (const auto& s : pi_I_segments(I)) {
        Json e;
        e["len"] = s.block_length;
        e["twist"] = rational_str(s.twist);
        segs.push_back(e);
    }
    j["segments"] = segs;
    return j;
}

Json run_jacquet(int r, int k, const std::string& fiber)
{
    Json j;
    j["r"] = r;
    j["k"] = k;
    if (!fiber.empty()) {
        BlockSet I = parse_block_set(fiber, r, k);
        Json list = Json::array();
        for (const auto& w : theta_fiber(I)) list.push_back(w.str());
        j["I"] = I.str();
        j["fiber"] = list;
        return j;
    }
    auto jd = jacquet_decomposition(r, k);
    j["count"] = jd.size();
    Json list = Json::array();
    for (const auto& [w, t] : jd) {
        Json e;
        e["w"] = w.str();
        e["orientation"] = orientation_of(w).str();
        e["exponents"] = twists_json(t);
        list.push_back(e);
    }
    j["tuples"] = list;
    return j;
}

struct TitsArgs {
    int r = 0, k = 0, dL = 1, max_len = -1;
    std::string S;
};

Json run_tits(const TitsArgs& a)
{
    std::vector<BlockSet> sets;
    if (a.S.empty())
        sets = all_block_sets(a.r, a.k);
    else
        sets.push_back(parse_block_set(a.S, a.r, a.k));
    bool all = true;
    Json smooth = Json::array(), analytic = Json::array();
    for (const auto& S : sets) {
        bool s_ok = smooth_tits_euler_check(S);
        bool a_ok = analytic_tits_euler_check(S, a.dL, a.max_len);
        all = all && s_ok && a_ok;
        smooth.push_back(Json{{"I", S.str()}, {"ok", s_ok}});
        analytic.push_back(Json{{"S", S.str()}, {"ok", a_ok}});
    }
    bool dd = tits_differential_squares_to_zero(a.r, a.k);
    Json j;
    j["r"] = a.r;
    j["k"] = a.k;
    j["dL"] = a.dL;
    j["smooth"] = smooth;
    j["analytic"] = analytic;
    j["d_squared_zero"] = dd;
    j["ok"] = all && dd;
    return j;
}

struct ExtArgs {
    std::string kind = "smooth", left, right, char_group, I = "-";
    bool fixed_center = false;
    int degree = 0, r = 0, k = 0, dL = 1, n = 0;
};

Json run_ext(const ExtArgs& a, const CLI::Option* n_opt)
{
    Json j;
    if (!a.char_group.empty()) {
        BlockSet I = parse_block_set(a.I, a.r, a.k);
        j["dim"] = char_group_dim(parse_char_group(a.char_group), I, a.dL);
        return j;
    }
    require(!a.left.empty() && !a.right.empty(), "--left and --right are required");
    ExtQuery q;
    q.flavor = a.kind == "analytic" ? Flavor::Analytic : Flavor::Smooth;
    q.fixed_center = a.fixed_center;
    q.degree = a.degree;
    q.r = a.r;
    q.k = a.k;
    q.n = n_opt->count() ? a.n : a.r * a.k;
    q.d_L = a.dL;
    q.left = RepDescriptor::parse(a.left, a.r, a.k);
    q.right = RepDescriptor::parse(a.right, a.r, a.k);
    ExtAnswer ans = ext_dim(q);
    if (!ans.determined()) {
        j["status"] = "not-determined";
        return j;
    }
    j["dim"] = ans.value;
    j["cite"] = ans.citation;
    j["rule"] = ans.rule;
    return j;
}

Json run_self(const std::string& level, bool fault, bool& ok)
{
    SelfTestReport rep = run_selftest(level == "full" ? SelfTestLevel::Full : SelfTestLevel::Quick, fault);
    Json suites = Json::array();
    for (const auto& s : rep.suites) {
        Json e;
        e["name"] = s.name;
        e["checks"] = s.checks;
        e["failures"] = s.failures;
        if (!s.samples.empty()) e["samples"] = s.samples;
        suites.push_back(e);
    }
    ok = rep.ok();
    Json j;
    j["level"] = rep.level;
    j["suites"] = suites;
    j["ok"] = ok;
    return j;
}

void describe(std::ostream& err, const Json& j)
{
    err << j.dump(2) << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weyl-group, Kazhdan-Lusztig and Steinberg-multiplicity calculator", "anst"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    int bound = kDefaultEnumerationBound;
    app.add_option("--bound", bound, "Enumeration bound on the rank")->check(CLI::Range(1, Permutation::kMaxRank));

    auto* weyl = app.add_subcommand("weyl", "Length, reduced word, descents, Bruhat order");
    WeylArgs wa;
    auto* weyl_n = weyl->add_option("--n", wa.n, "Rank");
    weyl->add_option("--w", wa.w, "Weyl element, components separated by ';'");
    weyl->add_option("--x", wa.x, "Second element for a Bruhat comparison x <= w");
    weyl->add_option("--longest", wa.longest, "Longest element of the parabolic of this root set");
    weyl->add_option("--parabolic", wa.parabolic, "Enumerate the parabolic subgroup of this root set");
    add_common(weyl, common);

    auto* cosets = app.add_subcommand("cosets", "Double cosets, block data and W_{I,J}");
    CosetArgs ca;
    auto* cosets_n = cosets->add_option("--n", ca.n, "Rank, for simple-root double cosets");
    cosets->add_option("--r", ca.r, "Block size");
    cosets->add_option("--k", ca.k, "Block count");
    cosets->add_option("--I", ca.I, "Left set");
    cosets->add_option("--J", ca.J, "Right set");
    cosets->add_option("--embed", ca.embed, "Element of S_k to embed block-wise");
    add_common(cosets, common);

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
    KLArgs ka;
    auto* kl_n = kl->add_option("--n", ka.n, "Rank");
    kl->add_option("--x", ka.x, "Lower element")->required();
    kl->add_option("--w", ka.w, "Upper element")->required();
    add_common(kl, common);

    auto* mult = app.add_subcommand("mult", "Verma or parabolic Verma multiplicity");
    MultArgs ma;
    auto* mult_n = mult->add_option("--n", ma.n, "Rank");
    mult->add_option("--w", ma.w, "Weyl element w")->required();
    mult->add_option("--wp", ma.wp, "Weyl element w' for m(w', w)");
    mult->add_option("--K", ma.K, "Block set K for [M_K : L(w)]");
    mult->add_option("--r", ma.r, "Block size");
    mult->add_option("--k", ma.k, "Block count");
    add_common(mult, common);

    auto* st = app.add_subcommand("steinberg-mult", "Multiplicities m(w,J,S)");
    SteinbergArgs sa;
    st->add_option("--r", sa.r, "Block size")->required();
    st->add_option("--k", sa.k, "Block count")->required();
    st->add_option("--dL", sa.dL, "Number of embeddings");
    st->add_option("--S", sa.S, "Block set S");
    st->add_option("--J", sa.J, "Block set J");
    st->add_option("--w", sa.w, "Weyl element");
    st->add_option("--max-len", sa.max_len, "Length window");
    st->add_option("--parallel", sa.parallel, "Worker threads for enumeration")->check(CLI::Range(1, 256));
    st->add_flag("--oracle", sa.oracle, "Also report the alternating-sum cross-check");
    add_common(st, common);

    auto* jh = app.add_subcommand("jh", "Jordan-Hölder factors of the smooth induction");
    int jr = 0, jk = 0;
    jh->add_option("--r", jr, "Block size")->required();
    jh->add_option("--k", jk, "Block count")->required();
    add_common(jh, common);

    auto* seg = app.add_subcommand("segments", "Twist exponents and the segments of pi_I");
    int sr = 0, sk = 0;
    std::string sI = "-";
    seg->add_option("--r", sr, "Block size")->required();
    seg->add_option("--k", sk, "Block count")->required();
    seg->add_option("--I", sI, "Block set I");
    add_common(seg, common);

    auto* jac = app.add_subcommand("jacquet", "Jacquet-module twist tuples and orientation fibers");
    int qr = 0, qk = 0;
    std::string fiber;
    jac->add_option("--r", qr, "Block size")->required();
    jac->add_option("--k", qk, "Block count")->required();
    jac->add_option("--fiber", fiber, "List the fiber over this block set instead");
    add_common(jac, common);

    auto* tits = app.add_subcommand("tits-check", "Euler-characteristic checks of the Tits complexes");
    TitsArgs ta;
    tits->add_option("--r", ta.r, "Block size")->required();
    tits->add_option("--k", ta.k, "Block count")->required();
    tits->add_option("--dL", ta.dL, "Number of embeddings");
    tits->add_option("--S", ta.S, "Only this block set");
    tits->add_option("--max-len", ta.max_len, "Length window");
    add_common(tits, common);

    auto* ext = app.add_subcommand("ext-dim", "Dimension of a Hom or Ext group");
    ExtArgs ea;
    ext->add_option("--kind", ea.kind, "smooth or analytic")->check(CLI::IsMember({"smooth", "analytic"}));
    ext->add_flag("--fixed-center", ea.fixed_center, "Fix the central character");
    ext->add_option("--degree", ea.degree, "Degree i");
    ext->add_option("--left", ea.left, "Left representation");
    ext->add_option("--right", ea.right, "Right representation");
    ext->add_option("--r", ea.r, "Block size")->required();
    ext->add_option("--k", ea.k, "Block count")->required();
    ext->add_option("--dL", ea.dL, "Number of embeddings");
    auto* ext_n = ext->add_option("--n", ea.n, "Rank, checked against r*k");
    ext->add_option("--char-group", ea.char_group, "Report a character-group dimension instead");
    ext->add_option("--I", ea.I, "Block set for --char-group");
    add_common(ext, common);

    auto* self = app.add_subcommand("selftest", "Run the invariant suites");
    std::string level = "quick";
    bool fault = false;
    self->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    self->add_flag("--inject-fault", fault, "Corrupt one cached KL polynomial first");
    add_common(self, common);

    auto fail = [&](int code, const std::string& msg) {
        out << Json{{"error", msg}}.dump() << '\n';
        return code;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail(2, e.what());
    }

    struct RestoreBound {
        int saved = enumeration_bound();
        ~RestoreBound() { set_enumeration_bound(saved); }
    } restore;
    try {
        set_enumeration_bound(bound);
        Json result;
        int code = 0;
        if (*weyl) result = run_weyl(wa, weyl_n);
        else if (*cosets) result = run_cosets(ca, cosets_n);
        else if (*kl) result = run_kl(ka, kl_n);
        else if (*mult) result = run_mult(ma, mult_n);
        else if (*st) result = run_steinberg(sa);
        else if (*jh) result = run_jh(jr, jk);
        else if (*seg) result = run_segments(sr, sk, sI);
        else if (*jac) result = run_jacquet(qr, qk, fiber);
        else if (*tits) {
            result = run_tits(ta);
            if (!result["ok"].get<bool>()) code = 1;
        } else if (*ext) result = run_ext(ea, ext_n);
        else if (*self) {
            bool ok = true;
            result = run_self(level, fault, ok);
            if (!ok) code = 1;
        }
        out << result.dump() << '\n';
        if (common.verbose) describe(err, result);
        return code;
    } catch (const PreconditionError& e) {
        return fail(2, e.what());
    } catch (const ResourceError& e) {
        return fail(3, e.what());
    }
}

} // namespace anst
