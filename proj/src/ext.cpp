#include "anst/ext.hpp"

#include "anst/errors.hpp"

namespace anst {

namespace {

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    if (s == "-" || s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            require(used == tok.size(), "bad integer: " + tok);
        } catch (const std::logic_error&) {
            throw PreconditionError("bad integer: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int parse_index(const std::string& s)
{
    auto v = parse_int_list(s);
    require(v.size() == 1, "expected a single index: " + s);
    return v.front();
}

} // namespace

RepDescriptor RepDescriptor::parse(const std::string& text, int r, int k)
{
    RepDescriptor d;
    d.set = BlockSet(r, k);
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need_tail = [&] { require(colon != std::string::npos, "descriptor needs an argument: " + text); };

    if (head == "st-an") {
        require(colon == std::string::npos, "st-an takes no argument");
        d.kind = Kind::StAn;
    } else if (head == "i" || head == "v" || head == "levi") {
        need_tail();
        d.kind = head == "i" ? Kind::IndFull : head == "v" ? Kind::GenSteinberg : Kind::SelfExtLevi;
        d.set = BlockSet(r, k, parse_int_list(tail));
    } else if (head == "sigma" || head == "c") {
        need_tail();
        auto at = tail.find('@');
        d.index = parse_index(tail.substr(0, at));
        if (at == std::string::npos) {
            require(head == "sigma", "c: needs an embedding, as in c:2@0");
            d.kind = Kind::SigmaI;
        } else {
            d.kind = head == "sigma" ? Kind::SigmaISigma : Kind::ConstituentC;
            d.sigma = parse_index(tail.substr(at + 1));
        }
        require(d.index >= 1 && d.index < k, "index outside 1..k-1: " + text);
    } else {
        throw PreconditionError("unknown representation descriptor: " + text);
    }
    return d;
}

std::string RepDescriptor::str() const
{
    switch (kind) {
    case Kind::IndFull: return "i:" + set.str();
    case Kind::GenSteinberg: return "v:" + set.str();
    case Kind::SelfExtLevi: return "levi:" + set.str();
    case Kind::StAn: return "st-an";
    case Kind::SigmaI: return "sigma:" + std::to_string(index);
    case Kind::SigmaISigma: return "sigma:" + std::to_string(index) + "@" + std::to_string(sigma);
    case Kind::ConstituentC: return "c:" + std::to_string(index) + "@" + std::to_string(sigma);
    }
    return "?";
}

CharGroup parse_char_group(const std::string& s)
{
    if (s == "HomL") return CharGroup::HomL;
    if (s == "HomLsmooth") return CharGroup::HomLsmooth;
    if (s == "HomLsigma") return CharGroup::HomLsigma;
    if (s == "HomZI") return CharGroup::HomZI;
    if (s == "HomZIbar") return CharGroup::HomZIbar;
    if (s == "XstarLI") return CharGroup::XstarLI;
    if (s == "XstarLIbar") return CharGroup::XstarLIbar;
    throw PreconditionError("unknown character group: " + s);
}

int levi_block_count(const BlockSet& I) { return I.k() - I.size(); }

long long binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    long long c = 1;
    for (long long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

long long char_group_dim(CharGroup kind, const BlockSet& I, int d_L)
{
    require(d_L >= 1, "d_L must be positive");
    long long l = levi_block_count(I);
    switch (kind) {
    case CharGroup::HomL: return d_L + 1;
    case CharGroup::HomLsmooth: return 1;
    case CharGroup::HomLsigma: return 2;
    case CharGroup::HomZI: return l * (d_L + 1);
    case CharGroup::HomZIbar: return (l - 1) * (d_L + 1);
    case CharGroup::XstarLI: return l;
    case CharGroup::XstarLIbar: return l - 1;
    }
    return 0;
}

namespace {

using Kind = RepDescriptor::Kind;
using Status = ExtAnswer::Status;

ExtAnswer dimension(long long v, std::string rule, std::string cite)
{
    if (v == 0) return ExtAnswer{Status::ZeroByRule, 0, std::move(rule), std::move(cite)};
    return ExtAnswer{Status::Dimension, v, std::move(rule), std::move(cite)};
}

ExtAnswer zero(std::string rule, std::string cite)
{
    return ExtAnswer{Status::ZeroByRule, 0, std::move(rule), std::move(cite)};
}

ExtAnswer undetermined(std::string rule = "", std::string cite = "")
{
    return ExtAnswer{Status::NotDetermined, 0, std::move(rule), std::move(cite)};
}

bool is_full(const BlockSet& J) { return J == BlockSet::full(J.r(), J.k()); }

bool is_codim_one(const BlockSet& J) { return J.k() >= 2 && J.size() == J.k() - 2; }

// Smooth self-extensions of pi_J: the exterior algebra on the character group.
ExtAnswer smooth_levi(const BlockSet& J, int degree, bool fixed_center, const std::string& rule,
                      const std::string& cite)
{
    if (!fixed_center)
        return dimension(binomial(levi_block_count(J), degree), rule, cite + "; SmoothEXTlemmaPre(c)");
    if (is_full(J) || is_codim_one(J))
        return dimension(binomial(levi_block_count(J) - 1, degree), rule,
                         cite + "; SmoothEXTlemmaPre(a,d)");
    return undetermined(rule, cite);
}

// Locally analytic self-extensions of pi_J, known in degrees 0 and 1 only.
ExtAnswer analytic_levi(const BlockSet& J, int degree, bool fixed_center, int d_L,
                        const std::string& rule, const std::string& cite)
{
    if (degree > 1) return undetermined(rule, cite);
    std::string c = cite + "; EXTlemmaPre";
    if (!fixed_center) {
        if (!is_full(J)) return undetermined(rule, cite);
        return dimension(degree == 0 ? 1 : d_L + 1, rule, c);
    }
    if (!is_full(J) && !is_codim_one(J)) return undetermined(rule, cite);
    return dimension(degree == 0 ? 1 : (levi_block_count(J) - 1) * (d_L + 1), rule, c);
}

std::optional<int> single_member(const BlockSet& I)
{
    if (I.size() != 1) return std::nullopt;
    return I.members().front();
}

void validate(const ExtQuery& q)
{
    require(q.r >= 1 && q.k >= 1, "r and k must be positive");
    require(q.n == q.r * q.k, "n must equal r*k");
    require(q.d_L >= 1, "d_L must be positive");
    require(q.degree >= 0, "degree must be nonnegative");
    for (const RepDescriptor* d : {&q.left, &q.right}) {
        switch (d->kind) {
        case Kind::IndFull:
        case Kind::GenSteinberg:
        case Kind::SelfExtLevi:
            require(d->set.r() == q.r && d->set.k() == q.k, "block set shape does not match (r,k)");
            break;
        case Kind::SigmaI:
        case Kind::SigmaISigma:
        case Kind::ConstituentC:
            require(d->index >= 1 && d->index < q.k, "index outside 1..k-1");
            if (d->kind != Kind::SigmaI)
                require(d->sigma >= 0 && d->sigma < q.d_L, "embedding index outside 0..d_L-1");
            break;
        case Kind::StAn: break;
        }
    }
}

ExtAnswer smooth_rules(const ExtQuery& q)
{
    const RepDescriptor& L = q.left;
    const RepDescriptor& R = q.right;
    int i = q.degree;

    if (L.kind == Kind::IndFull && R.kind == Kind::IndFull) {
        const BlockSet &I = L.set, &J = R.set;
        std::string rule = q.fixed_center ? "R2" : "R1";
        if (!J.is_subset_of(I)) return zero(rule, "Lemma SmoothExt1");
        return smooth_levi(J, i, q.fixed_center, rule, "Lemma SmoothExt1");
    }
    if (L.kind == Kind::GenSteinberg && R.kind == Kind::IndFull) {
        const BlockSet &I = L.set, &J = R.set;
        if ((I | J) != BlockSet::full(q.r, q.k)) return zero("R3", "Prop SmoothExt2");
        int shifted = i - I.complement().size();
        if (shifted < 0) return zero("R3", "Prop SmoothExt2");
        return smooth_levi(J, shifted, q.fixed_center, "R3", "Prop SmoothExt2");
    }
    if (L.kind == Kind::GenSteinberg && R.kind == Kind::GenSteinberg) {
        const BlockSet &I = L.set, &J = R.set;
        if (J.is_subset_of(I) && I.size() == J.size() + 1) {
            if (i == 1) return dimension(1, "R4", "Prop smoothExt4");
            if (!q.fixed_center) return zero("R4", "Prop smoothExt4");
            return undetermined("R4", "Prop smoothExt4");
        }
        return undetermined();
    }
    if (L.kind == Kind::SelfExtLevi && R.kind == Kind::SelfExtLevi) {
        require(L.set == R.set, "self-extensions need the same block set on both sides");
        return smooth_levi(L.set, i, q.fixed_center, "R11", "Lemma SmoothEXTlemmaPre");
    }
    return undetermined();
}

ExtAnswer analytic_rules(const ExtQuery& q)
{
    const RepDescriptor& L = q.left;
    const RepDescriptor& R = q.right;
    int i = q.degree;

    if (L.kind == Kind::IndFull && R.kind == Kind::IndFull) {
        const BlockSet &I = L.set, &J = R.set;
        if (!J.is_subset_of(I)) return zero("R5", "Lemma analyticExt1analyticExtC1");
        return analytic_levi(J, i, q.fixed_center, q.d_L, "R5", "Lemma analyticExt1analyticExtC1");
    }
    if (L.kind == Kind::GenSteinberg && R.kind == Kind::IndFull) {
        const BlockSet &I = L.set, &J = R.set;
        if ((I | J) != BlockSet::full(q.r, q.k)) return zero("R6", "Cor coranalyticExt2");
        int shifted = i - I.complement().size();
        if (shifted < 0) return zero("R6", "Cor coranalyticExt2");
        return analytic_levi(J, shifted, q.fixed_center, q.d_L, "R6", "Cor coranalyticExt2");
    }
    if (L.kind == Kind::SelfExtLevi && R.kind == Kind::SelfExtLevi) {
        require(L.set == R.set, "self-extensions need the same block set on both sides");
        return analytic_levi(L.set, i, q.fixed_center, q.d_L, "R5", "Lemma EXTlemmaPre");
    }

    auto only = L.kind == Kind::GenSteinberg ? single_member(L.set) : std::nullopt;
    if (!only) return undetermined();
    int a = *only;

    if (R.kind == Kind::StAn) {
        if (i == 1) return dimension(q.d_L + 1, "R7", "Thm analyticExt3");
        if (i == 0) return zero("R7", "Thm analyticExt3");
        return undetermined();
    }
    if (q.fixed_center || i != 1) return undetermined();
    if (R.kind == Kind::SigmaI && R.index == a)
        return dimension(char_group_dim(CharGroup::HomL, L.set, q.d_L), "R8", "Prop sigmaan");
    if (R.kind == Kind::SigmaISigma) {
        if (R.index == a) return dimension(2, "R9", "Lemma lastextensions(3)");
        return undetermined();
    }
    if (R.kind == Kind::ConstituentC)
        return dimension(R.index == a ? 1 : 0, "R10", "Lemma twoisoextensions(2)");
    return undetermined();
}

} // namespace

ExtAnswer ext_dim(const ExtQuery& q)
{
    validate(q);
    return q.flavor == Flavor::Smooth ? smooth_rules(q) : analytic_rules(q);
}

bool consistency_check_thm_main(int r, int k, int d_L)
{
    for (int i = 1; i < k; ++i) {
        BlockSet Dki = BlockSet::all_but(r, k, i);
        if (char_group_dim(CharGroup::HomZIbar, Dki, d_L) != d_L + 1) return false;
        ExtQuery q;
        q.flavor = Flavor::Analytic;
        q.degree = 1;
        q.r = r;
        q.k = k;
        q.n = r * k;
        q.d_L = d_L;
        q.left.kind = RepDescriptor::Kind::GenSteinberg;
        q.left.set = BlockSet(r, k, std::vector<int>{i});
        q.right.kind = RepDescriptor::Kind::StAn;
        for (bool fixed : {false, true}) {
            q.fixed_center = fixed;
            if (ext_dim(q).dim() != char_group_dim(CharGroup::HomZIbar, Dki, d_L)) return false;
        }
    }
    return true;
}

} // namespace anst
