#include "anst/segments.hpp"

#include <cctype>

#include "anst/config.hpp"
#include "anst/errors.hpp"

namespace anst {

std::string rational_str(const Rational& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        long long num = std::stoll(s.substr(0, slash), &used);
        require(used == (slash == std::string::npos ? s.size() : slash), "bad rational: " + s);
        long long den = 1;
        if (slash != std::string::npos) {
            std::string d = s.substr(slash + 1);
            den = std::stoll(d, &used);
            require(used == d.size() && den != 0, "bad rational: " + s);
        }
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw PreconditionError("bad rational: " + s);
    }
}

std::string Orientation::str() const
{
    std::string s;
    for (bool a : arrows) s += a ? '<' : '>';
    return s;
}

namespace {

// -(r/2)(k - 2i + 1) for the i-th block of size one.
Rational delta_half(int r, int k, int i)
{
    return Rational(-static_cast<long long>(r) * (k - 2 * i + 1), 2);
}

} // namespace

TwistTuple pi_base_twists(int r, int k)
{
    require(r >= 1 && k >= 1, "r and k must be positive");
    TwistTuple t;
    for (int i = 1; i <= k; ++i) t.push_back(delta_half(r, k, i) + (k - i));
    return t;
}

std::vector<std::pair<Permutation, TwistTuple>> jacquet_decomposition(int r, int k)
{
    require(r >= 1 && k >= 1, "r and k must be positive");
    std::vector<std::pair<Permutation, TwistTuple>> out;
    for (const auto& w : enumerate_group(k)) {
        TwistTuple t;
        for (int i = 1; i <= k; ++i) {
            int j = k - i;
            int wj = w(j + 1) - 1;
            t.push_back(delta_half(r, k, i) + wj);
        }
        out.emplace_back(w, std::move(t));
    }
    return out;
}

std::vector<SegmentDatum> pi_I_segments(const BlockSet& I)
{
    int r = I.r(), k = I.k();
    std::vector<SegmentDatum> out;
    int s_prev = 0;
    for (int ki : partition_of(I)) {
        int s_i = s_prev + ki;
        Rational twist = Rational(-static_cast<long long>(r) * (k - 2 * s_prev - ki), 2) + (k - s_i);
        out.push_back(SegmentDatum{ki, twist});
        s_prev = s_i;
    }
    return out;
}

Orientation orientation_of(const Permutation& w)
{
    Orientation o;
    for (int i = 1; i < w.rank(); ++i) o.arrows.push_back(w(i) < w(i + 1));
    return o;
}

std::vector<Permutation> theta_fiber(const BlockSet& I)
{
    std::vector<Permutation> out;
    for (const auto& w : enumerate_group(I.k())) {
        bool match = true;
        for (int i = 1; i < I.k() && match; ++i) match = (w(i) < w(i + 1)) == I.contains(i);
        if (match) out.push_back(w);
    }
    return out;
}

std::vector<BlockSet> jh_factors(int r, int k) { return all_block_sets(r, k); }

} // namespace anst
