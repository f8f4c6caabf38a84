#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "anst/cosets.hpp"
#include "anst/weyl.hpp"

namespace anst {

using Rational = boost::rational<long long>;

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

// A segment of block_length copies of the cuspidal label, twisted by v_r^twist.
struct SegmentDatum {
    int block_length = 1;
    Rational twist{0};

    bool operator==(const SegmentDatum&) const = default;
};

using TwistTuple = std::vector<Rational>;

// arrows[i-1] is true when edge i points right, i.e. w(i) < w(i+1).
struct Orientation {
    std::vector<bool> arrows;

    // "<" for a right-pointing edge, ">" otherwise.
    std::string str() const;
    bool operator==(const Orientation&) const = default;
};

// i-th exponent -(r/2)(k-2i+1) + (k-i).
TwistTuple pi_base_twists(int r, int k);

// The pairs (w, w(pi^<r>)) for w in S_k; w acts on {0..k-1} by j -> w(j+1)-1.
std::vector<std::pair<Permutation, TwistTuple>> jacquet_decomposition(int r, int k);

// Per Levi block i: length k_i and twist -(r/2)(k - 2s_{i-1} - k_i) + (k - s_i).
std::vector<SegmentDatum> pi_I_segments(const BlockSet& I);

Orientation orientation_of(const Permutation& w);
// {w in S_k : w(i) < w(i+1) exactly for i in I}.
std::vector<Permutation> theta_fiber(const BlockSet& I);

// Labels of the Jordan-Hölder factors of the smooth induction: every I in Delta_n(k).
std::vector<BlockSet> jh_factors(int r, int k);

} // namespace anst
