#pragma once

#include <map>
#include <vector>

#include "anst/kl.hpp"
#include "anst/weyl.hpp"

// Brute-force reference computations, deliberately independent of the main algorithms.
namespace anst::oracle {

// x <= w iff some subword of a reduced word of w multiplies to x.
bool subword_leq(const Permutation& x, const Permutation& w);

// Number of nonnegative integer matrices with the given row and column sums.
long long count_matrices(const std::vector<int>& rows, const std::vector<int>& cols);

// Number of double cosets W_I \ S_n / W_J, by orbit enumeration.
long long count_double_cosets(const SimpleRootSet& I, const SimpleRootSet& J);

// P_{x,w} for every x <= w, solved from R-polynomials and the degree bound.
std::map<Permutation, KLPolynomial> kl_column(const Permutation& w);

} // namespace anst::oracle
