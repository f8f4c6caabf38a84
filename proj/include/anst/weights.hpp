#pragma once

#include <string>
#include <vector>

#include "anst/weyl.hpp"

namespace anst {

// d_L x n integer matrix; row sigma is lambda_sigma.
struct IntegralWeight {
    int n = 0;
    std::vector<std::vector<long long>> rows;

    static IntegralWeight zero(int n, int d);
    int embeddings() const { return static_cast<int>(rows.size()); }
    std::string str() const;

    bool operator==(const IntegralWeight&) const = default;
};

// rho is stored as (n-1, ..., 0); the true rho is this minus (n-1)/2 in every coordinate.
struct ShiftedRho {
    IntegralWeight shifted;
    // Numerator of the global shift (n-1)/2.
    long long shift_times_two = 0;
};

ShiftedRho rho(int n);

enum class DominanceSign { Plus, Minus };

// (w(mu))_i = mu_{w^{-1}(i)}, applied per embedding.
IntegralWeight permute(const MultiWeylElement& w, const IntegralWeight& mu);
// w . lambda = w(lambda + rho) - rho.
IntegralWeight dot_action(const MultiWeylElement& w, const IntegralWeight& lambda);
bool is_I_dominant(const IntegralWeight& lambda, const SimpleRootSet& I, DominanceSign o);
// Maximal J with w . lambda in X_J^+; lambda must be Delta_n-dominant.
SimpleRootSet dominance_set(const MultiWeylElement& w, const IntegralWeight& lambda);

} // namespace anst
