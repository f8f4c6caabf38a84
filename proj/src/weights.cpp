#include "anst/weights.hpp"

#include "anst/errors.hpp"

namespace anst {

IntegralWeight IntegralWeight::zero(int n, int d)
{
    require(n >= 1 && d >= 1, "weight shape must be positive");
    return IntegralWeight{n, std::vector<std::vector<long long>>(d, std::vector<long long>(n, 0))};
}

std::string IntegralWeight::str() const
{
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += ';';
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows[r][i]);
        }
    }
    return s;
}

ShiftedRho rho(int n)
{
    IntegralWeight w = IntegralWeight::zero(n, 1);
    for (int i = 0; i < n; ++i) w.rows[0][i] = n - 1 - i;
    return ShiftedRho{w, n - 1};
}

namespace {

void check_shape(const MultiWeylElement& w, const IntegralWeight& mu)
{
    require(w.embeddings() == mu.embeddings(), "embedding count mismatch");
    require(w.rank() == mu.n, "rank mismatch");
    for (const auto& row : mu.rows) require(static_cast<int>(row.size()) == mu.n, "ragged weight");
}

} // namespace

IntegralWeight permute(const MultiWeylElement& w, const IntegralWeight& mu)
{
    check_shape(w, mu);
    IntegralWeight out = mu;
    for (int s = 0; s < mu.embeddings(); ++s) {
        const Permutation& p = w.comps[s];
        for (int a = 1; a <= mu.n; ++a) out.rows[s][p(a) - 1] = mu.rows[s][a - 1];
    }
    return out;
}

IntegralWeight dot_action(const MultiWeylElement& w, const IntegralWeight& lambda)
{
    check_shape(w, lambda);
    const IntegralWeight r = rho(lambda.n).shifted;
    IntegralWeight shifted = lambda;
    for (auto& row : shifted.rows)
        for (int i = 0; i < lambda.n; ++i) row[i] += r.rows[0][i];
    IntegralWeight out = permute(w, shifted);
    for (auto& row : out.rows)
        for (int i = 0; i < lambda.n; ++i) row[i] -= r.rows[0][i];
    return out;
}

bool is_I_dominant(const IntegralWeight& lambda, const SimpleRootSet& I, DominanceSign o)
{
    require(I.rank() == lambda.n, "rank mismatch");
    for (const auto& row : lambda.rows)
        for (int i : I.members()) {
            long long a = row[i - 1], b = row[i];
            if (o == DominanceSign::Plus ? a < b : a > b) return false;
        }
    return true;
}

SimpleRootSet dominance_set(const MultiWeylElement& w, const IntegralWeight& lambda)
{
    require(is_I_dominant(lambda, SimpleRootSet::full(lambda.n), DominanceSign::Plus),
            "weight is not dominant");
    IntegralWeight mu = dot_action(w, lambda);
    SimpleRootSet J(lambda.n);
    for (int i = 1; i < lambda.n; ++i) {
        bool ok = true;
        for (const auto& row : mu.rows) ok = ok && row[i - 1] >= row[i];
        if (ok) J.insert(i);
    }
    return J;
}

} // namespace anst
