#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anst/cosets.hpp"
#include "anst/weyl.hpp"

namespace anst {

// Finitely supported integer combination of labels. Zero coefficients are never stored.
template <class Label>
class GrothVector {
public:
    void add(const Label& l, long long c)
    {
        if (c == 0) return;
        auto it = terms_.find(l);
        if (it == terms_.end()) {
            terms_.emplace(l, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    GrothVector& operator+=(const GrothVector& o)
    {
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }

    GrothVector& operator-=(const GrothVector& o)
    {
        for (const auto& [l, c] : o.terms_) add(l, -c);
        return *this;
    }

    GrothVector scaled(long long s) const
    {
        GrothVector out;
        for (const auto& [l, c] : terms_) out.add(l, s * c);
        return out;
    }

    long long coeff(const Label& l) const
    {
        auto it = terms_.find(l);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Label, long long>& terms() const { return terms_; }
    bool operator==(const GrothVector&) const = default;

private:
    std::map<Label, long long> terms_;
};

struct ConstituentLabel {
    MultiWeylElement w;
    BlockSet J;
    BlockSet S;
};

// Key used in Grothendieck-group bookkeeping: (w, mask of J).
using LabelKey = std::pair<MultiWeylElement, std::uint32_t>;

// d_{K',K} = (-1)^i when K' = K ∪ {k_i r} with k_1 < ... < k_l the members of K'; else 0.
int tits_sign(const BlockSet& Kprime, const BlockSet& K);

// The Tits complex C_{I,j} = ⊕_{K ⊇ I, |K \ I| = j} of formal summands e_K.
class FormalComplex {
public:
    using Chain = GrothVector<std::uint32_t>;

    explicit FormalComplex(const BlockSet& I);

    int top_degree() const { return static_cast<int>(terms_.size()) - 1; }
    const Chain& term(int j) const { return terms_.at(j); }
    const BlockSet& base() const { return base_; }

    // d(e_{K'}) = sum of d_{K',K} e_K over K ⊇ I with |K' \ K| = 1.
    Chain differential(const Chain& c) const;

    // Sum_j (-1)^j [C_j], each summand K replaced by realize(K).
    template <class Label>
    GrothVector<Label> euler(const std::function<GrothVector<Label>(const BlockSet&)>& realize) const
    {
        GrothVector<Label> out;
        for (int j = 0; j <= top_degree(); ++j)
            for (const auto& [mask, c] : terms_[j].terms()) {
                GrothVector<Label> v = realize(BlockSet(base_.r(), base_.k(), mask));
                out += v.scaled((j % 2 ? -1 : 1) * c);
            }
        return out;
    }

private:
    BlockSet base_;
    std::vector<Chain> terms_;
};

// True when d∘d vanishes on every summand of the Tits complex of every I, for this k.
bool tits_differential_squares_to_zero(int r, int k);

// Checks S ⊆ J ⊆ blocks of I(w), and that w.0 is dominant for Delta_n^k ∪ S.
void check_label(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S);
bool is_admissible_label(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S);

// Sum over w' in W_{Delta_n^k ∪ J} whose support blocks T satisfy S ∪ T = J,
// of (-1)^{l(w') + |J \ S|} m(w', w).
long long steinberg_multiplicity(const MultiWeylElement& w, const BlockSet& J, const BlockSet& S);

// Sum_{S ⊆ K ⊆ J} (-1)^{|K \ S|} [M_K : L(w)].
long long steinberg_multiplicity_oracle(const MultiWeylElement& w, const BlockSet& J,
                                        const BlockSet& S);

struct Constituent {
    ConstituentLabel label;
    long long m = 0;
};

// All admissible (w, J) with w dominant for Delta_n^k ∪ S and l(w) <= max_len.
// max_len < 0 means the full range, which requires n <= 6.
std::vector<Constituent> enumerate_constituents(const BlockSet& S, int d_L, int max_len = -1,
                                                int threads = 1);

// Every admissible (w, J, S) for the given shape, in (length, lex, J, S) order.
std::vector<ConstituentLabel> admissible_labels(int r, int k, int d_L);

bool smooth_tits_euler_check(const BlockSet& I);
bool analytic_tits_euler_check(const BlockSet& S, int d_L, int max_len = -1);

} // namespace anst
