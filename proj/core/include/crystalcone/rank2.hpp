#pragma once

#include "crystalcone/linear_form.hpp"

#include <optional>
#include <vector>

namespace crystalcone {

/// P_k from the three-term recursion P_k = lambda*P_{k-1} - P_{k-2},
/// P_0 = 1, P_{-1} = 0. Generating function: sum P_k z^k = 1/(1 - lambda z + z^2).
Int chebyshev_p(Int lambda, int k);

/// The coefficient data of the rank-2 inequality system: the sequence a_l
/// with a_0 = 0, a_1 = 1 and the interleaved recursion
/// a_{2k+2} = c1*a_{2k+1} - a_{2k}, a_{2k+1} = c2*a_{2k} - a_{2k-1},
/// together with the first index where it turns negative.
class Rank2System {
public:
    /// `length` bounds how far the sequences are materialized; it must cover
    /// every l the caller will ask about.
    static Rank2System make(Int c1, Int c2, int length);

    Int c1() const { return c1_; }
    Int c2() const { return c2_; }
    Int lambda() const { return c1_ * c2_ - 2; }

    /// a_l, defined for 0 <= l <= length.
    Int a(int l) const { return a_[static_cast<size_t>(l)]; }
    /// The same sequence with c1 and c2 exchanged.
    Int a_swapped(int l) const { return a_swapped_[static_cast<size_t>(l)]; }

    /// Minimal l with a_{l+1} < 0; empty when the sequence stays nonnegative
    /// (exactly the c1*c2 >= 4 regime), in which case callers must truncate.
    std::optional<int> l_max() const { return l_max_; }

    /// Coordinates forced to zero: everything above l_max. Empty optional
    /// when no coordinate is constrained.
    std::optional<Int> vanish_above() const;

    /// The generating inequalities a_l x_l - a_{l-1} x_{l+1} >= 0 for
    /// 1 <= l < min(l_max, max_len + 1).
    std::vector<LinearForm> generator_forms(int max_len) const;

private:
    Int c1_ = 0;
    Int c2_ = 0;
    std::vector<Int> a_;
    std::vector<Int> a_swapped_;
    std::optional<int> l_max_;
};

} // namespace crystalcone
