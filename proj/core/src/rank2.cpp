#include "crystalcone/rank2.hpp"

#include "crystalcone/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystalcone {

Int chebyshev_p(Int lambda, int k) {
    if (k < -1) throw std::out_of_range("chebyshev_p: k must be >= -1");
    Int prev = 0; // P_{-1}
    Int cur = 1;  // P_0
    for (int step = 0; step < k; ++step) {
        const Int next = lambda * cur - prev;
        prev = cur;
        cur = next;
    }
    return k == -1 ? 0 : cur;
}

namespace {

std::vector<Int> coefficient_sequence(Int c1, Int c2, int length) {
    std::vector<Int> a(static_cast<size_t>(length) + 1, 0);
    if (length >= 1) a[1] = 1;
    for (int l = 2; l <= length; ++l) {
        const Int multiplier = (l % 2 == 0) ? c1 : c2; // even steps use c1
        a[static_cast<size_t>(l)] = multiplier * a[static_cast<size_t>(l - 1)] - a[static_cast<size_t>(l - 2)];
    }
    return a;
}

} // namespace

Rank2System Rank2System::make(Int c1, Int c2, int length) {
    const bool both_zero = (c1 == 0 && c2 == 0);
    const bool both_pos = (c1 >= 1 && c2 >= 1);
    if (!both_zero && !both_pos)
        throw InvalidFamilyParams("rank2 requires c1, c2 both zero or both >= 1");
    if (length < 8) length = 8; // the sign change always occurs by a_7 when c1*c2 <= 3

    Rank2System sys;
    sys.c1_ = c1;
    sys.c2_ = c2;
    sys.a_ = coefficient_sequence(c1, c2, length);
    sys.a_swapped_ = coefficient_sequence(c2, c1, length);
    for (int l = 0; l + 1 <= length; ++l) {
        if (sys.a_[static_cast<size_t>(l + 1)] < 0) {
            sys.l_max_ = l;
            break;
        }
    }
    // The sequence stays positive once c1*c2 >= 4, so an absent l_max within
    // the materialized range really means unbounded.
    if (!sys.l_max_ && c1 * c2 <= 3)
        throw std::logic_error("rank2: materialized length too short to locate the sign change");
    return sys;
}

std::optional<Int> Rank2System::vanish_above() const {
    if (!l_max_) return std::nullopt;
    return static_cast<Int>(*l_max_);
}

std::vector<LinearForm> Rank2System::generator_forms(int max_len) const {
    int top = max_len + 1;
    if (l_max_) top = std::min(top, *l_max_);
    if (top > static_cast<int>(a_.size()) - 1)
        throw std::out_of_range("rank2: requested more forms than materialized coefficients");
    std::vector<LinearForm> forms;
    for (int l = 1; l < top; ++l)
        forms.push_back(LinearForm::from_terms({{l, a(l)}, {l + 1, -a(l - 1)}}));
    return forms;
}

} // namespace crystalcone
