#include "crystalcone/index_sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalcone {

IndexSequence::IndexSequence(std::vector<int> prefix, std::vector<int> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    int max_color = 0;
    for (int i : prefix_) max_color = std::max(max_color, i);
    for (int i : cycle_) max_color = std::max(max_color, i);
    rank_ = max_color;
    validate();
}

IndexSequence IndexSequence::periodic(std::vector<int> order) {
    return IndexSequence({}, std::move(order));
}

IndexSequence IndexSequence::eventually_periodic(std::vector<int> prefix, std::vector<int> cycle) {
    return IndexSequence(std::move(prefix), std::move(cycle));
}

void IndexSequence::validate() const {
    if (cycle_.empty()) throw std::invalid_argument("index sequence: cycle must be nonempty");
    for (int i : prefix_)
        if (i < 1 || i > rank_) throw std::invalid_argument("index sequence: colors must lie in [1,n]");
    std::vector<bool> in_cycle(static_cast<size_t>(rank_) + 1, false);
    for (int i : cycle_) {
        if (i < 1 || i > rank_) throw std::invalid_argument("index sequence: colors must lie in [1,n]");
        in_cycle[static_cast<size_t>(i)] = true;
    }
    for (int i = 1; i <= rank_; ++i)
        if (!in_cycle[static_cast<size_t>(i)])
            throw std::invalid_argument("index sequence: color " + std::to_string(i) +
                                        " does not occur in the cycle");
    if (rank_ == 1) return; // a single color cannot avoid equal neighbors
    Int probe = prefix_length() + 2 * cycle_length();
    for (Int k = 1; k < probe; ++k) {
        if (at(k) == at(k + 1))
            throw std::invalid_argument("index sequence: equal neighbors at positions " + std::to_string(k) +
                                        "," + std::to_string(k + 1));
    }
}

int IndexSequence::at(Int k) const {
    if (k < 1) throw std::out_of_range("index sequence: k must be >= 1");
    const Int p = prefix_length();
    if (k <= p) return prefix_[static_cast<size_t>(k - 1)];
    return cycle_[static_cast<size_t>((k - p - 1) % cycle_length())];
}

Int IndexSequence::next_occ(Int k) const {
    const int color = at(k);
    const Int bound = k + scan_window();
    for (Int j = k + 1; j <= bound; ++j)
        if (at(j) == color) return j;
    throw std::logic_error("index sequence: color must recur within one scan window");
}

Int IndexSequence::prev_occ(Int k) const {
    const int color = at(k);
    for (Int j = k - 1; j >= 1; --j)
        if (at(j) == color) return j;
    return 0;
}

std::vector<Int> IndexSequence::first_occurrences() const {
    std::vector<Int> result;
    std::vector<bool> seen(static_cast<size_t>(rank_) + 1, false);
    int remaining = rank_;
    for (Int k = 1; remaining > 0; ++k) {
        int color = at(k);
        if (!seen[static_cast<size_t>(color)]) {
            seen[static_cast<size_t>(color)] = true;
            result.push_back(k);
            --remaining;
        }
    }
    return result;
}

} // namespace crystalcone
