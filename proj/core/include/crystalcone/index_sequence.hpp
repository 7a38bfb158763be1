#pragma once

#include "crystalcone/fraction.hpp"

#include <vector>

namespace crystalcone {

/// The driving sequence (i_k)_{k>=1} of colors from [1,n]. Neighboring
/// entries differ and every color occurs infinitely often; both conditions
/// are checked on the finite data (prefix, cycle, and the wrap seam).
/// Exposed as a total function k -> i_k plus window bounds, never as a
/// materialized list.
class IndexSequence {
public:
    /// Cycle through a fixed ordering of [1..n] forever.
    static IndexSequence periodic(std::vector<int> order);

    /// Play a finite prefix, then cycle.
    static IndexSequence eventually_periodic(std::vector<int> prefix, std::vector<int> cycle);

    int rank() const { return rank_; }

    /// i_k for k >= 1.
    int at(Int k) const;

    /// Minimal j > k with the same color as k.
    Int next_occ(Int k) const;

    /// Maximal j < k with the same color as k, or 0 when k is the first
    /// occurrence of its color.
    Int prev_occ(Int k) const;

    bool first_occurrence(Int k) const { return prev_occ(k) == 0; }

    Int cycle_length() const { return static_cast<Int>(cycle_.size()); }
    Int prefix_length() const { return static_cast<Int>(prefix_.size()); }

    /// A window W such that every color occurs in (m, m+W] for every m >= 0.
    Int scan_window() const { return prefix_length() + cycle_length(); }

    /// All first-occurrence positions (the k with prev_occ(k) == 0).
    std::vector<Int> first_occurrences() const;

    bool is_periodic() const { return prefix_.empty(); }
    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& cycle() const { return cycle_; }

    bool operator==(const IndexSequence& other) const {
        return prefix_ == other.prefix_ && cycle_ == other.cycle_;
    }

private:
    IndexSequence(std::vector<int> prefix, std::vector<int> cycle);
    void validate() const;

    std::vector<int> prefix_;
    std::vector<int> cycle_;
    int rank_ = 0;
};

} // namespace crystalcone
