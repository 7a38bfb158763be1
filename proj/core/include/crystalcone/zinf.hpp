#pragma once

#include "crystalcone/zseq.hpp"

#include <optional>
#include <vector>

namespace crystalcone {

/// sigma_k(x) = x_k + sum_{j>k} <h_{i_k}, alpha_{i_j}> x_j. Zero whenever the
/// support of x lies below k.
Int sigma(const CrystalData& cd, const ZSeq& x, Int k);

/// sigma^{(i)}(x) together with a description of the argmax set M^{(i)}.
/// The set is finite exactly when the value is positive; otherwise min_index
/// is still the least element (the tie at value zero extends to infinity).
struct ColorMax {
    Int value = 0;
    bool finite = false;
    Int min_index = 0;
    std::optional<Int> max_index; // present iff finite
};
ColorMax color_max(const CrystalData& cd, const ZSeq& x, int i);

/// epsilon_i(x) = sigma^{(i)}(x) >= 0.
Int epsilon(const CrystalData& cd, const ZSeq& x, int i);

WeightVector weight(const CrystalData& cd, const ZSeq& x);

/// phi_i(x) = <h_i, wt(x)> + epsilon_i(x).
Int phi(const CrystalData& cd, const ZSeq& x, int i);

/// The lowering operator: adds 1 at min M^{(i)}(x). Total on all sequences.
ZSeq lower(const CrystalData& cd, const ZSeq& x, int i);

/// The raising operator: subtracts 1 at max M^{(i)}(x) when sigma^{(i)} > 0,
/// nullopt otherwise (the crystal's formal zero).
std::optional<ZSeq> raise(const CrystalData& cd, const ZSeq& x, int i);

/// beta_k(x) = sigma_k(x) - sigma_{k^(+)}(x); beta_0 = 0.
Int beta_value(const CrystalData& cd, const ZSeq& x, Int k);

/// Positional lowering: adds 1 at k when prev_occ(k) = 0 or
/// beta_{prev_occ(k)}(x) < 0, nullopt otherwise.
std::optional<ZSeq> lower_at(const CrystalData& cd, const ZSeq& x, Int k);

/// Positional raising: subtracts 1 at k when beta_k(x) > 0, nullopt otherwise.
std::optional<ZSeq> raise_at(const CrystalData& cd, const ZSeq& x, Int k);

/// Colored graph produced by the lowering-operator search from zero.
struct CrystalGraph {
    std::vector<ZSeq> nodes; // canonical order
    struct Edge {
        int from = 0;
        int color = 0;
        int to = 0;
        bool operator==(const Edge&) const = default;
    };
    std::vector<Edge> edges;           // sorted by (from, color)
    std::vector<std::size_t> level_sizes; // nodes per coordinate-sum level
};

/// All sequences reachable from zero by at most `depth` lowering operators,
/// with the colored edges between them.
CrystalGraph enumerate_image(const CrystalData& cd, int depth);

/// Closure of {0} under positional lowering (at most `depth` applications).
std::vector<ZSeq> enumerate_f_closure(const CrystalData& cd, int depth);

/// Closure of {0} under positional raising and lowering combined
/// (at most `depth` applications in total).
std::vector<ZSeq> enumerate_ef_closure(const CrystalData& cd, int depth);

} // namespace crystalcone
