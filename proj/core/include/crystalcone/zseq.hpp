#pragma once

#include "crystalcone/cartan.hpp"
#include "crystalcone/index_sequence.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace crystalcone {

/// A finitely supported integer sequence (x_k)_{k>=1}, stored sparsely in
/// canonical form: entries sorted by index, explicit zeros never kept.
class ZSeq {
public:
    ZSeq() = default;

    /// Build from x_1, x_2, ... (trailing zeros allowed).
    static ZSeq from_dense(const std::vector<Int>& values);
    static ZSeq from_dense(std::initializer_list<Int> values);

    Int at(Int k) const;

    /// Copy with x_k replaced by x_k + delta.
    ZSeq plus_at(Int k, Int delta) const;

    /// Largest index in the support, 0 for the zero sequence.
    Int max_support() const { return entries_.empty() ? 0 : entries_.back().first; }

    Int sum() const;
    bool is_zero() const { return entries_.empty(); }
    bool nonnegative() const;

    const std::vector<std::pair<Int, Int>>& entries() const { return entries_; }

    /// Values x_1..x_m for m = max(max_support, min_len).
    std::vector<Int> dense(Int min_len = 0) const;

    bool operator==(const ZSeq& other) const { return entries_ == other.entries_; }
    bool operator!=(const ZSeq& other) const { return !(*this == other); }

    /// "(x1,x2,...,xm)" up to the support bound; "()" for zero.
    std::string to_string() const;

private:
    std::vector<std::pair<Int, Int>> entries_;
};

/// Order used for all enumeration output: by coordinate sum, then
/// lexicographically on the reversed coordinate tuple (..., x_2, x_1).
bool canonical_less(const ZSeq& a, const ZSeq& b);

struct ZSeqHash {
    std::size_t operator()(const ZSeq& x) const;
};

/// A weight -sum_i c_i * alpha_i held by its multiplicities c_i.
/// Multiplicities are nonnegative for sequences generated from zero but may
/// be arbitrary integers in general (tensor factors reach positive weights).
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(int rank) : mult_(static_cast<size_t>(rank), 0) {}

    int rank() const { return static_cast<int>(mult_.size()); }
    Int multiplicity(int i) const { return mult_[static_cast<size_t>(i - 1)]; }
    void add(int i, Int amount) { mult_[static_cast<size_t>(i - 1)] += amount; }

    /// <h_i, wt> = -sum_j a[i][j] * c_j.
    Int pairing(const CartanMatrix& cartan, int i) const;

    WeightVector operator+(const WeightVector& other) const;
    bool operator==(const WeightVector& other) const { return mult_ == other.mult_; }

    std::string to_string() const;

private:
    std::vector<Int> mult_;
};

/// The pair (Cartan matrix, index sequence) that fixes a crystal structure
/// on finitely supported sequences. Immutable once built.
struct CrystalData {
    CartanMatrix cartan;
    IndexSequence iota;

    CrystalData(CartanMatrix c, IndexSequence seq);
};

} // namespace crystalcone
