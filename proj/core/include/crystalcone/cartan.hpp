#pragma once

#include "crystalcone/fraction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace crystalcone {

/// Thrown when a built-in family is requested with parameters outside its domain.
struct InvalidFamilyParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A symmetrizable generalized Cartan matrix. Indices are 1-based and the
/// constructor enforces: diagonal entries 2, off-diagonal entries <= 0,
/// a[i][j] = 0 exactly when a[j][i] = 0, and the existence of positive
/// rationals d_i with d_i * a[i][j] = d_j * a[j][i].
class CartanMatrix {
public:
    static CartanMatrix from_rows(std::vector<std::vector<Int>> rows);

    /// Type A_n: 2 on the diagonal, -1 when |i-j| = 1.
    static CartanMatrix type_a(int n);

    /// Rank 2 with pairings <h_1,a_2> = -c1 and <h_2,a_1> = -c2.
    /// c1 and c2 must both be zero or both be >= 1.
    static CartanMatrix rank2(Int c1, Int c2);

    /// Affine type with n nodes on a cycle (n >= 3): -1 when |i-j| = 1 or n-1.
    static CartanMatrix affine_a(int n);

    int rank() const { return static_cast<int>(entries_.size()); }

    /// The pairing <h_i, alpha_j>, 1-based.
    Int at(int i, int j) const { return entries_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

    /// A positive symmetrizer (d_1..d_n), found by propagation over the
    /// Coxeter graph. Construction already guarantees one exists.
    const std::vector<Fraction>& symmetrizer() const { return symmetrizer_; }

    bool operator==(const CartanMatrix& other) const { return entries_ == other.entries_; }

    std::string describe() const;

private:
    explicit CartanMatrix(std::vector<std::vector<Int>> rows);
    void validate() const;
    void compute_symmetrizer();

    std::vector<std::vector<Int>> entries_;
    std::vector<Fraction> symmetrizer_;
};

} // namespace crystalcone
