#pragma once

#include "crystalcone/linear_form.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crystalcone {

/// Double indices (j;i), j >= 1, i in [1,n-1], flattened with stride n-1 and
/// shifted so (1;1) lands on k.
Int affine_flat_index(int n, Int j, int i, Int k);

/// A doubly indexed integer family C = (c_{j;i}) stored through its partial
/// sums s_{j;i} = c_{1;i} + ... + c_{j;i}, which satisfy
///   s_{j;i} >= 0,
///   s_{j;i} = [i == 1] for all large j,
///   lexicographic prefix sums bounded by j, exact for large j,
///   every positive s followed by a positive s within one stride.
/// Canonical form stores the rows before the stable tail.
class AdmissibleMatrix {
public:
    /// The matrix whose attached form is the coordinate form x_k.
    static AdmissibleMatrix seed(int n);

    /// Builds from explicit partial-sum rows (validated).
    static AdmissibleMatrix from_partial_sums(int n, std::vector<std::vector<Int>> rows);

    int n() const { return n_; }

    Int s(Int j, int i) const;
    Int c(Int j, int i) const;

    /// Minimal J such that c_{j;i} = 0 for all j > J.
    Int support_bound() const;

    /// Number of explicitly stored rows (the tail of ones starts right after).
    Int stored_rows() const { return static_cast<Int>(rows_.size()); }

    bool operator==(const AdmissibleMatrix& other) const { return n_ == other.n_ && rows_ == other.rows_; }
    bool operator<(const AdmissibleMatrix& other) const { return rows_ < other.rows_; }

    std::string to_string() const;

private:
    AdmissibleMatrix(int n, std::vector<std::vector<Int>> rows);
    void trim();

    int n_;
    std::vector<std::vector<Int>> rows_; // rows_[j-1][i-1] = s_{j;i}
};

struct AdmissibilityResult {
    bool admissible = true;
    std::string violation; // empty when admissible
};

/// Checks the four partial-sum conditions for a raw candidate given by its
/// finitely supported entries c_{j;i}; tails are checked symbolically.
AdmissibilityResult check_admissible(int n, const std::map<std::pair<Int, int>, Int>& c_entries);

/// The linear form sum_{j;i} c_{j;i} x_{(j;i)[k]}.
LinearForm admissible_form(const AdmissibleMatrix& matrix, Int k);

enum class MoveKind {
    kShiftRight, // acts at a cell with c_{j;i} > 0: moves the column sum one step right
    kShiftLeft,  // acts at a cell with c_{j;i} < 0: absorbs it one step left
};

/// One transformation step on the partial sums. Returns the matrix unchanged
/// when c_{j;i} = 0 (the identity action) and nullopt when the requested kind
/// does not match the sign of c_{j;i}, or a left shift at column 1 is
/// requested with j <= 2.
std::optional<AdmissibleMatrix> affine_move(const AdmissibleMatrix& matrix, MoveKind kind, Int j, int i);

/// Dispatches on the sign of c_{j;i}; the identity on zero cells.
AdmissibleMatrix s_move(const AdmissibleMatrix& matrix, Int j, int i);

/// All admissible matrices with support bound <= J, by direct enumeration of
/// the partial-sum arrays.
std::vector<AdmissibleMatrix> enumerate_admissible(int n, Int support_bound,
                                                   std::size_t max_count = 2'000'000);

/// The same family generated as the right-shift closure of the seed matrix,
/// restricted to the support bound.
std::vector<AdmissibleMatrix> admissible_by_moves(int n, Int support_bound,
                                                  std::size_t max_count = 2'000'000);

/// Coefficients d_{j;i} >= 0 with finite support expressing the attached form
/// as x_k minus a nonnegative combination of the local forms:
/// d_{j;i} = j - sum_{(j';i') <= (j;i)} s_{j';i'}.
std::vector<std::pair<std::pair<Int, int>, Int>> beta_decomposition(const AdmissibleMatrix& matrix);

} // namespace crystalcone
