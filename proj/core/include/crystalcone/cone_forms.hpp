#pragma once

#include "crystalcone/linear_form.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace crystalcone {

/// Thrown when a closure is asked for seeds outside its window.
struct WindowTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// beta_k = x_k + sum_{k < j < k^(+)} <h_{i_k}, alpha_{i_j}> x_j + x_{k^(+)};
/// beta_0 is the zero form.
LinearForm beta_form(const CrystalData& cd, Int k);

/// sigma_k truncated to coefficients of x_k..x_window (test support; the full
/// form has infinite support).
LinearForm sigma_form(const CrystalData& cd, Int k, Int window);

/// The piecewise-linear transformation on forms:
///   phi - phi_k * beta_k        when phi_k > 0,
///   phi - phi_k * beta_{k^(-)}  when phi_k <= 0 (beta_0 = 0, so first
///                               occurrences leave phi unchanged).
/// Idempotent in k.
LinearForm s_transform(const CrystalData& cd, const LinearForm& form, Int k);

struct ClosureOptions {
    Int max_coeff = 1'000'000;
    std::size_t max_forms = 200'000;
    bool positive_only = false; // restrict to transformations with phi_k > 0
};

struct ClosureResult {
    std::vector<LinearForm> forms; // sorted canonically
    bool truncated = false;        // a cap was hit; the set may be incomplete
    std::size_t dropped_by_coeff = 0;
};

/// Fixpoint of all transformations whose image stays supported in [1, window],
/// starting from the coordinate forms x_j for j in `seeds` (all of x_1..x_window
/// when empty). Forms escaping the window are discarded by contract; caps are
/// reported through `truncated`.
ClosureResult form_closure(const CrystalData& cd, Int window, std::vector<Int> seeds = {},
                           const ClosureOptions& options = {});

/// Same closure restricted to positive actions (phi_k > 0).
ClosureResult positive_form_closure(const CrystalData& cd, Int window, std::vector<Int> seeds = {},
                                    ClosureOptions options = {});

struct PositivityReport {
    bool holds = true;
    bool truncated = false;
    /// Violating (form, first-occurrence index) pairs.
    std::vector<std::pair<LinearForm, Int>> witnesses;
};

/// Scans the windowed closure for a negative coefficient at a
/// first-occurrence index.
PositivityReport check_positivity(const CrystalData& cd, Int window, const ClosureOptions& options = {});

struct MembershipResult {
    bool member = false;
    std::optional<LinearForm> violated; // a witness when member is false
};

/// x lies in the cone when it is coordinatewise nonnegative and every
/// supplied form is nonnegative on it. With a windowed closure this is a
/// necessary condition only for x supported in [1, window - scan_window].
MembershipResult cone_member(const ZSeq& x, const std::vector<LinearForm>& forms);

/// Positions of forms whose removal leaves the solution set over the sample
/// box unchanged. An observation, not a certificate: a form redundant on the
/// box may still cut the cone further out.
std::vector<std::size_t> observed_redundant_forms(const std::vector<LinearForm>& forms,
                                                  const std::vector<ZSeq>& box);

} // namespace crystalcone
