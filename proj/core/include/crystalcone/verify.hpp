#pragma once

#include "crystalcone/affine.hpp"
#include "crystalcone/cone_forms.hpp"
#include "crystalcone/rank2.hpp"
#include "crystalcone/type_a.hpp"
#include "crystalcone/zinf.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace crystalcone {

struct VerificationReport {
    enum class Status { kPass, kFail, kTruncated };

    std::string name;
    nlohmann::json parameters = nlohmann::json::object();
    Status status = Status::kPass;
    std::vector<std::string> counterexamples; // nonempty exactly when failing
    std::vector<std::size_t> counts;          // per-depth cardinalities when meaningful
    std::vector<std::string> notes;           // stated assumptions, cap reports

    bool passed() const { return status == Status::kPass; }
    void fail(std::string counterexample);

    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// All nonnegative sequences supported in [1, support_bound] with coordinate
/// sum at most max_sum, in canonical order.
std::vector<ZSeq> enumerate_box(Int support_bound, Int max_sum);

/// First-occurrence positivity of the windowed closure.
VerificationReport verify_positivity(const CrystalData& cd, Int window, const ClosureOptions& options = {});

/// Materializes the five sets (cone points, positive-cone points, the
/// lowering-search image, and the two positional closures) restricted to the
/// given depth, checks the inclusion chain, and checks that all five agree
/// whenever the positivity scan passes.
VerificationReport verify_inclusion_chain(const CrystalData& cd, int depth, const ClosureOptions& options = {});

/// Lowering-search image to the given depth against the closed-form cone.
VerificationReport verify_rank2_theorem(Int c1, Int c2, int depth);
VerificationReport verify_an_theorem(int n, int depth);

/// Affine comparison: every enumerated element satisfies every admissible
/// form with the given support bound, and every box point satisfying them is
/// reachable. The box restriction and support bound are recorded as stated
/// assumptions in the report.
VerificationReport verify_affine_theorem(int n, int depth, Int support_bound);

/// Builds both colored graphs, constructs the unique root-preserving map by
/// following lowering edges, and checks it is a label-preserving isomorphism.
VerificationReport verify_cross_iota(const CartanMatrix& cartan, const IndexSequence& iota1,
                                     const IndexSequence& iota2, int depth);

/// Compares the windowed closure seeded at x_k against the admissible family
/// on the region where both generators are complete, and checks the two
/// admissible-generation strategies against each other.
VerificationReport verify_admissible_closure(int n, Int k, Int window, Int support_bound);

} // namespace crystalcone
