#pragma once

#include "crystalcone/cone_forms.hpp"
#include "crystalcone/zinf.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crystalcone {

/// Serializes the enumerated graph with per-node coordinates, weight
/// multiplicities, and the epsilon/phi labels of every color. Key order is
/// alphabetical, so re-serialization is byte-stable.
nlohmann::json graph_to_json(const CrystalData& cd, const CrystalGraph& graph, const std::string& family_label,
                             int depth);

/// Rebuilds the bare graph (nodes and colored edges) from its serialization.
CrystalGraph graph_from_json(const nlohmann::json& document);

/// DOT rendering: one quoted node per line named by its coordinate tuple,
/// then one edge per line carrying `label=<color>`.
std::string graph_to_dot(const CrystalGraph& graph);

/// Renders one inequality per line. A positive block size adds the
/// block-indexed reading "x[j;i]" alongside the flat one.
struct FormStyle {
    bool explicit_units = false; // "1*x1" instead of "x1"
    int block = 0;               // 0: flat only; n > 0: append the (j;i) reading
};
std::string form_line(const LinearForm& form, const FormStyle& style);
std::string vanishing_line(Int flat_index, const FormStyle& style);

/// Machine-readable listing: per form the (index, coefficient) pairs plus
/// both renderings.
nlohmann::json forms_to_json(const std::vector<LinearForm>& forms, const std::vector<Int>& vanishing,
                             const FormStyle& style);

} // namespace crystalcone
