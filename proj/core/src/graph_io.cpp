#include "crystalcone/graph_io.hpp"

#include <sstream>

namespace crystalcone {

nlohmann::json graph_to_json(const CrystalData& cd, const CrystalGraph& graph, const std::string& family_label,
                             int depth) {
    nlohmann::json doc;
    doc["depth"] = depth;
    doc["family"] = family_label;

    nlohmann::json cartan = nlohmann::json::array();
    for (int i = 1; i <= cd.cartan.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= cd.cartan.rank(); ++j) row.push_back(cd.cartan.at(i, j));
        cartan.push_back(std::move(row));
    }
    doc["cartan"] = std::move(cartan);

    nlohmann::json iota;
    if (cd.iota.is_periodic()) {
        iota["periodic"] = cd.iota.cycle();
    } else {
        iota["prefix"] = cd.iota.prefix();
        iota["cycle"] = cd.iota.cycle();
    }
    doc["iota"] = std::move(iota);

    nlohmann::json nodes = nlohmann::json::array();
    for (size_t id = 0; id < graph.nodes.size(); ++id) {
        const ZSeq& x = graph.nodes[id];
        nlohmann::json node;
        node["id"] = id;
        node["x"] = x.dense();
        node["sum"] = x.sum();
        const WeightVector wt = weight(cd, x);
        nlohmann::json mult = nlohmann::json::array();
        nlohmann::json eps = nlohmann::json::array();
        nlohmann::json phi_values = nlohmann::json::array();
        for (int i = 1; i <= cd.cartan.rank(); ++i) {
            mult.push_back(wt.multiplicity(i));
            eps.push_back(epsilon(cd, x, i));
            phi_values.push_back(phi(cd, x, i));
        }
        node["wt"] = std::move(mult);
        node["eps"] = std::move(eps);
        node["phi"] = std::move(phi_values);
        nodes.push_back(std::move(node));
    }
    doc["nodes"] = std::move(nodes);

    nlohmann::json edges = nlohmann::json::array();
    for (const auto& edge : graph.edges) {
        nlohmann::json e;
        e["color"] = edge.color;
        e["from"] = edge.from;
        e["to"] = edge.to;
        edges.push_back(std::move(e));
    }
    doc["edges"] = std::move(edges);

    nlohmann::json levels = nlohmann::json::array();
    for (std::size_t size : graph.level_sizes) levels.push_back(size);
    doc["levels"] = std::move(levels);
    return doc;
}

CrystalGraph graph_from_json(const nlohmann::json& document) {
    CrystalGraph graph;
    for (const auto& node : document.at("nodes")) {
        std::vector<Int> values;
        for (const auto& v : node.at("x")) values.push_back(v.get<Int>());
        graph.nodes.push_back(ZSeq::from_dense(values));
    }
    for (const auto& edge : document.at("edges"))
        graph.edges.push_back({edge.at("from").get<int>(), edge.at("color").get<int>(), edge.at("to").get<int>()});
    for (const auto& level : document.at("levels")) graph.level_sizes.push_back(level.get<std::size_t>());
    return graph;
}

std::string graph_to_dot(const CrystalGraph& graph) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (const ZSeq& x : graph.nodes) out << "  \"" << x.to_string() << "\";\n";
    for (const auto& edge : graph.edges) {
        out << "  \"" << graph.nodes[static_cast<size_t>(edge.from)].to_string() << "\" -> \""
            << graph.nodes[static_cast<size_t>(edge.to)].to_string() << "\" [label=" << edge.color << "];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string block_reading(const LinearForm& form, int block) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : form.terms()) {
        const Int mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag << "*";
        const Int j = (k - 1) / block + 1;
        const Int i = (k - 1) % block + 1;
        out << "x[" << j << ";" << i << "]";
    }
    out << " >= 0";
    return out.str();
}

} // namespace

std::string form_line(const LinearForm& form, const FormStyle& style) {
    std::string line =
        form.to_string(style.explicit_units ? LinearForm::Style::kExplicit : LinearForm::Style::kElideUnits);
    if (style.block > 0) line += "\t[" + block_reading(form, style.block) + "]";
    return line;
}

std::string vanishing_line(Int flat_index, const FormStyle& style) {
    std::string line = "x" + std::to_string(flat_index) + " = 0";
    if (style.block > 0) {
        const Int j = (flat_index - 1) / style.block + 1;
        const Int i = (flat_index - 1) % style.block + 1;
        line += "\t[x[" + std::to_string(j) + ";" + std::to_string(i) + "] = 0]";
    }
    return line;
}

nlohmann::json forms_to_json(const std::vector<LinearForm>& forms, const std::vector<Int>& vanishing,
                             const FormStyle& style) {
    nlohmann::json doc;
    nlohmann::json list = nlohmann::json::array();
    for (const LinearForm& form : forms) {
        nlohmann::json entry;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [k, c] : form.terms()) terms.push_back({k, c});
        entry["terms"] = std::move(terms);
        entry["text"] =
            form.to_string(style.explicit_units ? LinearForm::Style::kExplicit : LinearForm::Style::kElideUnits);
        if (style.block > 0) entry["text_block"] = block_reading(form, style.block);
        list.push_back(std::move(entry));
    }
    doc["forms"] = std::move(list);
    doc["vanishing"] = vanishing;
    return doc;
}

} // namespace crystalcone
