#include "crystalcone/verify.hpp"

#include "crystalcone/elements.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace crystalcone {

void VerificationReport::fail(std::string counterexample) {
    status = Status::kFail;
    counterexamples.push_back(std::move(counterexample));
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["parameters"] = parameters;
    switch (status) {
        case Status::kPass: j["status"] = "pass"; break;
        case Status::kFail: j["status"] = "fail"; break;
        case Status::kTruncated: j["status"] = "truncated"; break;
    }
    j["counterexamples"] = counterexamples;
    j["counts"] = counts;
    j["notes"] = notes;
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << name << ": ";
    switch (status) {
        case Status::kPass: out << "pass"; break;
        case Status::kFail: out << "FAIL"; break;
        case Status::kTruncated: out << "truncated"; break;
    }
    out << "\n";
    if (!parameters.empty()) out << "  parameters: " << parameters.dump() << "\n";
    if (!counts.empty()) {
        out << "  counts:";
        for (std::size_t c : counts) out << " " << c;
        out << "\n";
    }
    for (const auto& note : notes) out << "  note: " << note << "\n";
    for (const auto& cx : counterexamples) out << "  counterexample: " << cx << "\n";
    return out.str();
}

std::vector<ZSeq> enumerate_box(Int support_bound, Int max_sum) {
    std::vector<ZSeq> result;
    std::vector<Int> current(static_cast<size_t>(support_bound), 0);
    std::function<void(Int, Int)> visit = [&](Int pos, Int remaining) {
        if (pos > support_bound) {
            result.push_back(ZSeq::from_dense(current));
            return;
        }
        for (Int value = 0; value <= remaining; ++value) {
            current[static_cast<size_t>(pos - 1)] = value;
            visit(pos + 1, remaining - value);
        }
        current[static_cast<size_t>(pos - 1)] = 0;
    };
    visit(1, max_sum);
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

VerificationReport verify_positivity(const CrystalData& cd, Int window, const ClosureOptions& options) {
    VerificationReport report;
    report.name = "positivity";
    report.parameters["window"] = window;
    const PositivityReport scan = check_positivity(cd, window, options);
    if (!scan.holds) {
        for (const auto& [form, k] : scan.witnesses)
            report.fail("negative coefficient at first occurrence x" + std::to_string(k) + " in " +
                        form.to_string());
    } else if (scan.truncated) {
        report.status = VerificationReport::Status::kTruncated;
        report.notes.push_back("closure caps were hit; the scan covers the retained forms only");
    }
    return report;
}

namespace {

std::string render_set_difference(const char* label, const std::vector<ZSeq>& lhs,
                                  const std::unordered_set<ZSeq, ZSeqHash>& rhs, std::size_t limit = 3) {
    std::ostringstream out;
    out << label << ":";
    std::size_t shown = 0;
    for (const ZSeq& x : lhs) {
        if (rhs.count(x)) continue;
        out << " " << x.to_string();
        if (++shown == limit) break;
    }
    return out.str();
}

bool subset_of(const std::vector<ZSeq>& lhs, const std::unordered_set<ZSeq, ZSeqHash>& rhs) {
    for (const ZSeq& x : lhs)
        if (!rhs.count(x)) return false;
    return true;
}

std::unordered_set<ZSeq, ZSeqHash> as_set(const std::vector<ZSeq>& v) {
    return {v.begin(), v.end()};
}

} // namespace

VerificationReport verify_inclusion_chain(const CrystalData& cd, int depth, const ClosureOptions& options) {
    VerificationReport report;
    report.name = "inclusion_chain";
    report.parameters["depth"] = depth;

    const Int stride = cd.iota.scan_window();
    const Int box_bound = static_cast<Int>(depth) * stride;
    const Int window = box_bound + stride;
    report.parameters["window"] = window;

    const CrystalGraph image_graph = enumerate_image(cd, depth);
    const std::vector<ZSeq>& image = image_graph.nodes;
    const std::vector<ZSeq> lowering_closure = enumerate_f_closure(cd, depth);
    const std::vector<ZSeq> full_closure = enumerate_ef_closure(cd, depth);

    const ClosureResult xi = form_closure(cd, window, {}, options);
    const ClosureResult xi_plus = positive_form_closure(cd, window, {}, options);

    std::vector<ZSeq> cone_points;
    std::vector<ZSeq> positive_cone_points;
    for (const ZSeq& x : enumerate_box(box_bound, depth)) {
        if (cone_member(x, xi.forms).member) cone_points.push_back(x);
        if (cone_member(x, xi_plus.forms).member) positive_cone_points.push_back(x);
    }

    report.counts = image_graph.level_sizes;

    const auto positive_cone_set = as_set(positive_cone_points);
    const auto image_set = as_set(image);
    const auto lowering_set = as_set(lowering_closure);
    const auto full_set = as_set(full_closure);

    if (!subset_of(cone_points, positive_cone_set))
        report.fail(render_set_difference("cone points escaping the positive cone", cone_points,
                                          positive_cone_set));
    if (!subset_of(positive_cone_points, image_set))
        report.fail(render_set_difference("positive-cone points not reachable", positive_cone_points,
                                          image_set));
    if (!subset_of(image, lowering_set))
        report.fail(render_set_difference("reachable points outside the positional lowering closure", image,
                                          lowering_set));
    if (!subset_of(lowering_closure, full_set))
        report.fail(render_set_difference("lowering closure escaping the full closure", lowering_closure,
                                          full_set));

    // Positivity scan over the closure already in hand: a negative
    // coefficient at a first-occurrence index disproves it.
    bool positivity_holds = true;
    for (const LinearForm& form : xi.forms) {
        for (Int k : cd.iota.first_occurrences())
            if (form.coeff(k) < 0) { positivity_holds = false; break; }
        if (!positivity_holds) break;
    }
    report.parameters["positivity_holds"] = positivity_holds;
    if (positivity_holds) {
        // Equality of the two extremes forces equality across the chain.
        if (cone_points != full_closure) {
            report.fail(render_set_difference("full closure points outside the cone", full_closure,
                                              as_set(cone_points)));
            report.fail(render_set_difference("cone points outside the full closure", cone_points, full_set));
        }
        for (const ZSeq& x : full_closure)
            if (!x.nonnegative()) report.fail("full closure left the nonnegative orthant at " + x.to_string());
    }
    if ((xi.truncated || xi_plus.truncated) && report.passed()) {
        report.status = VerificationReport::Status::kTruncated;
        report.notes.push_back("form closure caps were hit");
    }
    return report;
}

VerificationReport verify_rank2_theorem(Int c1, Int c2, int depth) {
    VerificationReport report;
    report.name = "rank2_theorem";
    report.parameters["c1"] = c1;
    report.parameters["c2"] = c2;
    report.parameters["depth"] = depth;

    const Rank2System system = Rank2System::make(c1, c2, depth + 4);
    const Int box_bound = system.l_max() ? static_cast<Int>(*system.l_max()) : static_cast<Int>(depth) + 1;
    if (system.l_max()) report.parameters["l_max"] = *system.l_max();

    const CrystalData cd(CartanMatrix::rank2(c1, c2), IndexSequence::periodic({1, 2}));
    const CrystalGraph graph = enumerate_image(cd, depth);
    report.counts = graph.level_sizes;

    const std::vector<LinearForm> forms = system.generator_forms(static_cast<int>(box_bound));
    std::vector<ZSeq> cone_points;
    for (const ZSeq& x : enumerate_box(box_bound, depth))
        if (cone_member(x, forms).member) cone_points.push_back(x);

    if (graph.nodes != cone_points) {
        report.fail(render_set_difference("reachable but outside the cone", graph.nodes, as_set(cone_points)));
        report.fail(render_set_difference("in the cone but unreachable", cone_points, as_set(graph.nodes)));
    }
    return report;
}

VerificationReport verify_an_theorem(int n, int depth) {
    VerificationReport report;
    report.name = "an_theorem";
    report.parameters["n"] = n;
    report.parameters["depth"] = depth;

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
    const CrystalData cd(CartanMatrix::type_a(n), IndexSequence::periodic(order));
    const CrystalGraph graph = enumerate_image(cd, depth);
    report.counts = graph.level_sizes;

    const Int box_bound = static_cast<Int>(n) * n;
    const AnSystem system = an_cone_system(n, box_bound);
    std::vector<ZSeq> cone_points;
    for (const ZSeq& x : enumerate_box(box_bound, depth)) {
        bool vanishing_ok = true;
        for (Int v : system.vanishing)
            if (x.at(v) != 0) { vanishing_ok = false; break; }
        if (vanishing_ok && cone_member(x, system.forms).member) cone_points.push_back(x);
    }

    if (graph.nodes != cone_points) {
        report.fail(render_set_difference("reachable but outside the cone", graph.nodes, as_set(cone_points)));
        report.fail(render_set_difference("in the cone but unreachable", cone_points, as_set(graph.nodes)));
    }
    return report;
}

namespace {

Int admissible_value(const AdmissibleMatrix& matrix, Int k, const ZSeq& x) {
    Int value = 0;
    for (Int j = 1; j <= matrix.support_bound(); ++j)
        for (int i = 1; i <= matrix.n() - 1; ++i) {
            const Int coeff = matrix.c(j, i);
            if (coeff != 0) value += coeff * x.at(affine_flat_index(matrix.n(), j, i, k));
        }
    return value;
}

} // namespace

VerificationReport verify_affine_theorem(int n, int depth, Int support_bound) {
    VerificationReport report;
    report.name = "affine_theorem";
    report.parameters["n"] = n;
    report.parameters["depth"] = depth;
    report.parameters["support_bound"] = support_bound;
    report.notes.push_back("cone side restricted to admissible matrices with support bound " +
                           std::to_string(support_bound) +
                           "; reverse inclusion checked on the box of support <= 2 periods");

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
    const CrystalData cd(CartanMatrix::affine_a(n), IndexSequence::periodic(order));
    const CrystalGraph graph = enumerate_image(cd, depth);
    report.counts = graph.level_sizes;

    const std::vector<AdmissibleMatrix> family = enumerate_admissible(n, support_bound);
    report.parameters["admissible_count"] = family.size();

    // Reachable elements satisfy every admissible inequality.
    for (const ZSeq& x : graph.nodes) {
        for (Int k = 1; k <= x.max_support() && report.counterexamples.size() < 5; ++k) {
            for (const AdmissibleMatrix& matrix : family) {
                if (admissible_value(matrix, k, x) < 0) {
                    report.fail("reachable " + x.to_string() + " violates " + matrix.to_string() +
                                " shifted to x" + std::to_string(k));
                    break;
                }
            }
        }
    }

    // Box points passing every inequality are reachable.
    const Int box_bound = 2 * static_cast<Int>(n);
    std::unordered_set<ZSeq, ZSeqHash> image_set(graph.nodes.begin(), graph.nodes.end());
    for (const ZSeq& x : enumerate_box(box_bound, depth)) {
        bool inside = true;
        for (Int k = 1; k <= box_bound && inside; ++k)
            for (const AdmissibleMatrix& matrix : family) {
                if (admissible_value(matrix, k, x) < 0) { inside = false; break; }
            }
        const bool reachable = image_set.count(x) > 0;
        if (inside && !reachable)
            report.fail("box point " + x.to_string() + " satisfies all inequalities but is unreachable");
        if (!inside && reachable)
            report.fail("reachable box point " + x.to_string() + " violates an inequality");
    }
    return report;
}

VerificationReport verify_cross_iota(const CartanMatrix& cartan, const IndexSequence& iota1,
                                     const IndexSequence& iota2, int depth) {
    VerificationReport report;
    report.name = "cross_iota";
    report.parameters["depth"] = depth;

    const CrystalData cd1(cartan, iota1);
    const CrystalData cd2(cartan, iota2);
    const CrystalGraph g1 = enumerate_image(cd1, depth);
    const CrystalGraph g2 = enumerate_image(cd2, depth);

    report.counts = g1.level_sizes;
    if (g1.level_sizes != g2.level_sizes) {
        report.fail("per-depth cardinalities differ between the two index sequences");
        return report;
    }

    std::unordered_map<ZSeq, int, ZSeqHash> index2;
    for (size_t pos = 0; pos < g2.nodes.size(); ++pos) index2.emplace(g2.nodes[pos], static_cast<int>(pos));

    // Follow lowering paths from the root; edges sorted by source make every
    // source already mapped when reached.
    std::vector<int> vertex_map(g1.nodes.size(), -1);
    vertex_map[0] = 0; // the zero sequence is first in canonical order on both sides
    for (const auto& edge : g1.edges) {
        const int source_image = vertex_map[static_cast<size_t>(edge.from)];
        if (source_image < 0) {
            report.fail("edge source visited before being mapped");
            return report;
        }
        const ZSeq target2 = lower(cd2, g2.nodes[static_cast<size_t>(source_image)], edge.color);
        auto found = index2.find(target2);
        if (found == index2.end()) {
            report.fail("path-following left the enumerated fragment at " + target2.to_string());
            continue;
        }
        int& slot = vertex_map[static_cast<size_t>(edge.to)];
        if (slot == -1) slot = found->second;
        else if (slot != found->second)
            report.fail("path-following map is ill-defined at " + g1.nodes[static_cast<size_t>(edge.to)].to_string());
    }

    std::unordered_set<int> used;
    for (int image : vertex_map) {
        if (image < 0) { report.fail("map does not cover the fragment"); return report; }
        if (!used.insert(image).second) { report.fail("map is not injective"); return report; }
    }

    const MorphismReport forward =
        check_strict_morphism(label_fragment(cd1, g1), label_fragment(cd2, g2), vertex_map);
    for (const auto& violation : forward.violations) report.fail("forward: " + violation);

    std::vector<int> inverse(g2.nodes.size(), -1);
    for (size_t v = 0; v < vertex_map.size(); ++v) inverse[static_cast<size_t>(vertex_map[v])] = static_cast<int>(v);
    const MorphismReport backward =
        check_strict_morphism(label_fragment(cd2, g2), label_fragment(cd1, g1), inverse);
    for (const auto& violation : backward.violations) report.fail("backward: " + violation);
    return report;
}

VerificationReport verify_admissible_closure(int n, Int k, Int window, Int support_bound) {
    VerificationReport report;
    report.name = "admissible_closure";
    report.parameters["n"] = n;
    report.parameters["k"] = k;
    report.parameters["window"] = window;
    report.parameters["support_bound"] = support_bound;

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
    const CrystalData cd(CartanMatrix::affine_a(n), IndexSequence::periodic(order));

    const std::vector<AdmissibleMatrix> direct = enumerate_admissible(n, support_bound);
    const std::vector<AdmissibleMatrix> by_moves = admissible_by_moves(n, support_bound);
    if (direct != by_moves)
        report.fail("direct enumeration and the move closure disagree (" + std::to_string(direct.size()) +
                    " vs " + std::to_string(by_moves.size()) + " matrices)");

    const ClosureResult closure = form_closure(cd, window, {k});

    const Int admissible_reach = k - 1 + support_bound * static_cast<Int>(n - 1);
    const Int comparable = std::min(window - cd.iota.scan_window(), admissible_reach);
    report.parameters["comparable_support"] = comparable;

    std::vector<LinearForm> from_matrices;
    for (const AdmissibleMatrix& matrix : direct) {
        LinearForm form = admissible_form(matrix, k);
        if (form.max_support() <= comparable) from_matrices.push_back(std::move(form));
    }
    std::sort(from_matrices.begin(), from_matrices.end());
    from_matrices.erase(std::unique(from_matrices.begin(), from_matrices.end()), from_matrices.end());

    std::vector<LinearForm> from_closure;
    for (const LinearForm& form : closure.forms)
        if (form.max_support() <= comparable) from_closure.push_back(form);

    if (from_matrices != from_closure) {
        report.fail("windowed closure and admissible family differ on the comparable region (" +
                    std::to_string(from_closure.size()) + " vs " + std::to_string(from_matrices.size()) +
                    " forms)");
        for (const LinearForm& f : from_closure)
            if (!std::binary_search(from_matrices.begin(), from_matrices.end(), f))
                report.counterexamples.push_back("closure only: " + f.to_string());
        for (const LinearForm& f : from_matrices)
            if (!std::binary_search(from_closure.begin(), from_closure.end(), f))
                report.counterexamples.push_back("admissible only: " + f.to_string());
    }

    if (report.passed() && (closure.truncated || comparable < admissible_reach)) {
        report.status = VerificationReport::Status::kTruncated;
        report.notes.push_back("window too small to compare the full admissible family; no failure implied");
    }
    return report;
}

} // namespace crystalcone
