#include "crystalcone/elements.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace crystalcone {

Elem Elem::b_point(int rank, int i, Int x) {
    if (i < 1 || i > rank) throw std::invalid_argument("b_point: color out of range");
    return Elem(rank, BPoint{i, x});
}

Elem Elem::seq_point(std::shared_ptr<const CrystalData> data, ZSeq x) {
    if (!data) throw std::invalid_argument("seq_point: null crystal data");
    const int rank = data->cartan.rank();
    return Elem(rank, SeqPoint{std::move(data), std::move(x)});
}

Elem Elem::tensor(Elem left, Elem right) {
    if (left.rank() != right.rank()) throw std::invalid_argument("tensor: rank mismatch");
    const int rank = left.rank();
    return Elem(rank, Tensor{std::make_shared<Elem>(std::move(left)), std::make_shared<Elem>(std::move(right))});
}

bool Elem::is_tensor() const { return std::holds_alternative<Tensor>(node_); }

const Elem& Elem::left() const { return *std::get<Tensor>(node_).lhs; }
const Elem& Elem::right() const { return *std::get<Tensor>(node_).rhs; }

WeightVector Elem::wt(const CartanMatrix& cartan) const {
    if (const auto* b = std::get_if<BPoint>(&node_)) {
        WeightVector w(rank_);
        w.add(b->color, -b->x); // wt((x)_i) = x * alpha_i
        return w;
    }
    if (const auto* s = std::get_if<SeqPoint>(&node_)) return weight(*s->data, s->x);
    const auto& t = std::get<Tensor>(node_);
    return t.lhs->wt(cartan) + t.rhs->wt(cartan);
}

ExtInt Elem::eps(const CartanMatrix& cartan, int i) const {
    if (const auto* b = std::get_if<BPoint>(&node_))
        return b->color == i ? ExtInt(-b->x) : ExtInt::minus_infinity();
    if (const auto* s = std::get_if<SeqPoint>(&node_)) return ExtInt(epsilon(*s->data, s->x, i));
    const auto& t = std::get<Tensor>(node_);
    return tensor_eps(cartan, *t.lhs, *t.rhs, i);
}

ExtInt Elem::phi_val(const CartanMatrix& cartan, int i) const {
    if (const auto* b = std::get_if<BPoint>(&node_))
        return b->color == i ? ExtInt(b->x) : ExtInt::minus_infinity();
    if (const auto* s = std::get_if<SeqPoint>(&node_)) return ExtInt(phi(*s->data, s->x, i));
    const auto& t = std::get<Tensor>(node_);
    return tensor_phi(cartan, *t.lhs, *t.rhs, i);
}

std::optional<Elem> Elem::e(const CartanMatrix& cartan, int i) const {
    if (const auto* b = std::get_if<BPoint>(&node_)) {
        if (b->color != i) return std::nullopt;
        return b_point(rank_, i, b->x + 1);
    }
    if (const auto* s = std::get_if<SeqPoint>(&node_)) {
        auto y = raise(*s->data, s->x, i);
        if (!y) return std::nullopt;
        return seq_point(s->data, std::move(*y));
    }
    const auto& t = std::get<Tensor>(node_);
    return tensor_e(cartan, *t.lhs, *t.rhs, i);
}

std::optional<Elem> Elem::f(const CartanMatrix& cartan, int i) const {
    if (const auto* b = std::get_if<BPoint>(&node_)) {
        if (b->color != i) return std::nullopt;
        return b_point(rank_, i, b->x - 1);
    }
    if (const auto* s = std::get_if<SeqPoint>(&node_)) return seq_point(s->data, lower(*s->data, s->x, i));
    const auto& t = std::get<Tensor>(node_);
    return tensor_f(cartan, *t.lhs, *t.rhs, i);
}

bool Elem::operator==(const Elem& other) const {
    if (node_.index() != other.node_.index()) return false;
    if (const auto* b = std::get_if<BPoint>(&node_)) {
        const auto& ob = std::get<BPoint>(other.node_);
        return b->color == ob.color && b->x == ob.x;
    }
    if (const auto* s = std::get_if<SeqPoint>(&node_)) {
        const auto& os = std::get<SeqPoint>(other.node_);
        return s->x == os.x && s->data->cartan == os.data->cartan && s->data->iota == os.data->iota;
    }
    const auto& t = std::get<Tensor>(node_);
    const auto& ot = std::get<Tensor>(other.node_);
    return *t.lhs == *ot.lhs && *t.rhs == *ot.rhs;
}

bool Elem::operator<(const Elem& other) const { return to_string() < other.to_string(); }

std::string Elem::to_string() const {
    if (const auto* b = std::get_if<BPoint>(&node_)) {
        std::ostringstream out;
        out << "(" << b->x << ")_" << b->color;
        return out.str();
    }
    if (const auto* s = std::get_if<SeqPoint>(&node_)) return "Z" + s->x.to_string();
    const auto& t = std::get<Tensor>(node_);
    return "[" + t.lhs->to_string() + " (x) " + t.rhs->to_string() + "]";
}

ExtInt tensor_eps(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i) {
    const Int shift = b1.wt(cartan).pairing(cartan, i);
    return max(b1.eps(cartan, i), b2.eps(cartan, i) - shift);
}

ExtInt tensor_phi(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i) {
    const Int shift = b2.wt(cartan).pairing(cartan, i);
    return max(b2.phi_val(cartan, i), b1.phi_val(cartan, i) + shift);
}

std::optional<Elem> tensor_e(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i) {
    if (b1.phi_val(cartan, i) >= b2.eps(cartan, i)) {
        auto lhs = b1.e(cartan, i);
        if (!lhs) return std::nullopt;
        return Elem::tensor(std::move(*lhs), b2);
    }
    auto rhs = b2.e(cartan, i);
    if (!rhs) return std::nullopt;
    return Elem::tensor(b1, std::move(*rhs));
}

std::optional<Elem> tensor_f(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i) {
    if (b1.phi_val(cartan, i) > b2.eps(cartan, i)) {
        auto lhs = b1.f(cartan, i);
        if (!lhs) return std::nullopt;
        return Elem::tensor(std::move(*lhs), b2);
    }
    auto rhs = b2.f(cartan, i);
    if (!rhs) return std::nullopt;
    return Elem::tensor(b1, std::move(*rhs));
}

LabeledFragment label_fragment(const CrystalData& cd, const CrystalGraph& graph) {
    LabeledFragment fragment;
    const int n = cd.cartan.rank();
    fragment.nodes.reserve(graph.nodes.size());
    for (const ZSeq& x : graph.nodes) {
        LabeledFragment::Node node;
        node.wt = weight(cd, x);
        for (int i = 1; i <= n; ++i) {
            node.eps.emplace_back(epsilon(cd, x, i));
            node.phi.emplace_back(phi(cd, x, i));
        }
        fragment.nodes.push_back(std::move(node));
    }
    fragment.edges = graph.edges;
    return fragment;
}

MorphismReport check_strict_morphism(const LabeledFragment& domain, const LabeledFragment& codomain,
                                     const std::vector<int>& vertex_map) {
    MorphismReport report;
    if (vertex_map.size() != domain.nodes.size()) {
        report.violations.push_back("vertex map does not cover the domain");
        return report;
    }
    for (size_t v = 0; v < domain.nodes.size(); ++v) {
        const int image = vertex_map[v];
        if (image < 0 || static_cast<size_t>(image) >= codomain.nodes.size()) {
            report.violations.push_back("vertex " + std::to_string(v) + " maps outside the codomain");
            continue;
        }
        const auto& a = domain.nodes[v];
        const auto& b = codomain.nodes[static_cast<size_t>(image)];
        if (!(a.wt == b.wt))
            report.violations.push_back("weight mismatch at vertex " + std::to_string(v));
        if (a.eps != b.eps)
            report.violations.push_back("epsilon mismatch at vertex " + std::to_string(v));
        if (a.phi != b.phi)
            report.violations.push_back("phi mismatch at vertex " + std::to_string(v));
    }
    std::set<std::tuple<int, int, int>> codomain_edges;
    for (const auto& e : codomain.edges) codomain_edges.insert({e.from, e.color, e.to});
    for (const auto& e : domain.edges) {
        if (static_cast<size_t>(e.from) >= vertex_map.size() || static_cast<size_t>(e.to) >= vertex_map.size())
            continue;
        const std::tuple<int, int, int> mapped{vertex_map[static_cast<size_t>(e.from)], e.color,
                                               vertex_map[static_cast<size_t>(e.to)]};
        if (!codomain_edges.count(mapped))
            report.violations.push_back("edge (" + std::to_string(e.from) + " -" + std::to_string(e.color) +
                                        "-> " + std::to_string(e.to) + ") does not commute with the map");
    }
    return report;
}

namespace {

void compare_labels(const CartanMatrix& cartan, const Elem& a, const Elem& b, const std::string& where,
                    MorphismReport& report) {
    if (!(a.wt(cartan) == b.wt(cartan)))
        report.violations.push_back("weight mismatch at " + where);
    for (int i = 1; i <= cartan.rank(); ++i) {
        if (!(a.eps(cartan, i) == b.eps(cartan, i)))
            report.violations.push_back("epsilon_" + std::to_string(i) + " mismatch at " + where);
        if (!(a.phi_val(cartan, i) == b.phi_val(cartan, i)))
            report.violations.push_back("phi_" + std::to_string(i) + " mismatch at " + where);
    }
}

} // namespace

MorphismReport check_associativity(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, const Elem& b3,
                                   int depth) {
    MorphismReport report;
    const Elem left0 = Elem::tensor(Elem::tensor(b1, b2), b3);
    const Elem right0 = Elem::tensor(b1, Elem::tensor(b2, b3));

    std::set<std::string> visited;
    std::vector<std::pair<Elem, Elem>> frontier{{left0, right0}};
    visited.insert(left0.to_string());
    compare_labels(cartan, left0, right0, "seed", report);

    for (int step = 0; step < depth && !frontier.empty(); ++step) {
        std::vector<std::pair<Elem, Elem>> next;
        for (const auto& [a, b] : frontier) {
            for (int i = 1; i <= cartan.rank(); ++i) {
                auto fa = a.f(cartan, i);
                auto fb = b.f(cartan, i);
                if (fa.has_value() != fb.has_value()) {
                    report.violations.push_back("f_" + std::to_string(i) + " defined on one bracketing only at " +
                                                a.to_string());
                } else if (fa && visited.insert(fa->to_string()).second) {
                    compare_labels(cartan, *fa, *fb, fa->to_string(), report);
                    next.emplace_back(std::move(*fa), std::move(*fb));
                }
                auto ea = a.e(cartan, i);
                auto eb = b.e(cartan, i);
                if (ea.has_value() != eb.has_value()) {
                    report.violations.push_back("e_" + std::to_string(i) + " defined on one bracketing only at " +
                                                a.to_string());
                } else if (ea && visited.insert(ea->to_string()).second) {
                    compare_labels(cartan, *ea, *eb, ea->to_string(), report);
                    next.emplace_back(std::move(*ea), std::move(*eb));
                }
            }
        }
        frontier = std::move(next);
    }
    return report;
}

MorphismReport check_tensor_identification(const CrystalData& cd, int depth, Int positions) {
    MorphismReport report;
    const int n = cd.cartan.rank();
    const CrystalGraph graph = enumerate_image(cd, depth);

    Int needed = positions;
    for (const ZSeq& x : graph.nodes) needed = std::max(needed, x.max_support() + cd.iota.scan_window());

    auto shared = std::make_shared<const CrystalData>(cd);
    auto fresh = std::make_shared<const CrystalData>(cd); // models the highest element's crystal

    auto embed = [&](const ZSeq& x) {
        Elem acc = Elem::b_point(n, cd.iota.at(1), -x.at(1));
        for (Int k = 2; k <= needed; ++k)
            acc = Elem::tensor(Elem::b_point(n, cd.iota.at(k), -x.at(k)), std::move(acc));
        return Elem::tensor(Elem::seq_point(fresh, ZSeq{}), std::move(acc));
    };

    std::unordered_set<ZSeq, ZSeqHash> in_graph(graph.nodes.begin(), graph.nodes.end());

    for (const ZSeq& x : graph.nodes) {
        const Elem direct = Elem::seq_point(shared, x);
        const Elem tensor_side = embed(x);
        compare_labels(cd.cartan, direct, tensor_side, "Z" + x.to_string(), report);
        for (int i = 1; i <= n; ++i) {
            const ZSeq fx = lower(cd, x, i);
            auto tf = tensor_side.f(cd.cartan, i);
            if (!tf) {
                report.violations.push_back("tensor lowering vanished at Z" + x.to_string());
                continue;
            }
            if (in_graph.count(fx) && !(*tf == embed(fx)))
                report.violations.push_back("lowering disagrees at Z" + x.to_string() + " color " +
                                            std::to_string(i));
            const auto ex = raise(cd, x, i);
            auto te = tensor_side.e(cd.cartan, i);
            if (ex.has_value() != te.has_value())
                report.violations.push_back("raising definedness disagrees at Z" + x.to_string() + " color " +
                                            std::to_string(i));
            else if (ex && !(*te == embed(*ex)))
                report.violations.push_back("raising disagrees at Z" + x.to_string() + " color " +
                                            std::to_string(i));
        }
    }
    return report;
}

} // namespace crystalcone
