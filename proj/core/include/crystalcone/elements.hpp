#pragma once

#include "crystalcone/ext_int.hpp"
#include "crystalcone/zinf.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace crystalcone {

/// A crystal element with value semantics: either a point (x)_i of the
/// elementary crystal B_i, a finitely supported sequence carrying the
/// structure fixed by some CrystalData, or a tensor product of two elements.
/// Tensor products never contain the formal zero; operators that would
/// produce it return nullopt instead.
class Elem {
public:
    /// The element (x)_i of B_i.
    static Elem b_point(int rank, int i, Int x);

    /// A sequence element; `data` must outlive the element.
    static Elem seq_point(std::shared_ptr<const CrystalData> data, ZSeq x);

    static Elem tensor(Elem left, Elem right);

    int rank() const { return rank_; }

    WeightVector wt(const CartanMatrix& cartan) const;
    ExtInt eps(const CartanMatrix& cartan, int i) const;
    ExtInt phi_val(const CartanMatrix& cartan, int i) const;
    std::optional<Elem> e(const CartanMatrix& cartan, int i) const;
    std::optional<Elem> f(const CartanMatrix& cartan, int i) const;

    bool is_tensor() const;
    const Elem& left() const;
    const Elem& right() const;

    bool operator==(const Elem& other) const;
    bool operator<(const Elem& other) const; // structural, for ordered containers
    std::string to_string() const;

private:
    struct BPoint {
        int color;
        Int x;
    };
    struct SeqPoint {
        std::shared_ptr<const CrystalData> data;
        ZSeq x;
    };
    struct Tensor {
        std::shared_ptr<const Elem> lhs;
        std::shared_ptr<const Elem> rhs;
    };

    Elem(int rank, std::variant<BPoint, SeqPoint, Tensor> node) : rank_(rank), node_(std::move(node)) {}

    int rank_ = 0;
    std::variant<BPoint, SeqPoint, Tensor> node_;
};

/// epsilon_i(b1 (x) b2) = max(eps(b1), eps(b2) - <h_i, wt(b1)>).
ExtInt tensor_eps(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i);

/// phi_i(b1 (x) b2) = max(phi(b2), phi(b1) + <h_i, wt(b2)>).
ExtInt tensor_phi(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i);

/// Raising on a tensor pair: acts on the left factor when
/// phi_i(b1) >= eps_i(b2), on the right otherwise.
std::optional<Elem> tensor_e(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i);

/// Lowering on a tensor pair: acts on the left factor when
/// phi_i(b1) > eps_i(b2), on the right otherwise.
std::optional<Elem> tensor_f(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, int i);

/// A finite fragment of a crystal graph together with its labels, the raw
/// material of morphism checks.
struct LabeledFragment {
    struct Node {
        WeightVector wt;
        std::vector<ExtInt> eps; // indexed by color-1
        std::vector<ExtInt> phi;
    };
    std::vector<Node> nodes;
    std::vector<CrystalGraph::Edge> edges;
};

/// Labels of the enumerated lowering graph of a sequence crystal.
LabeledFragment label_fragment(const CrystalData& cd, const CrystalGraph& graph);

struct MorphismReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Checks that vertex_map (domain node index -> codomain node index) is a
/// strict morphism of the fragments: labels agree and every listed edge
/// commutes with the map.
MorphismReport check_strict_morphism(const LabeledFragment& domain, const LabeledFragment& codomain,
                                     const std::vector<int>& vertex_map);

/// Walks the orbit of (b1 (x) b2) (x) b3 and b1 (x) (b2 (x) b3) under all
/// raising/lowering operators to the given depth and reports any label or
/// action mismatch between the two bracketings.
MorphismReport check_associativity(const CartanMatrix& cartan, const Elem& b1, const Elem& b2, const Elem& b3,
                                   int depth);

/// For every enumerated x with support below `positions`, compares the
/// sequence element against u (x) (-x_m)_{i_m} (x) ... (x) (-x_1)_{i_1},
/// u the zero sequence of a fresh copy of the same crystal: equal eps/phi
/// labels, equal weights, and matching lowering actions inside the fragment.
MorphismReport check_tensor_identification(const CrystalData& cd, int depth, Int positions);

} // namespace crystalcone
