#include "crystalcone/cartan.hpp"

#include <queue>
#include <sstream>

namespace crystalcone {

CartanMatrix::CartanMatrix(std::vector<std::vector<Int>> rows) : entries_(std::move(rows)) {
    validate();
    compute_symmetrizer();
}

CartanMatrix CartanMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    return CartanMatrix(std::move(rows));
}

CartanMatrix CartanMatrix::type_a(int n) {
    if (n < 1) throw InvalidFamilyParams("type A requires rank n >= 1");
    std::vector<std::vector<Int>> rows(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = 2;
        if (i + 1 < n) { rows[i][i + 1] = -1; rows[i + 1][i] = -1; }
    }
    return CartanMatrix(std::move(rows));
}

CartanMatrix CartanMatrix::rank2(Int c1, Int c2) {
    const bool both_zero = (c1 == 0 && c2 == 0);
    const bool both_pos = (c1 >= 1 && c2 >= 1);
    if (!both_zero && !both_pos)
        throw InvalidFamilyParams("rank2 requires c1, c2 both zero or both >= 1");
    return CartanMatrix({{2, -c1}, {-c2, 2}});
}

CartanMatrix CartanMatrix::affine_a(int n) {
    if (n < 3) throw InvalidFamilyParams("affine type A requires n >= 3 nodes");
    std::vector<std::vector<Int>> rows(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = 2;
        rows[i][(i + 1) % n] = -1;
        rows[(i + 1) % n][i] = -1;
    }
    return CartanMatrix(std::move(rows));
}

void CartanMatrix::validate() const {
    const size_t n = entries_.size();
    if (n == 0) throw std::invalid_argument("Cartan matrix: rank must be positive");
    for (size_t i = 0; i < n; ++i) {
        if (entries_[i].size() != n)
            throw std::invalid_argument("Cartan matrix: rows must form a square matrix");
        if (entries_[i][i] != 2)
            throw std::invalid_argument("Cartan matrix: diagonal entry a[" + std::to_string(i + 1) + "][" +
                                        std::to_string(i + 1) + "] must equal 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries_[i][j] > 0)
                throw std::invalid_argument("Cartan matrix: off-diagonal entry a[" + std::to_string(i + 1) + "][" +
                                            std::to_string(j + 1) + "] must be <= 0");
            if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
                throw std::invalid_argument("Cartan matrix: zero pattern must be symmetric at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

void CartanMatrix::compute_symmetrizer() {
    // Propagate d_j = d_i * a[i][j] / a[j][i] over each connected component and
    // reject on an inconsistent cycle. Scaling within a component is free, so
    // seed every component with 1.
    const int n = rank();
    symmetrizer_.assign(static_cast<size_t>(n), Fraction(0));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = true;
        symmetrizer_[static_cast<size_t>(root)] = Fraction(1);
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop();
            for (int j = 0; j < n; ++j) {
                if (i == j || entries_[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
                Fraction want = symmetrizer_[static_cast<size_t>(i)] *
                                Fraction(entries_[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                         entries_[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                if (!seen[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = true;
                    symmetrizer_[static_cast<size_t>(j)] = want;
                    queue.push(j);
                } else if (!(symmetrizer_[static_cast<size_t>(j)] == want)) {
                    throw std::invalid_argument("Cartan matrix: not symmetrizable (inconsistent cycle through node " +
                                                std::to_string(j + 1) + ")");
                }
            }
        }
    }
    for (const auto& d : symmetrizer_) {
        if (!d.positive())
            throw std::invalid_argument("Cartan matrix: not symmetrizable (nonpositive symmetrizer)");
    }
}

std::string CartanMatrix::describe() const {
    std::ostringstream out;
    out << "[";
    for (int i = 1; i <= rank(); ++i) {
        if (i > 1) out << "; ";
        for (int j = 1; j <= rank(); ++j) {
            if (j > 1) out << ",";
            out << at(i, j);
        }
    }
    out << "]";
    return out.str();
}

} // namespace crystalcone
