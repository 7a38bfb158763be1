#include "crystalcone/affine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystalcone {

Int affine_flat_index(int n, Int j, int i, Int k) {
    return k - 1 + (j - 1) * (n - 1) + i;
}

AdmissibleMatrix::AdmissibleMatrix(int n, std::vector<std::vector<Int>> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 3) throw std::invalid_argument("admissible matrix: requires n >= 3");
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) != n_ - 1)
            throw std::invalid_argument("admissible matrix: rows must have n-1 columns");
    trim();
}

void AdmissibleMatrix::trim() {
    auto is_tail_row = [this](const std::vector<Int>& row) {
        for (int i = 1; i <= n_ - 1; ++i)
            if (row[static_cast<size_t>(i - 1)] != (i == 1 ? 1 : 0)) return false;
        return true;
    };
    while (!rows_.empty() && is_tail_row(rows_.back())) rows_.pop_back();
}

AdmissibleMatrix AdmissibleMatrix::seed(int n) { return AdmissibleMatrix(n, {}); }

AdmissibleMatrix AdmissibleMatrix::from_partial_sums(int n, std::vector<std::vector<Int>> rows) {
    AdmissibleMatrix matrix(n, std::move(rows));
    std::map<std::pair<Int, int>, Int> entries;
    for (Int j = 1; j <= matrix.support_bound(); ++j)
        for (int i = 1; i <= n - 1; ++i)
            if (matrix.c(j, i) != 0) entries[{j, i}] = matrix.c(j, i);
    const AdmissibilityResult check = check_admissible(n, entries);
    if (!check.admissible)
        throw std::invalid_argument("admissible matrix: " + check.violation);
    return matrix;
}

Int AdmissibleMatrix::s(Int j, int i) const {
    if (j < 1 || i < 1 || i > n_ - 1) return 0;
    if (j <= stored_rows()) return rows_[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
    return i == 1 ? 1 : 0;
}

Int AdmissibleMatrix::c(Int j, int i) const { return s(j, i) - s(j - 1, i); }

Int AdmissibleMatrix::support_bound() const { return rows_.empty() ? 1 : stored_rows() + 1; }

std::string AdmissibleMatrix::to_string() const {
    std::ostringstream out;
    out << "s[";
    for (Int j = 1; j <= stored_rows(); ++j) {
        if (j > 1) out << ";";
        for (int i = 1; i <= n_ - 1; ++i) {
            if (i > 1) out << ",";
            out << s(j, i);
        }
    }
    out << "|tail]";
    return out.str();
}

namespace {

// Cells of the window ((j;i), (j+1;i)] in lexicographic order.
std::vector<std::pair<Int, int>> stride_window(int n, Int j, int i) {
    std::vector<std::pair<Int, int>> cells;
    for (int ip = i + 1; ip <= n - 1; ++ip) cells.emplace_back(j, ip);
    for (int ip = 1; ip <= i; ++ip) cells.emplace_back(j + 1, ip);
    return cells;
}

} // namespace

AdmissibilityResult check_admissible(int n, const std::map<std::pair<Int, int>, Int>& c_entries) {
    AdmissibilityResult result;
    auto fail = [&](std::string why) {
        result.admissible = false;
        result.violation = std::move(why);
        return result;
    };
    Int max_row = 1;
    for (const auto& [pos, value] : c_entries) {
        if (pos.first < 1 || pos.second < 1 || pos.second > n - 1)
            return fail("entry outside Z_{>=1} x [1,n-1]");
        if (value != 0) max_row = std::max(max_row, pos.first);
    }

    auto s_at = [&](Int j, int i) {
        Int total = 0;
        for (Int jp = 1; jp <= j; ++jp) {
            auto it = c_entries.find({jp, i});
            if (it != c_entries.end()) total += it->second;
        }
        return total;
    };

    // Nonnegative partial sums within the support block.
    for (Int j = 1; j <= max_row; ++j)
        for (int i = 1; i <= n - 1; ++i)
            if (s_at(j, i) < 0)
                return fail("partial sum s[" + std::to_string(j) + ";" + std::to_string(i) + "] is negative");

    // Stable tail: beyond the support the sums are constant, so the required
    // tail value must already hold at max_row.
    for (int i = 1; i <= n - 1; ++i)
        if (s_at(max_row, i) != (i == 1 ? 1 : 0))
            return fail("tail of column " + std::to_string(i) + " does not stabilize at its required value");

    // Lexicographic prefix bound, with equality once the tail is reached.
    Int running = 0;
    for (Int j = 1; j <= max_row; ++j) {
        for (int i = 1; i <= n - 1; ++i) {
            running += s_at(j, i);
            if (running > j)
                return fail("prefix sum through (" + std::to_string(j) + ";" + std::to_string(i) +
                            ") exceeds " + std::to_string(j));
        }
    }
    if (running != max_row) return fail("prefix sums never reach equality");

    // No positive sum may be followed by a stride of zeros.
    for (Int j = 1; j <= max_row; ++j) {
        for (int i = 1; i <= n - 1; ++i) {
            if (s_at(j, i) <= 0) continue;
            bool found = false;
            for (const auto& [jp, ip] : stride_window(n, j, i)) {
                const Int value = jp <= max_row ? s_at(jp, ip) : (ip == 1 ? 1 : 0);
                if (value > 0) { found = true; break; }
            }
            if (!found)
                return fail("positive sum at (" + std::to_string(j) + ";" + std::to_string(i) +
                            ") followed by a stride of zeros");
        }
    }
    return result;
}

LinearForm admissible_form(const AdmissibleMatrix& matrix, Int k) {
    std::vector<std::pair<Int, Int>> terms;
    const Int top = matrix.support_bound();
    for (Int j = 1; j <= top; ++j)
        for (int i = 1; i <= matrix.n() - 1; ++i) {
            const Int value = matrix.c(j, i);
            if (value != 0) terms.emplace_back(affine_flat_index(matrix.n(), j, i, k), value);
        }
    return LinearForm::from_terms(std::move(terms));
}

std::optional<AdmissibleMatrix> affine_move(const AdmissibleMatrix& matrix, MoveKind kind, Int j, int i) {
    const int n = matrix.n();
    if (j < 1 || i < 1 || i > n - 1) throw std::out_of_range("affine_move: cell outside the index set");
    const Int value = matrix.c(j, i);
    if (value == 0) return matrix; // identity action

    const Int rows_needed = std::max<Int>(matrix.stored_rows(), j + 1);
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<size_t>(rows_needed));
    for (Int jp = 1; jp <= rows_needed; ++jp) {
        std::vector<Int> row;
        for (int ip = 1; ip <= n - 1; ++ip) row.push_back(matrix.s(jp, ip));
        rows.push_back(std::move(row));
    }
    auto cell = [&rows](Int jp, int ip) -> Int& {
        return rows[static_cast<size_t>(jp - 1)][static_cast<size_t>(ip - 1)];
    };

    if (kind == MoveKind::kShiftRight) {
        if (value < 0) return std::nullopt;
        cell(j, i) = matrix.s(j - 1, i);
        if (i == n - 1) cell(j + 1, 1) += value; // wraps: (j;n) is (j+1;1)
        else cell(j, i + 1) += value;
    } else {
        if (value > 0) return std::nullopt;
        if (i == 1) {
            if (j <= 2) return std::nullopt; // the left shift at column 1 needs j > 2
            cell(j - 2, n - 1) -= value;     // (j-1;0) is (j-2;n-1)
        } else {
            cell(j - 1, i - 1) -= value;
        }
        cell(j - 1, i) += value;
    }
    return AdmissibleMatrix::from_partial_sums(n, std::move(rows));
}

AdmissibleMatrix s_move(const AdmissibleMatrix& matrix, Int j, int i) {
    const Int value = matrix.c(j, i);
    if (value == 0) return matrix;
    auto moved = affine_move(matrix, value > 0 ? MoveKind::kShiftRight : MoveKind::kShiftLeft, j, i);
    if (!moved) throw std::logic_error("s_move: admissible matrix rejected its own move");
    return *moved;
}

std::vector<AdmissibleMatrix> enumerate_admissible(int n, Int support_bound, std::size_t max_count) {
    if (n < 3) throw std::invalid_argument("enumerate_admissible: requires n >= 3");
    if (support_bound < 1) throw std::invalid_argument("enumerate_admissible: support bound must be >= 1");

    std::vector<AdmissibleMatrix> result;
    const Int free_rows = support_bound - 1;
    std::vector<std::vector<Int>> rows(static_cast<size_t>(free_rows),
                                       std::vector<Int>(static_cast<size_t>(n - 1), 0));

    auto tail_aware = [&](Int j, int i) -> Int {
        if (j <= free_rows) return rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
        return i == 1 ? 1 : 0;
    };

    auto stride_ok = [&]() {
        for (Int j = 1; j <= free_rows; ++j)
            for (int i = 1; i <= n - 1; ++i) {
                if (tail_aware(j, i) <= 0) continue;
                bool found = false;
                for (const auto& [jp, ip] : stride_window(n, j, i))
                    if (tail_aware(jp, ip) > 0) { found = true; break; }
                if (!found) return false;
            }
        return true;
    };

    std::function<void(Int, int, Int)> visit = [&](Int j, int i, Int running) {
        if (j > free_rows) {
            if (running == free_rows && stride_ok()) {
                result.push_back(AdmissibleMatrix::from_partial_sums(n, rows));
                if (result.size() > max_count)
                    throw std::runtime_error("enumerate_admissible: result cap exceeded");
            }
            return;
        }
        const Int next_j = (i == n - 1) ? j + 1 : j;
        const int next_i = (i == n - 1) ? 1 : i + 1;
        for (Int value = 0; running + value <= j; ++value) {
            rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = value;
            visit(next_j, next_i, running + value);
        }
        rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = 0;
    };
    visit(1, 1, 0);

    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<AdmissibleMatrix> admissible_by_moves(int n, Int support_bound, std::size_t max_count) {
    std::set<AdmissibleMatrix> seen;
    std::deque<AdmissibleMatrix> queue;
    seen.insert(AdmissibleMatrix::seed(n));
    queue.push_back(AdmissibleMatrix::seed(n));
    while (!queue.empty()) {
        AdmissibleMatrix current = std::move(queue.front());
        queue.pop_front();
        const Int top = current.support_bound();
        for (Int j = 1; j <= top; ++j) {
            for (int i = 1; i <= n - 1; ++i) {
                if (current.c(j, i) <= 0) continue;
                auto next = affine_move(current, MoveKind::kShiftRight, j, i);
                if (!next || next->support_bound() > support_bound) continue;
                if (seen.insert(*next).second) {
                    if (seen.size() > max_count)
                        throw std::runtime_error("admissible_by_moves: result cap exceeded");
                    queue.push_back(std::move(*next));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::pair<std::pair<Int, int>, Int>> beta_decomposition(const AdmissibleMatrix& matrix) {
    std::vector<std::pair<std::pair<Int, int>, Int>> coefficients;
    const int n = matrix.n();
    Int running = 0;
    for (Int j = 1; j <= matrix.support_bound(); ++j) {
        for (int i = 1; i <= n - 1; ++i) {
            running += matrix.s(j, i);
            const Int d = j - running;
            if (d < 0) throw std::logic_error("beta_decomposition: negative coefficient on an admissible matrix");
            if (d != 0) coefficients.push_back({{j, i}, d});
        }
    }
    return coefficients;
}

} // namespace crystalcone
