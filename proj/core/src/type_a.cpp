#include "crystalcone/type_a.hpp"

#include <algorithm>
#include <functional>

namespace crystalcone {

Int an_flat_index(int n, Int j, int i) {
    return (j - 1) * n + i;
}

AdmissiblePartition::AdmissiblePartition(int n, int i, std::vector<Int> parts)
    : n_(n), i_(i), parts_(std::move(parts)) {}

AdmissiblePartition AdmissiblePartition::make(int n, int i, std::vector<Int> parts) {
    if (i < 1 || i > n) throw PartitionNotAdmissible("partition: i must lie in [1,n]");
    if (static_cast<int>(parts.size()) != i)
        throw PartitionNotAdmissible("partition: expected exactly i parts");
    Int prev = n + 1 - i;
    for (Int p : parts) {
        if (p > prev || p < 0)
            throw PartitionNotAdmissible("partition: parts must satisfy n+1-i >= p_1 >= ... >= p_i >= 0");
        prev = p;
    }
    return AdmissiblePartition(n, i, std::move(parts));
}

AdmissiblePartition AdmissiblePartition::bumped(int k, Int delta) const {
    std::vector<Int> next = parts_;
    next[static_cast<size_t>(k - 1)] += delta;
    const Int upper = (k == 1) ? (n_ + 1 - i_) : next[static_cast<size_t>(k - 2)];
    const Int lower = (k == i_) ? 0 : next[static_cast<size_t>(k)];
    if (next[static_cast<size_t>(k - 1)] > upper || next[static_cast<size_t>(k - 1)] < lower) return *this;
    return AdmissiblePartition(n_, i_, std::move(next));
}

std::vector<AdmissiblePartition> all_admissible_partitions(int n, int i) {
    std::vector<AdmissiblePartition> result;
    std::vector<Int> current(static_cast<size_t>(i), 0);
    std::function<void(int, Int)> visit = [&](int pos, Int bound) {
        if (pos == i) {
            result.push_back(AdmissiblePartition::make(n, i, current));
            return;
        }
        for (Int value = bound; value >= 0; --value) {
            current[static_cast<size_t>(pos)] = value;
            visit(pos + 1, value);
        }
    };
    visit(0, n + 1 - i);
    return result;
}

LinearForm partition_form(int n, Int j, int i, const AdmissiblePartition& partition) {
    if (partition.n() != n || partition.i() != i)
        throw PartitionNotAdmissible("partition_form: partition shaped for a different (n,i)");
    std::vector<std::pair<Int, Int>> terms;
    for (int k = 1; k <= i; ++k) {
        const Int p = partition.part(k);
        const Int plus_col = i - k + 1 + p;
        const Int minus_col = i - k + p;
        if (plus_col >= 1 && plus_col <= n) terms.emplace_back(an_flat_index(n, j + k - 1, static_cast<int>(plus_col)), 1);
        if (minus_col >= 1 && minus_col <= n) terms.emplace_back(an_flat_index(n, j + k, static_cast<int>(minus_col)), -1);
    }
    return LinearForm::from_terms(std::move(terms));
}

AdmissiblePartition partition_transform(Int j, int i, const AdmissiblePartition& partition, Int jp, int ip) {
    for (int k = 1; k <= i; ++k) {
        const Int p = partition.part(k);
        if (jp == j + k - 1 && ip == i - k + 1 + p) return partition.bumped(k, +1);
        if (jp == j + k && ip == i - k + p) return partition.bumped(k, -1);
    }
    return partition;
}

AnSystem an_cone_system(int n, Int support_bound) {
    AnSystem system;
    for (int i = 1; i <= n; ++i) {
        // x_{m;i-m+1} >= x_{m+1;i-m} along the chain, ending at x_{i;1} >= 0
        for (int m = 1; m < i; ++m)
            system.forms.push_back(LinearForm::from_terms(
                {{an_flat_index(n, m, i - m + 1), 1}, {an_flat_index(n, m + 1, i - m), -1}}));
        system.forms.push_back(LinearForm::unit(an_flat_index(n, i, 1)));
    }
    for (Int flat = 1; flat <= support_bound; ++flat) {
        const Int j = (flat - 1) / n + 1;
        const int i = static_cast<int>((flat - 1) % n) + 1;
        if (i + j > n + 1) system.vanishing.push_back(flat);
    }
    std::sort(system.forms.begin(), system.forms.end());
    return system;
}

} // namespace crystalcone
