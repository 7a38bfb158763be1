#pragma once

#include "crystalcone/linear_form.hpp"

#include <vector>

namespace crystalcone {

struct PartitionNotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Double indices (j;i), j >= 1, i in [1,n], flattened block by block.
Int an_flat_index(int n, Int j, int i);

/// A weakly decreasing integer i-tuple bounded by n+1-i; indexes the type-A
/// cone forms attached to position (j;i).
class AdmissiblePartition {
public:
    static AdmissiblePartition make(int n, int i, std::vector<Int> parts);

    int n() const { return n_; }
    int i() const { return i_; }
    Int part(int k) const { return parts_[static_cast<size_t>(k - 1)]; } // 1-based
    const std::vector<Int>& parts() const { return parts_; }

    /// Copy with part k shifted by +1/-1 when the result is still admissible;
    /// the unchanged partition otherwise.
    AdmissiblePartition bumped(int k, Int delta) const;

    bool operator==(const AdmissiblePartition& other) const {
        return n_ == other.n_ && i_ == other.i_ && parts_ == other.parts_;
    }

private:
    AdmissiblePartition(int n, int i, std::vector<Int> parts);
    int n_;
    int i_;
    std::vector<Int> parts_;
};

/// All i-admissible partitions for the given n.
std::vector<AdmissiblePartition> all_admissible_partitions(int n, int i);

/// The telescoping cone form attached to (j;i) and an i-admissible partition:
/// sum_{k=1..i} (x_{j+k-1; i-k+1+p_k} - x_{j+k; i-k+p_k}), with coordinates
/// outside [1,n] in the second index read as zero. Flat indexing.
LinearForm partition_form(int n, Int j, int i, const AdmissiblePartition& partition);

/// The action of the position-(jp;ip) transformation on the partition label:
/// bumps part k up when (jp;ip) = (j+k-1; i-k+1+p_k), down when
/// (jp;ip) = (j+k; i-k+p_k), and leaves the label alone otherwise.
AdmissiblePartition partition_transform(Int j, int i, const AdmissiblePartition& partition, Int jp, int ip);

/// The full type-A inequality system: the chains
/// x_{1;i} >= x_{2;i-1} >= ... >= x_{i;1} >= 0 plus the vanishing constraints
/// x_{j;i} = 0 for i+j > n+1 (listed as flat indices up to support_bound).
struct AnSystem {
    std::vector<LinearForm> forms;
    std::vector<Int> vanishing; // flat indices forced to zero
};
AnSystem an_cone_system(int n, Int support_bound);

} // namespace crystalcone
