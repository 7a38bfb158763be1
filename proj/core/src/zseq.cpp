#include "crystalcone/zseq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crystalcone {

ZSeq ZSeq::from_dense(const std::vector<Int>& values) {
    ZSeq result;
    for (size_t idx = 0; idx < values.size(); ++idx)
        if (values[idx] != 0) result.entries_.emplace_back(static_cast<Int>(idx + 1), values[idx]);
    return result;
}

ZSeq ZSeq::from_dense(std::initializer_list<Int> values) {
    return from_dense(std::vector<Int>(values));
}

Int ZSeq::at(Int k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const auto& entry, Int key) { return entry.first < key; });
    if (it != entries_.end() && it->first == k) return it->second;
    return 0;
}

ZSeq ZSeq::plus_at(Int k, Int delta) const {
    if (k < 1) throw std::out_of_range("ZSeq: index must be >= 1");
    ZSeq result(*this);
    auto it = std::lower_bound(result.entries_.begin(), result.entries_.end(), k,
                               [](const auto& entry, Int key) { return entry.first < key; });
    if (it != result.entries_.end() && it->first == k) {
        it->second += delta;
        if (it->second == 0) result.entries_.erase(it);
    } else if (delta != 0) {
        result.entries_.insert(it, {k, delta});
    }
    return result;
}

Int ZSeq::sum() const {
    Int total = 0;
    for (const auto& [k, v] : entries_) total += v;
    return total;
}

bool ZSeq::nonnegative() const {
    for (const auto& [k, v] : entries_)
        if (v < 0) return false;
    return true;
}

std::vector<Int> ZSeq::dense(Int min_len) const {
    std::vector<Int> out(static_cast<size_t>(std::max(min_len, max_support())), 0);
    for (const auto& [k, v] : entries_) out[static_cast<size_t>(k - 1)] = v;
    return out;
}

std::string ZSeq::to_string() const {
    std::ostringstream out;
    out << "(";
    const Int m = max_support();
    for (Int k = 1; k <= m; ++k) {
        if (k > 1) out << ",";
        out << at(k);
    }
    out << ")";
    return out.str();
}

bool canonical_less(const ZSeq& a, const ZSeq& b) {
    const Int sa = a.sum();
    const Int sb = b.sum();
    if (sa != sb) return sa < sb;
    const Int top = std::max(a.max_support(), b.max_support());
    for (Int k = top; k >= 1; --k) {
        const Int va = a.at(k);
        const Int vb = b.at(k);
        if (va != vb) return va < vb;
    }
    return false;
}

std::size_t ZSeqHash::operator()(const ZSeq& x) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [k, v] : x.entries()) {
        h ^= std::hash<Int>()(k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<Int>()(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Int WeightVector::pairing(const CartanMatrix& cartan, int i) const {
    Int value = 0;
    for (int j = 1; j <= rank(); ++j) value -= cartan.at(i, j) * multiplicity(j);
    return value;
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
    WeightVector result(rank());
    for (int i = 1; i <= rank(); ++i) result.add(i, multiplicity(i) + other.multiplicity(i));
    return result;
}

std::string WeightVector::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int i = 1; i <= rank(); ++i) {
        if (i > 1) out << ",";
        out << multiplicity(i);
    }
    out << ")";
    return out.str();
}

CrystalData::CrystalData(CartanMatrix c, IndexSequence seq) : cartan(std::move(c)), iota(std::move(seq)) {
    if (cartan.rank() != iota.rank())
        throw std::invalid_argument("crystal data: Cartan rank and index sequence rank differ");
}

} // namespace crystalcone
