#include "crystalcone/zinf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace crystalcone {

Int sigma(const CrystalData& cd, const ZSeq& x, Int k) {
    if (k < 1) throw std::out_of_range("sigma: k must be >= 1");
    const int color = cd.iota.at(k);
    Int value = x.at(k);
    for (const auto& [j, xj] : x.entries())
        if (j > k) value += cd.cartan.at(color, cd.iota.at(j)) * xj;
    return value;
}

ColorMax color_max(const CrystalData& cd, const ZSeq& x, int i) {
    // sigma_k vanishes beyond the support, so the max over the infinite tail
    // is 0 and only k <= max_support need inspection. One extra scan window
    // guarantees a position of color i beyond the support when the max is 0.
    const Int bound = x.max_support() + cd.iota.scan_window();
    ColorMax result;
    result.value = 0; // attained on the tail of color-i positions
    for (Int k = 1; k <= bound; ++k) {
        if (cd.iota.at(k) != i) continue;
        const Int s = sigma(cd, x, k);
        if (s > result.value) result.value = s;
    }
    Int min_idx = 0;
    Int max_idx = 0;
    for (Int k = 1; k <= bound; ++k) {
        if (cd.iota.at(k) != i) continue;
        if (sigma(cd, x, k) != result.value) continue;
        if (min_idx == 0) min_idx = k;
        max_idx = k;
    }
    result.min_index = min_idx;
    result.finite = result.value > 0;
    if (result.finite) result.max_index = max_idx;
    return result;
}

Int epsilon(const CrystalData& cd, const ZSeq& x, int i) {
    return color_max(cd, x, i).value;
}

WeightVector weight(const CrystalData& cd, const ZSeq& x) {
    WeightVector wt(cd.cartan.rank());
    for (const auto& [k, xk] : x.entries()) wt.add(cd.iota.at(k), xk);
    return wt;
}

Int phi(const CrystalData& cd, const ZSeq& x, int i) {
    return weight(cd, x).pairing(cd.cartan, i) + epsilon(cd, x, i);
}

ZSeq lower(const CrystalData& cd, const ZSeq& x, int i) {
    return x.plus_at(color_max(cd, x, i).min_index, 1);
}

std::optional<ZSeq> raise(const CrystalData& cd, const ZSeq& x, int i) {
    const ColorMax m = color_max(cd, x, i);
    if (!m.finite) return std::nullopt;
    return x.plus_at(*m.max_index, -1);
}

Int beta_value(const CrystalData& cd, const ZSeq& x, Int k) {
    if (k == 0) return 0;
    return sigma(cd, x, k) - sigma(cd, x, cd.iota.next_occ(k));
}

std::optional<ZSeq> lower_at(const CrystalData& cd, const ZSeq& x, Int k) {
    const Int prev = cd.iota.prev_occ(k);
    if (prev == 0 || beta_value(cd, x, prev) < 0) return x.plus_at(k, 1);
    return std::nullopt;
}

std::optional<ZSeq> raise_at(const CrystalData& cd, const ZSeq& x, Int k) {
    if (beta_value(cd, x, k) > 0) return x.plus_at(k, -1);
    return std::nullopt;
}

namespace {

std::vector<ZSeq> sorted_canonical(std::unordered_set<ZSeq, ZSeqHash>&& seen) {
    std::vector<ZSeq> nodes(seen.begin(), seen.end());
    std::sort(nodes.begin(), nodes.end(), canonical_less);
    return nodes;
}

/// Hardware concurrency, capped by the CRYSTAL_CONE_THREADS environment
/// variable when set.
unsigned thread_budget() {
    unsigned budget = std::thread::hardware_concurrency();
    if (budget == 0) budget = 1;
    if (const char* env = std::getenv("CRYSTAL_CONE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1 && static_cast<unsigned>(cap) < budget)
            budget = static_cast<unsigned>(cap);
    }
    return budget;
}

struct RawEdge {
    ZSeq from;
    int color;
    ZSeq to;
};

/// Expands one search layer. Chunks are merged in frontier order, so the
/// result never depends on the thread count.
std::vector<RawEdge> expand_layer(const CrystalData& cd, const std::vector<ZSeq>& frontier) {
    const int n = cd.cartan.rank();
    auto expand_range = [&](size_t begin, size_t end, std::vector<RawEdge>& out) {
        for (size_t pos = begin; pos < end; ++pos) {
            for (int i = 1; i <= n; ++i) out.push_back({frontier[pos], i, lower(cd, frontier[pos], i)});
        }
    };

    constexpr size_t kMinChunk = 128;
    const unsigned budget = thread_budget();
    const size_t workers = std::min<size_t>(budget, std::max<size_t>(1, frontier.size() / kMinChunk));
    if (workers <= 1) {
        std::vector<RawEdge> edges;
        edges.reserve(frontier.size() * static_cast<size_t>(n));
        expand_range(0, frontier.size(), edges);
        return edges;
    }

    std::vector<std::vector<RawEdge>> chunks(workers);
    std::vector<std::thread> threads;
    const size_t stride = (frontier.size() + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        const size_t begin = w * stride;
        const size_t end = std::min(frontier.size(), begin + stride);
        threads.emplace_back([&, w, begin, end] { expand_range(begin, end, chunks[w]); });
    }
    for (auto& t : threads) t.join();

    std::vector<RawEdge> edges;
    for (auto& chunk : chunks)
        for (auto& e : chunk) edges.push_back(std::move(e));
    return edges;
}

} // namespace

CrystalGraph enumerate_image(const CrystalData& cd, int depth) {
    std::unordered_set<ZSeq, ZSeqHash> seen;
    std::vector<ZSeq> frontier{ZSeq{}};
    seen.insert(ZSeq{});

    CrystalGraph graph;
    graph.level_sizes.push_back(1);

    std::vector<RawEdge> raw_edges;

    for (int level = 0; level < depth; ++level) {
        std::vector<ZSeq> next;
        for (RawEdge& e : expand_layer(cd, frontier)) {
            if (seen.insert(e.to).second) next.push_back(e.to);
            raw_edges.push_back(std::move(e));
        }
        graph.level_sizes.push_back(next.size());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    graph.nodes = sorted_canonical(std::move(seen));
    std::unordered_map<ZSeq, int, ZSeqHash> index;
    index.reserve(graph.nodes.size());
    for (size_t pos = 0; pos < graph.nodes.size(); ++pos)
        index.emplace(graph.nodes[pos], static_cast<int>(pos));
    for (const RawEdge& e : raw_edges)
        graph.edges.push_back({index.at(e.from), e.color, index.at(e.to)});
    std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.from, a.color, a.to) < std::tie(b.from, b.color, b.to);
    });
    return graph;
}

std::vector<ZSeq> enumerate_f_closure(const CrystalData& cd, int depth) {
    std::unordered_set<ZSeq, ZSeqHash> seen;
    std::vector<ZSeq> frontier{ZSeq{}};
    seen.insert(ZSeq{});
    const Int window = cd.iota.scan_window();
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<ZSeq> next;
        for (const ZSeq& x : frontier) {
            const Int bound = x.max_support() + window;
            for (Int k = 1; k <= bound; ++k) {
                auto y = lower_at(cd, x, k);
                if (y && seen.insert(*y).second) next.push_back(std::move(*y));
            }
        }
        frontier = std::move(next);
    }
    return sorted_canonical(std::move(seen));
}

std::vector<ZSeq> enumerate_ef_closure(const CrystalData& cd, int depth) {
    std::unordered_set<ZSeq, ZSeqHash> seen;
    std::vector<ZSeq> frontier{ZSeq{}};
    seen.insert(ZSeq{});
    const Int window = cd.iota.scan_window();
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<ZSeq> next;
        for (const ZSeq& x : frontier) {
            const Int bound = x.max_support() + window;
            for (Int k = 1; k <= bound; ++k) {
                auto y = lower_at(cd, x, k);
                if (y && seen.insert(*y).second) next.push_back(std::move(*y));
                auto z = raise_at(cd, x, k);
                if (z && seen.insert(*z).second) next.push_back(std::move(*z));
            }
        }
        frontier = std::move(next);
    }
    return sorted_canonical(std::move(seen));
}

} // namespace crystalcone
