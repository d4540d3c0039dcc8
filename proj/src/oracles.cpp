#include "ncat/oracles.hpp"

#include <algorithm>

namespace ncat::oracles {

namespace {

/// Odometer over tables of length `len` with digits below `radix`.
/// Returns false when the sweep is finished.
bool next_table(std::vector<int>& t, int radix) {
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && t[i] == radix - 1) {
        t[i] = 0;
        --i;
    }
    if (i < 0) return false;
    ++t[i];
    return true;
}

}  // namespace

std::vector<std::vector<int>> monotone_maps(int m, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    std::vector<int> t(static_cast<size_t>(m), 0);
    do {
        if (std::is_sorted(t.begin(), t.end())) out.push_back(t);
    } while (next_table(t, n));
    return out;
}

std::uint64_t monotone_map_count(int m, int n) {
    return static_cast<std::uint64_t>(monotone_maps(m, n).size());
}

std::uint64_t dag_path_count(int vertices, const std::vector<std::pair<int, int>>& arrows, int from,
                             int to) {
    std::vector<std::uint64_t> paths(static_cast<size_t>(vertices), 0);
    paths[from] = 1;
    // relax repeatedly; terminates because the arrow list is acyclic
    for (int round = 0; round < vertices; ++round) {
        std::vector<std::uint64_t> next(static_cast<size_t>(vertices), 0);
        next[from] = 1;
        for (auto [s, t] : arrows) next[t] += paths[s];
        paths.swap(next);
    }
    return paths[to];
}

std::uint64_t functor_count(const FinGroupoid& g, const FinGroupoid& h) {
    if (g.objectCount == 0) return 1;
    if (h.objectCount == 0) return 0;
    std::uint64_t count = 0;
    std::vector<int> objMap(static_cast<size_t>(g.objectCount), 0);
    do {
        if (g.morphismCount() == 0) {
            ++count;
            continue;
        }
        std::vector<int> morMap(static_cast<size_t>(g.morphismCount()), 0);
        do {
            bool ok = true;
            for (int m = 0; m < g.morphismCount() && ok; ++m)
                if (h.src(morMap[m]) != objMap[g.src(m)] || h.tgt(morMap[m]) != objMap[g.tgt(m)])
                    ok = false;
            for (int x = 0; x < g.objectCount && ok; ++x)
                if (morMap[g.identity(x)] != h.identity(objMap[x])) ok = false;
            for (int b = 0; b < g.morphismCount() && ok; ++b)
                for (int a = 0; a < g.morphismCount() && ok; ++a) {
                    if (g.tgt(a) != g.src(b)) continue;
                    if (morMap[g.compose(b, a)] != h.compose(morMap[b], morMap[a])) ok = false;
                }
            if (ok) ++count;
        } while (next_table(morMap, h.morphismCount()));
    } while (next_table(objMap, h.objectCount));
    return count;
}

std::uint64_t natiso_count(const GFunctor& f, const GFunctor& g) {
    const FinGroupoid& D = *f.dom;
    const FinGroupoid& C = *f.cod;
    if (D.objectCount == 0) return 1;
    if (C.morphismCount() == 0) return 0;
    std::uint64_t count = 0;
    std::vector<int> comp(static_cast<size_t>(D.objectCount), 0);
    do {
        bool ok = true;
        for (int x = 0; x < D.objectCount && ok; ++x)
            if (C.src(comp[x]) != f.objMap[x] || C.tgt(comp[x]) != g.objMap[x]) ok = false;
        for (int m = 0; m < D.morphismCount() && ok; ++m)
            if (C.compose(comp[D.tgt(m)], f.morMap[m]) != C.compose(g.morMap[m], comp[D.src(m)]))
                ok = false;
        if (ok) ++count;
    } while (next_table(comp, C.morphismCount()));
    return count;
}

std::uint64_t fiber_point_count(const GFunctor& f, int h) {
    const FinGroupoid& C = *f.cod;
    std::uint64_t count = 0;
    for (int g = 0; g < f.dom->objectCount; ++g)
        for (int m = 0; m < C.morphismCount(); ++m)
            if (C.src(m) == f.objMap[g] && C.tgt(m) == h) ++count;
    return count;
}

}  // namespace ncat::oracles
