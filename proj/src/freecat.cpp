#include "ncat/freecat.hpp"

#include <map>

namespace ncat {

void Quiver::validate() const {
    if (vertexCount < 0) throw InvalidInput("quiver: negative vertex count");
    for (const auto& a : arrows)
        if (a.first < 0 || a.first >= vertexCount || a.second < 0 || a.second >= vertexCount)
            throw InvalidInput("quiver: arrow endpoint out of range");
    // Kahn peeling; anything left over lies on a cycle.
    std::vector<int> indeg(vertexCount, 0);
    for (const auto& a : arrows) ++indeg[a.second];
    std::vector<int> queue;
    for (int v = 0; v < vertexCount; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (const auto& a : arrows)
            if (a.first == v && --indeg[a.second] == 0) queue.push_back(a.second);
    }
    if (seen != vertexCount) throw InvalidInput("quiver: cycle detected");
}

bool operator==(const PathTerm& a, const PathTerm& b) {
    return a.src == b.src && a.tgt == b.tgt && a.arrows == b.arrows;
}

PathTerm path_identity(int v) { return {v, v, {}}; }

PathTerm path_compose(const PathTerm& q, const PathTerm& p) {
    if (p.tgt != q.src) throw InvalidInput("path_compose: endpoints do not match");
    PathTerm r{p.src, q.tgt, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

namespace {

void extend_paths(const Quiver& q, int v, int to, std::vector<int>& current,
                  std::vector<PathTerm>& out) {
    if (v == to) out.push_back({-1, to, current});  // src filled in by the wrapper
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].first == v) {
            current.push_back(static_cast<int>(a));
            extend_paths(q, q.arrows[a].second, to, current, out);
            current.pop_back();
        }
}

}  // namespace

std::vector<PathTerm> quiver_paths(const Quiver& q, int from, int to) {
    if (from < 0 || from >= q.vertexCount || to < 0 || to >= q.vertexCount)
        throw InvalidInput("quiver_paths: vertex out of range");
    std::vector<PathTerm> out;
    std::vector<int> current;
    extend_paths(q, from, to, current, out);
    for (PathTerm& p : out) p.src = from;
    require_within_cap(out.size(), "quiver paths");
    return out;
}

ConcreteCategory free_category(const Quiver& q) {
    q.validate();
    const int n = q.vertexCount;
    ConcreteCategory c;
    c.objCount = n;

    std::vector<std::vector<PathTerm>> paths(static_cast<size_t>(n) * n);
    std::vector<std::map<std::vector<int>, int>> pathIndex(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const size_t p = static_cast<size_t>(x) * n + y;
            paths[p] = quiver_paths(q, x, y);
            for (size_t i = 0; i < paths[p].size(); ++i)
                pathIndex[p][paths[p][i].arrows] = static_cast<int>(i);
        }

    // in-paths of x: every (v, path v -> x), v-major then path order
    std::vector<std::vector<std::pair<int, int>>> inPaths(n);  // (v, path index in paths[v][x])
    std::vector<std::map<std::pair<int, std::vector<int>>, int>> inIndex(n);
    for (int x = 0; x < n; ++x) {
        for (int v = 0; v < n; ++v) {
            const auto& vp = paths[static_cast<size_t>(v) * n + x];
            for (size_t i = 0; i < vp.size(); ++i) {
                inIndex[x][{v, vp[i].arrows}] = static_cast<int>(inPaths[x].size());
                inPaths[x].push_back({v, static_cast<int>(i)});
            }
        }
        require_within_cap(inPaths[x].size(), "paths into a vertex");
    }

    c.objPlus.resize(n);
    for (int x = 0; x < n; ++x)
        c.objPlus[x] =
            std::make_shared<FinGroupoid>(discrete_groupoid(static_cast<int>(inPaths[x].size())));

    c.hom.resize(static_cast<size_t>(n) * n);
    c.homPlus.resize(static_cast<size_t>(n) * n);
    c.homPrime.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const size_t p = c.pairIndex(x, y);
            c.hom[p] = std::make_shared<FinGroupoid>(
                discrete_groupoid(static_cast<int>(paths[p].size())));
            FunctorSpace sp = FunctorSpace::make(c.objPlus[x], c.objPlus[y]);
            HomRealisation real;
            real.objMap.resize(paths[p].size());
            for (size_t i = 0; i < paths[p].size(); ++i) {
                std::vector<int> table(inPaths[x].size());
                for (size_t j = 0; j < inPaths[x].size(); ++j) {
                    auto [v, pi] = inPaths[x][j];
                    PathTerm moved = path_compose(paths[p][i], paths[static_cast<size_t>(v) * n + x][pi]);
                    table[j] = inIndex[y].at({v, moved.arrows});
                }
                GFunctor gf{c.objPlus[x], c.objPlus[y], table, table};
                real.objMap[i] = sp.indexOf(gf);
            }
            real.morMap = real.objMap;
            c.homPlus[p] = std::move(real);
            c.homPrime.push_back(std::move(sp));
        }

    c.identWitness.resize(n);
    for (int x = 0; x < n; ++x) {
        const size_t p = c.pairIndex(x, x);
        int elem = pathIndex[p].at({});
        c.identWitness[x] =
            FiberElement{elem, c.space(x, x).identityMorphismAt(c.homPlus[p].objMap[elem])};
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto& table = c.cmpWitness[c.tripleIndex(x, y, z)];
                const auto& gs = paths[c.pairIndex(y, z)];
                const auto& fs = paths[c.pairIndex(x, y)];
                const auto& outIndex = pathIndex[c.pairIndex(x, z)];
                const auto& outReal = c.homPlus[c.pairIndex(x, z)];
                const FunctorSpace& sp = c.space(x, z);
                table.resize(gs.size() * fs.size());
                for (size_t g = 0; g < gs.size(); ++g)
                    for (size_t f = 0; f < fs.size(); ++f) {
                        int elem = outIndex.at(path_compose(gs[g], fs[f]).arrows);
                        table[g * fs.size() + f] =
                            FiberElement{elem, sp.identityMorphismAt(outReal.objMap[elem])};
                    }
            }

    c.validate();
    return c;
}

}  // namespace ncat
