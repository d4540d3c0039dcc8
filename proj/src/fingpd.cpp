#include "ncat/fingpd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace ncat {

int FinGroupoid::compose(int g, int f) const {
    int r = compTable[static_cast<size_t>(g) * morphisms.size() + f];
    if (r < 0) throw InvalidInput("FinGroupoid::compose: morphisms do not match end to end");
    return r;
}

int FinGroupoid::inverse(int m) const {
    for (int c : morphismsBetween(tgt(m), src(m)))
        if (compTable[static_cast<size_t>(c) * morphisms.size() + m] == identities[src(m)])
            return c;
    throw ValidationError("FinGroupoid::inverse: no inverse found, not a groupoid");
}

std::vector<int> FinGroupoid::morphismsBetween(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < morphismCount(); ++m)
        if (morphisms[m].src == a && morphisms[m].tgt == b) out.push_back(m);
    return out;
}

std::vector<int> FinGroupoid::componentLabels() const {
    std::vector<int> parent(objectCount);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& m : morphisms) {
        int a = find(m.src), b = find(m.tgt);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> label(objectCount);
    for (int x = 0; x < objectCount; ++x) label[x] = find(x);
    return label;
}

void FinGroupoid::validate() const {
    const size_t m = morphisms.size();
    if (identities.size() != static_cast<size_t>(objectCount))
        throw ValidationError("groupoid: identity list size mismatch");
    if (compTable.size() != m * m) throw ValidationError("groupoid: composition table size mismatch");
    for (const auto& mor : morphisms)
        if (mor.src < 0 || mor.src >= objectCount || mor.tgt < 0 || mor.tgt >= objectCount)
            throw ValidationError("groupoid: morphism endpoint out of range");
    for (int x = 0; x < objectCount; ++x) {
        int e = identities[x];
        if (e < 0 || e >= static_cast<int>(m) || morphisms[e].src != x || morphisms[e].tgt != x)
            throw ValidationError("groupoid: identity of object " + std::to_string(x) + " malformed");
    }
    for (size_t g = 0; g < m; ++g)
        for (size_t f = 0; f < m; ++f) {
            int r = compTable[g * m + f];
            bool matched = morphisms[f].tgt == morphisms[g].src;
            if (!matched) {
                if (r != -1) throw ValidationError("groupoid: composite defined for mismatched pair");
                continue;
            }
            if (r < 0 || r >= static_cast<int>(m))
                throw ValidationError("groupoid: missing composite");
            if (morphisms[r].src != morphisms[f].src || morphisms[r].tgt != morphisms[g].tgt)
                throw ValidationError("groupoid: composite has wrong endpoints");
        }
    for (size_t f = 0; f < m; ++f) {
        if (compTable[static_cast<size_t>(identities[morphisms[f].tgt]) * m + f] != static_cast<int>(f) ||
            compTable[f * m + identities[morphisms[f].src]] != static_cast<int>(f))
            throw ValidationError("groupoid: identity law fails at morphism " + std::to_string(f));
    }
    for (size_t h = 0; h < m; ++h)
        for (size_t g = 0; g < m; ++g) {
            if (morphisms[g].tgt != morphisms[h].src) continue;
            int hg = compTable[h * m + g];
            for (size_t f = 0; f < m; ++f) {
                if (morphisms[f].tgt != morphisms[g].src) continue;
                int gf = compTable[g * m + f];
                if (compTable[static_cast<size_t>(hg) * m + f] !=
                    compTable[h * m + static_cast<size_t>(gf)])
                    throw ValidationError("groupoid: associativity fails");
            }
        }
    for (size_t f = 0; f < m; ++f) {
        bool has = false;
        for (size_t g = 0; g < m; ++g) {
            if (morphisms[g].src != morphisms[f].tgt || morphisms[g].tgt != morphisms[f].src) continue;
            if (compTable[g * m + f] == identities[morphisms[f].src] &&
                compTable[f * m + g] == identities[morphisms[f].tgt]) {
                has = true;
                break;
            }
        }
        if (!has) throw ValidationError("groupoid: morphism " + std::to_string(f) + " has no inverse");
    }
}

bool operator==(const FinGroupoid& a, const FinGroupoid& b) {
    if (a.objectCount != b.objectCount || a.identities != b.identities ||
        a.compTable != b.compTable || a.morphisms.size() != b.morphisms.size())
        return false;
    for (size_t i = 0; i < a.morphisms.size(); ++i)
        if (a.morphisms[i].src != b.morphisms[i].src || a.morphisms[i].tgt != b.morphisms[i].tgt)
            return false;
    return true;
}

FinGroupoid discrete_groupoid(int n) {
    FinGroupoid g;
    g.objectCount = n;
    g.morphisms.resize(n);
    g.identities.resize(n);
    for (int i = 0; i < n; ++i) {
        g.morphisms[i] = {i, i};
        g.identities[i] = i;
    }
    g.compTable.assign(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) g.compTable[static_cast<size_t>(i) * n + i] = i;
    return g;
}

FinGroupoid full_subgroupoid(const FinGroupoid& g, const std::vector<int>& objects) {
    std::vector<int> objIndex(g.objectCount, -1);
    for (size_t i = 0; i < objects.size(); ++i) {
        int o = objects[i];
        if (o < 0 || o >= g.objectCount) throw InvalidInput("full_subgroupoid: object out of range");
        if (objIndex[o] != -1) throw InvalidInput("full_subgroupoid: duplicate object");
        objIndex[o] = static_cast<int>(i);
    }
    const int oldMor = g.morphismCount();
    std::vector<int> morIndex(oldMor, -1);
    FinGroupoid sub;
    sub.objectCount = static_cast<int>(objects.size());
    for (int m = 0; m < oldMor; ++m) {
        const Morphism& mo = g.morphisms[m];
        if (objIndex[mo.src] < 0 || objIndex[mo.tgt] < 0) continue;
        morIndex[m] = static_cast<int>(sub.morphisms.size());
        sub.morphisms.push_back({objIndex[mo.src], objIndex[mo.tgt]});
    }
    sub.identities.resize(sub.objectCount);
    for (int o : objects) sub.identities[objIndex[o]] = morIndex[g.identities[o]];
    const int nm = static_cast<int>(sub.morphisms.size());
    require_within_cap(sat_mul(static_cast<std::uint64_t>(nm), static_cast<std::uint64_t>(nm)),
                       "subgroupoid composition table");
    sub.compTable.assign(static_cast<size_t>(nm) * nm, -1);
    for (int b = 0; b < oldMor; ++b) {
        if (morIndex[b] < 0) continue;
        for (int a = 0; a < oldMor; ++a) {
            if (morIndex[a] < 0) continue;
            int c = g.compTable[static_cast<size_t>(b) * oldMor + a];
            if (c >= 0)
                sub.compTable[static_cast<size_t>(morIndex[b]) * nm + morIndex[a]] = morIndex[c];
        }
    }
    return sub;
}

std::vector<int> full_subgroupoid_morphisms(const FinGroupoid& g, const std::vector<int>& objects) {
    std::vector<bool> keep(g.objectCount, false);
    for (int o : objects) {
        if (o < 0 || o >= g.objectCount) throw InvalidInput("full_subgroupoid: object out of range");
        keep[o] = true;
    }
    std::vector<int> ids;
    for (int m = 0; m < g.morphismCount(); ++m)
        if (keep[g.src(m)] && keep[g.tgt(m)]) ids.push_back(m);
    return ids;
}

void GFunctor::validate() const {
    if (!dom || !cod) throw ValidationError("functor: missing groupoid");
    if (objMap.size() != static_cast<size_t>(dom->objectCount) ||
        morMap.size() != static_cast<size_t>(dom->morphismCount()))
        throw ValidationError("functor: map size mismatch");
    for (int v : objMap)
        if (v < 0 || v >= cod->objectCount) throw ValidationError("functor: object image out of range");
    for (int m = 0; m < dom->morphismCount(); ++m) {
        int im = morMap[m];
        if (im < 0 || im >= cod->morphismCount())
            throw ValidationError("functor: morphism image out of range");
        if (cod->src(im) != objMap[dom->src(m)] || cod->tgt(im) != objMap[dom->tgt(m)])
            throw ValidationError("functor: morphism image has wrong endpoints");
    }
    for (int x = 0; x < dom->objectCount; ++x)
        if (morMap[dom->identity(x)] != cod->identity(objMap[x]))
            throw ValidationError("functor: identity not preserved at object " + std::to_string(x));
    for (int g = 0; g < dom->morphismCount(); ++g)
        for (int f = 0; f < dom->morphismCount(); ++f) {
            if (dom->tgt(f) != dom->src(g)) continue;
            if (morMap[dom->compose(g, f)] != cod->compose(morMap[g], morMap[f]))
                throw ValidationError("functor: composition not preserved");
        }
}

bool operator==(const GFunctor& a, const GFunctor& b) {
    return a.objMap == b.objMap && a.morMap == b.morMap;
}

bool functor_data_less(const GFunctor& a, const GFunctor& b) {
    if (a.objMap != b.objMap) return a.objMap < b.objMap;
    return a.morMap < b.morMap;
}

GFunctor identity_functor(std::shared_ptr<const FinGroupoid> g) {
    GFunctor f{g, g, {}, {}};
    f.objMap.resize(g->objectCount);
    std::iota(f.objMap.begin(), f.objMap.end(), 0);
    f.morMap.resize(g->morphismCount());
    std::iota(f.morMap.begin(), f.morMap.end(), 0);
    return f;
}

GFunctor compose_functor(const GFunctor& g, const GFunctor& f) {
    if (f.cod.get() != g.dom.get() && !(*f.cod == *g.dom))
        throw InvalidInput("compose_functor: middle groupoids differ");
    GFunctor h{f.dom, g.cod, {}, {}};
    h.objMap.resize(f.objMap.size());
    for (size_t i = 0; i < f.objMap.size(); ++i) h.objMap[i] = g.objMap[f.objMap[i]];
    h.morMap.resize(f.morMap.size());
    for (size_t i = 0; i < f.morMap.size(); ++i) h.morMap[i] = g.morMap[f.morMap[i]];
    return h;
}

void NatIso::validate() const {
    source.validate();
    target.validate();
    const FinGroupoid& d = *source.dom;
    const FinGroupoid& c = *source.cod;
    if (components.size() != static_cast<size_t>(d.objectCount))
        throw ValidationError("natiso: component count mismatch");
    for (int x = 0; x < d.objectCount; ++x) {
        int comp = components[x];
        if (comp < 0 || comp >= c.morphismCount() || c.src(comp) != source.objMap[x] ||
            c.tgt(comp) != target.objMap[x])
            throw ValidationError("natiso: component at object " + std::to_string(x) + " malformed");
    }
    for (int m = 0; m < d.morphismCount(); ++m) {
        int x = d.src(m), y = d.tgt(m);
        if (c.compose(components[y], source.morMap[m]) != c.compose(target.morMap[m], components[x]))
            throw ValidationError("natiso: naturality fails at morphism " + std::to_string(m));
    }
}

NatIso identity_natiso(const GFunctor& f) {
    NatIso a{f, f, {}};
    a.components.resize(f.objMap.size());
    for (size_t x = 0; x < f.objMap.size(); ++x) a.components[x] = f.cod->identity(f.objMap[x]);
    return a;
}

NatIso compose_natiso(const NatIso& b, const NatIso& a) {
    NatIso r{a.source, b.target, {}};
    r.components.resize(a.components.size());
    for (size_t x = 0; x < a.components.size(); ++x)
        r.components[x] = a.source.cod->compose(b.components[x], a.components[x]);
    return r;
}

NatIso invert_natiso(const NatIso& a) {
    NatIso r{a.target, a.source, {}};
    r.components.resize(a.components.size());
    for (size_t x = 0; x < a.components.size(); ++x)
        r.components[x] = a.source.cod->inverse(a.components[x]);
    return r;
}

NatIso whisker_post(const GFunctor& h, const NatIso& alpha) {
    NatIso r{compose_functor(h, alpha.source), compose_functor(h, alpha.target), {}};
    r.components.resize(alpha.components.size());
    for (size_t x = 0; x < alpha.components.size(); ++x)
        r.components[x] = h.morMap[alpha.components[x]];
    return r;
}

NatIso whisker_pre(const NatIso& alpha, const GFunctor& h) {
    NatIso r{compose_functor(alpha.source, h), compose_functor(alpha.target, h), {}};
    r.components.resize(h.objMap.size());
    for (size_t x = 0; x < h.objMap.size(); ++x)
        r.components[x] = alpha.components[h.objMap[x]];
    return r;
}

namespace {

/// Backtracking morphism assignment for a fixed object map; emits functors in
/// morMap-lexicographic order.
void assign_mor_maps(const std::shared_ptr<const FinGroupoid>& g,
                     const std::shared_ptr<const FinGroupoid>& h, const std::vector<int>& objMap,
                     std::vector<int>& morMap, int next, std::vector<GFunctor>& out) {
    const FinGroupoid& G = *g;
    const FinGroupoid& H = *h;
    if (next == G.morphismCount()) {
        out.push_back(GFunctor{g, h, objMap, morMap});
        return;
    }
    auto consistent = [&](int assigned) {
        // check all composition triples whose members are all decided
        for (int b = 0; b <= assigned; ++b)
            for (int a = 0; a <= assigned; ++a) {
                if (G.tgt(a) != G.src(b)) continue;
                int c = G.compose(b, a);
                if (c > assigned) continue;
                if (H.compose(morMap[b], morMap[a]) != morMap[c]) return false;
            }
        return true;
    };
    int x = G.src(next), y = G.tgt(next);
    bool isIdentity = G.identity(x) == next && x == y;
    for (int cand : H.morphismsBetween(objMap[x], objMap[y])) {
        if (isIdentity && cand != H.identity(objMap[x])) continue;
        morMap[next] = cand;
        if (consistent(next)) assign_mor_maps(g, h, objMap, morMap, next + 1, out);
    }
    morMap[next] = -1;
}

}  // namespace

std::vector<GFunctor> enumerate_functors(std::shared_ptr<const FinGroupoid> g,
                                         std::shared_ptr<const FinGroupoid> h) {
    const FinGroupoid& G = *g;
    const FinGroupoid& H = *h;
    std::uint64_t objSpace =
        sat_pow(static_cast<std::uint64_t>(H.objectCount), static_cast<std::uint64_t>(G.objectCount));
    require_within_cap(objSpace, "enumerate_functors (object maps)");

    // candidate count: per object map, product of per-morphism choices
    std::vector<std::vector<std::uint64_t>> betweenCount(
        static_cast<size_t>(H.objectCount), std::vector<std::uint64_t>(H.objectCount, 0));
    for (int m = 0; m < H.morphismCount(); ++m) ++betweenCount[H.src(m)][H.tgt(m)];

    std::vector<GFunctor> out;
    if (G.objectCount == 0) {
        out.push_back(GFunctor{g, h, {}, {}});
        return out;
    }
    if (H.objectCount == 0) return out;

    std::vector<int> objMap(static_cast<size_t>(G.objectCount), 0);
    std::uint64_t candidates = 0;
    bool done = false;
    while (!done) {
        std::uint64_t prod = 1;
        for (int m = 0; m < G.morphismCount(); ++m)
            prod = sat_mul(prod, betweenCount[objMap[G.src(m)]][objMap[G.tgt(m)]]);
        candidates = candidates == UINT64_MAX ? UINT64_MAX
                                              : (prod == UINT64_MAX ? UINT64_MAX : candidates + prod);
        int i = G.objectCount - 1;
        while (i >= 0 && objMap[i] == H.objectCount - 1) {
            objMap[i] = 0;
            --i;
        }
        if (i < 0)
            done = true;
        else
            ++objMap[i];
    }
    require_within_cap(candidates, "enumerate_functors");

    std::fill(objMap.begin(), objMap.end(), 0);
    done = false;
    while (!done) {
        std::vector<int> morMap(static_cast<size_t>(G.morphismCount()), -1);
        assign_mor_maps(g, h, objMap, morMap, 0, out);
        int i = G.objectCount - 1;
        while (i >= 0 && objMap[i] == H.objectCount - 1) {
            objMap[i] = 0;
            --i;
        }
        if (i < 0)
            done = true;
        else
            ++objMap[i];
    }
    return out;
}

std::vector<std::vector<int>> enumerate_natiso_components(const GFunctor& f, const GFunctor& g) {
    const FinGroupoid& D = *f.dom;
    const FinGroupoid& C = *f.cod;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> options(static_cast<size_t>(D.objectCount));
    for (int x = 0; x < D.objectCount; ++x) {
        options[x] = C.morphismsBetween(f.objMap[x], g.objMap[x]);
        if (options[x].empty()) return out;
    }
    std::vector<int> comp(static_cast<size_t>(D.objectCount), -1);
    std::vector<size_t> pick(static_cast<size_t>(D.objectCount), 0);

    auto natural_so_far = [&](int upto) {
        for (int m = 0; m < D.morphismCount(); ++m) {
            int x = D.src(m), y = D.tgt(m);
            if (x > upto || y > upto) continue;
            if (C.compose(comp[y], f.morMap[m]) != C.compose(g.morMap[m], comp[x])) return false;
        }
        return true;
    };

    int x = 0;
    if (D.objectCount == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        if (pick[x] == options[x].size()) {
            comp[x] = -1;
            if (x == 0) break;
            --x;
            ++pick[x];
            continue;
        }
        comp[x] = options[x][pick[x]];
        if (!natural_so_far(x)) {
            ++pick[x];
            continue;
        }
        if (x == D.objectCount - 1) {
            out.push_back(comp);
            ++pick[x];
            continue;
        }
        ++x;
        pick[x] = 0;
    }
    return out;
}

int FunctorGroupoid::indexOfFunctor(const GFunctor& f) const {
    auto it = std::lower_bound(functors.begin(), functors.end(), f, functor_data_less);
    if (it == functors.end() || !(*it == f)) return -1;
    return static_cast<int>(it - functors.begin());
}

int FunctorGroupoid::indexOfIso(int srcIdx, int tgtIdx, const std::vector<int>& comps) const {
    for (size_t i = 0; i < isos.size(); ++i)
        if (isos[i].srcIdx == srcIdx && isos[i].tgtIdx == tgtIdx && isos[i].components == comps)
            return static_cast<int>(i);
    return -1;
}

FunctorGroupoid functor_groupoid(std::shared_ptr<const FinGroupoid> g,
                                 std::shared_ptr<const FinGroupoid> h) {
    FunctorGroupoid fg;
    fg.dom = g;
    fg.cod = h;
    fg.functors = enumerate_functors(g, h);

    const int n = static_cast<int>(fg.functors.size());
    std::uint64_t isoBudget = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto comps = enumerate_natiso_components(fg.functors[i], fg.functors[j]);
            isoBudget += comps.size();
            require_within_cap(isoBudget, "functor_groupoid (isos)");
            for (auto& c : comps) fg.isos.push_back({i, j, std::move(c)});
        }

    FinGroupoid& G = fg.gpd;
    G.objectCount = n;
    G.morphisms.resize(fg.isos.size());
    for (size_t m = 0; m < fg.isos.size(); ++m)
        G.morphisms[m] = {fg.isos[m].srcIdx, fg.isos[m].tgtIdx};
    G.identities.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> idc(static_cast<size_t>(g->objectCount));
        for (int x = 0; x < g->objectCount; ++x) idc[x] = h->identity(fg.functors[i].objMap[x]);
        int id = fg.indexOfIso(i, i, idc);
        if (id < 0) throw ValidationError("functor_groupoid: identity iso missing");
        G.identities[i] = id;
    }
    const size_t M = fg.isos.size();
    G.compTable.assign(M * M, -1);
    for (size_t b = 0; b < M; ++b)
        for (size_t a = 0; a < M; ++a) {
            if (fg.isos[a].tgtIdx != fg.isos[b].srcIdx) continue;
            std::vector<int> comp(static_cast<size_t>(g->objectCount));
            for (int x = 0; x < g->objectCount; ++x)
                comp[x] = h->compose(fg.isos[b].components[x], fg.isos[a].components[x]);
            int id = fg.indexOfIso(fg.isos[a].srcIdx, fg.isos[b].tgtIdx, comp);
            if (id < 0) throw ValidationError("functor_groupoid: composite iso missing");
            G.compTable[b * M + a] = id;
        }
    G.validate();
    return fg;
}

HomotopyFiber homotopy_fiber(const GFunctor& f, int h) {
    const FinGroupoid& D = *f.dom;
    const FinGroupoid& C = *f.cod;
    if (h < 0 || h >= C.objectCount) throw InvalidInput("homotopy_fiber: object out of range");

    HomotopyFiber hf;
    std::map<std::pair<int, int>, int> pointIndex;
    for (int g = 0; g < D.objectCount; ++g)
        for (int phi : C.morphismsBetween(f.objMap[g], h)) {
            pointIndex[{g, phi}] = static_cast<int>(hf.points.size());
            hf.points.push_back({g, phi});
        }

    FinGroupoid& G = hf.gpd;
    G.objectCount = static_cast<int>(hf.points.size());
    // morphisms: (source point, psi) with phi' = phi . F(psi)^{-1}
    std::map<std::pair<int, int>, int> morIndex;
    for (int p = 0; p < G.objectCount; ++p) {
        auto [gObj, phi] = hf.points[p];
        for (int psi = 0; psi < D.morphismCount(); ++psi) {
            if (D.src(psi) != gObj) continue;
            int phiPrime = C.compose(phi, C.inverse(f.morMap[psi]));
            auto it = pointIndex.find({D.tgt(psi), phiPrime});
            if (it == pointIndex.end())
                throw ValidationError("homotopy_fiber: transported point missing");
            G.morphisms.push_back({p, it->second});
            morIndex[{p, psi}] = static_cast<int>(G.morphisms.size()) - 1;
            hf.morphismSource.push_back({p, psi});
        }
    }
    G.identities.resize(G.objectCount);
    for (int p = 0; p < G.objectCount; ++p)
        G.identities[p] = morIndex.at({p, D.identity(hf.points[p].first)});
    const size_t M = G.morphisms.size();
    G.compTable.assign(M * M, -1);
    for (size_t b = 0; b < M; ++b)
        for (size_t a = 0; a < M; ++a) {
            if (G.morphisms[a].tgt != G.morphisms[b].src) continue;
            int psi = D.compose(hf.morphismSource[b].second, hf.morphismSource[a].second);
            G.compTable[b * M + a] = morIndex.at({hf.morphismSource[a].first, psi});
        }
    G.validate();
    return hf;
}

GpdLevel trunc_level_groupoid(const FinGroupoid& g) {
    if (g.objectCount == 0) return -1;
    auto labels = g.componentLabels();
    bool connected = std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; });
    bool trivialAuts = true;
    for (int x = 0; x < g.objectCount && trivialAuts; ++x) {
        int count = 0;
        for (const auto& m : g.morphisms)
            if (m.src == x && m.tgt == x) ++count;
        if (count > 1) trivialAuts = false;
    }
    if (connected && trivialAuts) return -2;
    if (trivialAuts) return 0;
    return 1;
}

GpdLevel trunc_level_functor(const GFunctor& f) {
    const FinGroupoid& C = *f.cod;
    if (C.objectCount == 0) return -2;  // vacuous maximum
    auto labels = C.componentLabels();
    GpdLevel level = -2;
    for (int h = 0; h < C.objectCount; ++h) {
        if (labels[h] != h) continue;  // one representative per iso class
        level = std::max(level, trunc_level_groupoid(homotopy_fiber(f, h).gpd));
    }
    return level;
}

EquivalenceWitness is_equivalence(const GFunctor& f) {
    EquivalenceWitness w;
    if (trunc_level_functor(f) != -2) return w;
    w.value = true;
    for (const GFunctor& cand : enumerate_functors(f.cod, f.dom)) {
        auto unitComps = enumerate_natiso_components(compose_functor(cand, f), identity_functor(f.dom));
        if (unitComps.empty()) continue;
        auto counitComps =
            enumerate_natiso_components(compose_functor(f, cand), identity_functor(f.cod));
        if (counitComps.empty()) continue;
        w.inverse = cand;
        w.unit = NatIso{compose_functor(cand, f), identity_functor(f.dom), unitComps.front()};
        w.counit = NatIso{compose_functor(f, cand), identity_functor(f.cod), counitComps.front()};
        w.unit->validate();
        w.counit->validate();
        break;
    }
    if (!w.inverse) throw ValidationError("is_equivalence: fiber analysis positive but no inverse found");
    return w;
}

bool is_fully_faithful(const GFunctor& f) {
    const FinGroupoid& D = *f.dom;
    const FinGroupoid& C = *f.cod;
    for (int x = 0; x < D.objectCount; ++x)
        for (int y = 0; y < D.objectCount; ++y) {
            auto dom = D.morphismsBetween(x, y);
            auto cod = C.morphismsBetween(f.objMap[x], f.objMap[y]);
            std::vector<int> image;
            for (int m : dom) image.push_back(f.morMap[m]);
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
            if (image.size() != cod.size()) return false;
        }
    return true;
}

std::vector<int> loop_group(const FinGroupoid& g, int x) {
    if (x < 0 || x >= g.objectCount) throw InvalidInput("loop_group: object out of range");
    return g.morphismsBetween(x, x);
}

namespace fixtures {

FinGroupoid empty_groupoid() {
    FinGroupoid g;
    g.objectCount = 0;
    return g;
}

FinGroupoid point() { return cyclic(1); }

FinGroupoid cyclic(int n) {
    if (n <= 0) throw InvalidInput("cyclic: order must be positive");
    FinGroupoid g;
    g.objectCount = 1;
    g.morphisms.assign(static_cast<size_t>(n), {0, 0});
    g.identities = {0};
    g.compTable.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.compTable[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return g;
}

FinGroupoid chaotic(int n) {
    FinGroupoid g;
    g.objectCount = n;
    g.morphisms.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.morphisms[static_cast<size_t>(a) * n + b] = {a, b};
    g.identities.resize(n);
    for (int a = 0; a < n; ++a) g.identities[a] = a * n + a;
    const size_t M = g.morphisms.size();
    g.compTable.assign(M * M, -1);
    for (size_t f = 0; f < M; ++f)
        for (size_t h = 0; h < M; ++h) {
            if (g.morphisms[f].tgt != g.morphisms[h].src) continue;
            g.compTable[h * M + f] =
                g.morphisms[f].src * n + g.morphisms[h].tgt;
        }
    return g;
}

FinGroupoid sum_groupoid(const FinGroupoid& a, const FinGroupoid& b) {
    FinGroupoid g;
    g.objectCount = a.objectCount + b.objectCount;
    const int oa = a.objectCount;
    const int ma = a.morphismCount();
    for (const auto& m : a.morphisms) g.morphisms.push_back(m);
    for (const auto& m : b.morphisms) g.morphisms.push_back({m.src + oa, m.tgt + oa});
    for (int x = 0; x < oa; ++x) g.identities.push_back(a.identities[x]);
    for (int x = 0; x < b.objectCount; ++x) g.identities.push_back(b.identities[x] + ma);
    const size_t M = g.morphisms.size();
    g.compTable.assign(M * M, -1);
    for (int p = 0; p < a.morphismCount(); ++p)
        for (int q = 0; q < a.morphismCount(); ++q)
            g.compTable[static_cast<size_t>(p) * M + q] =
                a.compTable[static_cast<size_t>(p) * ma + q];
    const int mb = b.morphismCount();
    for (int p = 0; p < mb; ++p)
        for (int q = 0; q < mb; ++q) {
            int r = b.compTable[static_cast<size_t>(p) * mb + q];
            g.compTable[static_cast<size_t>(p + ma) * M + (q + ma)] = r < 0 ? -1 : r + ma;
        }
    return g;
}

FinGroupoid product_groupoid(const FinGroupoid& a, const FinGroupoid& b) {
    FinGroupoid g;
    g.objectCount = a.objectCount * b.objectCount;
    const int mb = b.morphismCount();
    const int ob = b.objectCount;
    for (int p = 0; p < a.morphismCount(); ++p)
        for (int q = 0; q < mb; ++q)
            g.morphisms.push_back(
                {a.src(p) * ob + b.src(q), a.tgt(p) * ob + b.tgt(q)});
    g.identities.resize(g.objectCount);
    for (int x = 0; x < a.objectCount; ++x)
        for (int y = 0; y < ob; ++y)
            g.identities[x * ob + y] = a.identities[x] * mb + b.identities[y];
    const size_t M = g.morphisms.size();
    g.compTable.assign(M * M, -1);
    for (size_t f = 0; f < M; ++f)
        for (size_t h = 0; h < M; ++h) {
            int fa = static_cast<int>(f) / mb, fb = static_cast<int>(f) % mb;
            int ha = static_cast<int>(h) / mb, hb = static_cast<int>(h) % mb;
            if (a.tgt(fa) != a.src(ha) || b.tgt(fb) != b.src(hb)) continue;
            g.compTable[h * M + f] =
                a.compTable[static_cast<size_t>(ha) * a.morphismCount() + fa] * mb +
                b.compTable[static_cast<size_t>(hb) * mb + fb];
        }
    return g;
}

FinGroupoid by_name(const std::string& name) {
    auto parseArg = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        return std::stoi(name.substr(prefix.size()));
    };
    if (name == "empty") return empty_groupoid();
    if (name == "one") return point();
    if (name == "bz2") return cyclic(2);
    if (name == "bz3") return cyclic(3);
    if (auto k = parseArg("bzn:")) return cyclic(*k);
    if (auto k = parseArg("discrete:")) return discrete_groupoid(*k);
    if (auto k = parseArg("chaotic:")) return chaotic(*k);
    if (name == "bz2+one") return sum_groupoid(cyclic(2), point());
    throw InvalidInput("unknown groupoid name: " + name);
}

std::vector<std::string> sweep_names() {
    return {"empty", "one", "discrete:2", "discrete:3", "bz2", "bz3", "chaotic:2", "bz2+one"};
}

}  // namespace fixtures

}  // namespace ncat
