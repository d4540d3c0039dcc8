#include "ncat/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace ncat {

void FiniteOneCategory::validate() const {
    const int n = objectCount;
    if (n < 0) throw ValidationError("category: negative object count");
    if (homSize.size() != static_cast<size_t>(n) * n)
        throw ValidationError("category: hom size table has wrong length");
    for (int s : homSize)
        if (s < 0) throw ValidationError("category: negative hom size");
    if (unit.size() != static_cast<size_t>(n))
        throw ValidationError("category: unit table has wrong length");
    for (int x = 0; x < n; ++x)
        if (unit[x] < 0 || unit[x] >= homAt(x, x))
            throw ValidationError("category: unit out of range");
    if (compTable.size() != static_cast<size_t>(n) * n * n)
        throw ValidationError("category: composition table has wrong length");

    std::uint64_t work = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& t = compTable[tripleIndex(x, y, z)];
                std::uint64_t want = sat_mul(static_cast<std::uint64_t>(homAt(y, z)),
                                             static_cast<std::uint64_t>(homAt(x, y)));
                if (t.size() != want)
                    throw ValidationError("category: composition table entry has wrong length");
                work = sat_add(work, want);
                for (int v : t)
                    if (v < 0 || v >= homAt(x, z))
                        throw ValidationError("category: composite out of range");
            }
    require_within_cap(work, "category axiom check");

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int f = 0; f < homAt(x, y); ++f) {
                if (compose(x, x, y, f, unit[x]) != f)
                    throw ValidationError("category: right unit law fails");
                if (compose(x, y, y, unit[y], f) != f)
                    throw ValidationError("category: left unit law fails");
            }
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int f = 0; f < homAt(w, x); ++f)
                        for (int g = 0; g < homAt(x, y); ++g)
                            for (int h = 0; h < homAt(y, z); ++h)
                                if (compose(w, y, z, h, compose(w, x, y, g, f)) !=
                                    compose(w, x, z, compose(x, y, z, h, g), f))
                                    throw ValidationError("category: associativity fails");
}

FiniteOneCategory monoid_category(const std::vector<int>& mulTable, int unitElem) {
    int n = 0;
    while (static_cast<size_t>(n) * n < mulTable.size()) ++n;
    if (static_cast<size_t>(n) * n != mulTable.size())
        throw InvalidInput("monoid_category: table is not square");
    FiniteOneCategory d;
    d.objectCount = 1;
    d.homSize = {n};
    d.unit = {unitElem};
    d.compTable = {mulTable};
    d.validate();
    return d;
}

std::vector<std::vector<int>> enumerate_monoids(int size) {
    if (size < 1) throw InvalidInput("enumerate_monoids: size must be positive");
    const int n = size;
    const int freeCells = (n - 1) * (n - 1);
    require_within_cap(sat_pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(freeCells)),
                       "monoid tables");

    // free positions (g,f) with g,f >= 1, row-major; unit 0 pins the rest
    std::vector<int> table(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        table[i] = i;              // 0 . i
        table[static_cast<size_t>(i) * n] = i;  // i . 0
    }

    std::vector<std::vector<int>> perms;  // relabelings fixing 0
    {
        std::vector<int> rest(n > 1 ? n - 1 : 0);
        std::iota(rest.begin(), rest.end(), 1);
        do {
            std::vector<int> p(n);
            for (int i = 1; i < n; ++i) p[i] = rest[i - 1];
            perms.push_back(p);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    auto associative = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table[static_cast<size_t>(table[static_cast<size_t>(a) * n + b]) * n + c] !=
                        table[static_cast<size_t>(a) * n + table[static_cast<size_t>(b) * n + c]])
                        return false;
        return true;
    };
    auto canonical = [&]() {
        std::vector<int> relabeled(static_cast<size_t>(n) * n);
        for (const auto& p : perms) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    relabeled[static_cast<size_t>(p[a]) * n + p[b]] = p[table[static_cast<size_t>(a) * n + b]];
            if (std::lexicographical_compare(relabeled.begin(), relabeled.end(), table.begin(),
                                             table.end()))
                return false;
        }
        return true;
    };

    std::vector<std::vector<int>> out;
    std::vector<int> cell(freeCells, 0);
    while (true) {
        for (int i = 0; i < freeCells; ++i)
            table[static_cast<size_t>(1 + i / (n - 1)) * n + 1 + i % (n - 1)] = cell[i];
        if (associative() && canonical()) out.push_back(table);
        int i = freeCells - 1;
        while (i >= 0 && cell[i] == n - 1) cell[i--] = 0;
        if (i < 0) break;
        ++cell[i];
    }
    return out;
}

ConcreteCategory aks_embed(const FiniteOneCategory& d) {
    d.validate();
    const int n = d.objectCount;
    ConcreteCategory c;
    c.objCount = n;

    // objPlus(x): pairs (y, f: y -> x), y-major, f ascending
    std::vector<std::vector<std::pair<int, int>>> pts(n);
    std::vector<std::map<std::pair<int, int>, int>> ptIndex(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            for (int f = 0; f < d.homAt(y, x); ++f) {
                ptIndex[x][{y, f}] = static_cast<int>(pts[x].size());
                pts[x].push_back({y, f});
            }
        c.objPlus.push_back(
            std::make_shared<const FinGroupoid>(discrete_groupoid(static_cast<int>(pts[x].size()))));
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            c.hom.push_back(std::make_shared<const FinGroupoid>(discrete_groupoid(d.homAt(x, y))));
            c.homPrime.push_back(FunctorSpace::make(c.objPlus[x], c.objPlus[y]));
            HomRealisation r;
            for (int f = 0; f < d.homAt(x, y); ++f) {
                std::vector<int> objMap(pts[x].size());
                for (size_t a = 0; a < pts[x].size(); ++a) {
                    auto [z, g] = pts[x][a];
                    objMap[a] = ptIndex[y].at({z, d.compose(z, x, y, f, g)});
                }
                GFunctor gf{c.objPlus[x], c.objPlus[y], objMap, objMap};
                std::uint64_t idx = c.homPrime.back().indexOf(gf);
                r.objMap.push_back(idx);
                r.morMap.push_back(idx);  // discrete space: morphism ids are functor ids
            }
            c.homPlus.push_back(std::move(r));
        }

    // unit acts as the identity by the left unit law
    for (int x = 0; x < n; ++x)
        c.identWitness.push_back({d.unit[x], c.realizedIndex(x, x, d.unit[x])});

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto& t = c.cmpWitness[c.tripleIndex(x, y, z)];
                for (int g = 0; g < d.homAt(y, z); ++g)
                    for (int f = 0; f < d.homAt(x, y); ++f) {
                        int e = d.compose(x, y, z, g, f);
                        // (g.f).h = g.(f.h): composite realisations agree strictly
                        t.push_back({e, c.realizedIndex(x, z, e)});
                    }
            }
    c.validate();
    return c;
}

namespace {

// the slice of morphisms into t: objects (z, eps: z -> t); between any two
// objects exactly one morphism (eps' o psi = eps forces psi), so the shape is
// chaotic and the morphism a -> b has id a*N+b
struct Slice {
    std::vector<std::pair<int, int>> pts;
    std::map<std::pair<int, int>, int> index;
    std::shared_ptr<const FinGroupoid> gpd;
};

Slice make_slice(const FinGroupoid& x, int t) {
    Slice s;
    for (int z = 0; z < x.objectCount; ++z)
        for (int eps : x.morphismsBetween(z, t)) {
            s.index[{z, eps}] = static_cast<int>(s.pts.size());
            s.pts.push_back({z, eps});
        }
    s.gpd = std::make_shared<const FinGroupoid>(fixtures::chaotic(static_cast<int>(s.pts.size())));
    return s;
}

}  // namespace

TypeCategoryResult type_as_category(std::shared_ptr<const FinGroupoid> x) {
    x->validate();
    const FinGroupoid& X = *x;
    const int n = X.objectCount;

    ConcreteCategory c;
    c.objCount = n;
    std::vector<Slice> slices;
    for (int t = 0; t < n; ++t) {
        slices.push_back(make_slice(X, t));
        c.objPlus.push_back(slices.back().gpd);
    }

    std::vector<std::vector<int>> homElems(static_cast<size_t>(n) * n);
    std::vector<std::map<int, int>> elemPos(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto& elems = homElems[c.pairIndex(a, b)];
            elems = X.morphismsBetween(a, b);
            for (size_t k = 0; k < elems.size(); ++k) elemPos[c.pairIndex(a, b)][elems[k]] = static_cast<int>(k);
            c.hom.push_back(
                std::make_shared<const FinGroupoid>(discrete_groupoid(static_cast<int>(elems.size()))));
            c.homPrime.push_back(FunctorSpace::make(c.objPlus[a], c.objPlus[b]));

            const int na = static_cast<int>(slices[a].pts.size());
            const int nb = static_cast<int>(slices[b].pts.size());
            HomRealisation r;
            for (int e : elems) {
                std::vector<int> objMap(na);
                for (int o = 0; o < na; ++o) {
                    auto [z, eps] = slices[a].pts[o];
                    objMap[o] = slices[b].index.at({z, X.compose(e, eps)});
                }
                std::vector<int> morMap(static_cast<size_t>(na) * na);
                for (int s = 0; s < na; ++s)
                    for (int t2 = 0; t2 < na; ++t2)
                        morMap[static_cast<size_t>(s) * na + t2] = objMap[s] * nb + objMap[t2];
                std::uint64_t idx =
                    c.homPrime.back().indexOf(GFunctor{c.objPlus[a], c.objPlus[b], objMap, morMap});
                r.objMap.push_back(idx);
                r.morMap.push_back(c.homPrime.back().identityMorphismAt(idx));
            }
            c.homPlus.push_back(std::move(r));
        }

    for (int t = 0; t < n; ++t) {
        int e = elemPos[c.pairIndex(t, t)].at(X.identity(t));
        // postcomposing with the identity is the identity functor
        c.identWitness.push_back({e, c.space(t, t).identityMorphismAt(c.realizedIndex(t, t, e))});
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d2 = 0; d2 < n; ++d2) {
                auto& t = c.cmpWitness[c.tripleIndex(a, b, d2)];
                const auto& fs = homElems[c.pairIndex(a, b)];
                const auto& gs = homElems[c.pairIndex(b, d2)];
                for (int g : gs)
                    for (int f : fs) {
                        int e = elemPos[c.pairIndex(a, d2)].at(X.compose(g, f));
                        // associativity makes the two postcompositions the same functor
                        std::uint64_t idx = c.realizedIndex(a, d2, e);
                        t.push_back({e, c.space(a, d2).identityMorphismAt(idx)});
                    }
            }
    c.validate();

    TypeCategoryResult out{std::move(c), 0, 1, false};
    out.computedMinimalLevel = conformity_report(out.cat).minimalLevel;
    out.diverges = out.computedMinimalLevel > out.claimedLevel;
    return out;
}

ConcreteCategory truncated_maps_category(std::vector<std::shared_ptr<const FinGroupoid>> objects,
                                         GpdLevel n) {
    if (n < kLevelMinusTwo || n > kLevelOne)
        throw InvalidInput("truncated_maps_category: level out of range");
    for (const auto& g : objects) g->validate();
    const int no = static_cast<int>(objects.size());

    ConcreteCategory c;
    c.objCount = no;
    c.objPlus = objects;
    std::vector<std::vector<std::uint64_t>> kept(static_cast<size_t>(no) * no);
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < no; ++j) {
            c.homPrime.push_back(FunctorSpace::make(objects[i], objects[j]));
            const FunctorSpace& sp = c.homPrime.back();
            require_within_cap(sp.functorCount(), "truncated-maps functor scan");
            auto& k = kept[c.pairIndex(i, j)];
            for (std::uint64_t f = 0; f < sp.functorCount(); ++f)
                if (trunc_level_functor(sp.functorAt(f)) <= n) k.push_back(f);

            HomRealisation r;
            r.objMap = k;
            if (sp.symbolic()) {
                c.hom.push_back(std::make_shared<const FinGroupoid>(
                    discrete_groupoid(static_cast<int>(k.size()))));
                r.morMap = k;
            } else {
                std::vector<int> objs(k.begin(), k.end());
                c.hom.push_back(std::make_shared<const FinGroupoid>(
                    full_subgroupoid(*sp.groupoidPtr(), objs)));
                for (int m : full_subgroupoid_morphisms(*sp.groupoidPtr(), objs))
                    r.morMap.push_back(static_cast<std::uint64_t>(m));
            }
            c.homPlus.push_back(std::move(r));
        }

    for (int i = 0; i < no; ++i) {
        const auto& k = kept[c.pairIndex(i, i)];
        std::uint64_t id = c.space(i, i).identityFunctorIndex();
        auto it = std::lower_bound(k.begin(), k.end(), id);
        if (it == k.end() || *it != id)
            throw ValidationError("truncated_maps_category: identity functor rejected");
        c.identWitness.push_back({static_cast<int>(it - k.begin()),
                                  c.space(i, i).identityMorphismAt(id)});
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(no) * no * no);
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < no; ++j)
            for (int l = 0; l < no; ++l) {
                auto& t = c.cmpWitness[c.tripleIndex(i, j, l)];
                const auto& kl = kept[c.pairIndex(i, l)];
                for (std::uint64_t g : kept[c.pairIndex(j, l)])
                    for (std::uint64_t f : kept[c.pairIndex(i, j)]) {
                        GFunctor comp = compose_functor(c.space(j, l).functorAt(g),
                                                        c.space(i, j).functorAt(f));
                        std::uint64_t idx = c.space(i, l).indexOf(comp);
                        auto it = std::lower_bound(kl.begin(), kl.end(), idx);
                        if (it == kl.end() || *it != idx)
                            throw ValidationError(
                                "truncated_maps_category: kept functors not closed under composition");
                        t.push_back({static_cast<int>(it - kl.begin()),
                                     c.space(i, l).identityMorphismAt(idx)});
                    }
            }
    c.validate();
    return c;
}

namespace {

std::vector<int> natiso_components(const FunctorSpace& sp, std::uint64_t morId) {
    return sp.natisoAt(morId).components;
}

// hom of pointed groupoids: objects (F, phi: F(p) -> q), morphisms the natural
// isomorphisms psi with phi' o psi_p = phi
struct PointedHom {
    FinGroupoid gpd;
    std::vector<std::pair<std::uint64_t, int>> objs;
    std::map<std::pair<std::uint64_t, int>, int> objIndex;
    std::vector<std::uint64_t> morIso;
    std::map<std::tuple<int, int, std::uint64_t>, int> morIndex;
};

PointedHom pointed_hom(const FinGroupoid& bq, int p, int q, const FunctorSpace& sp) {
    require_within_cap(sp.functorCount(), "pointed hom functor scan");
    PointedHom h;
    for (std::uint64_t i = 0; i < sp.functorCount(); ++i) {
        GFunctor f = sp.functorAt(i);
        for (int phi : bq.morphismsBetween(f.objMap[p], q)) {
            h.objIndex[{i, phi}] = static_cast<int>(h.objs.size());
            h.objs.push_back({i, phi});
        }
    }
    const int N = static_cast<int>(h.objs.size());
    h.gpd.objectCount = N;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            auto [ia, phia] = h.objs[a];
            auto [ib, phib] = h.objs[b];
            for (std::uint64_t m : sp.morphismsBetween(ia, ib)) {
                if (bq.compose(phib, natiso_components(sp, m)[p]) != phia) continue;
                h.morIndex[{a, b, m}] = h.gpd.morphismCount();
                h.gpd.morphisms.push_back({a, b});
                h.morIso.push_back(m);
            }
        }
    h.gpd.identities.resize(N);
    for (int a = 0; a < N; ++a)
        h.gpd.identities[a] = h.morIndex.at({a, a, sp.identityMorphismAt(h.objs[a].first)});
    const int M = h.gpd.morphismCount();
    require_within_cap(sat_mul(static_cast<std::uint64_t>(M), static_cast<std::uint64_t>(M)),
                       "pointed hom composition table");
    h.gpd.compTable.assign(static_cast<size_t>(M) * M, -1);
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            if (h.gpd.tgt(f) != h.gpd.src(g)) continue;
            std::uint64_t iso = sp.composeMorphisms(h.morIso[g], h.morIso[f]);
            h.gpd.compTable[static_cast<size_t>(g) * M + f] =
                h.morIndex.at({h.gpd.src(f), h.gpd.tgt(g), iso});
        }
    return h;
}

}  // namespace

PointedResult pointed_category(const std::vector<PointedGroupoid>& ps,
                               std::optional<GpdLevel> truncate) {
    if (truncate && *truncate != kLevelMinusOne)
        throw InvalidInput("pointed_category: only (-1)-truncation is supported");
    const int n = static_cast<int>(ps.size());
    for (const auto& pg : ps) {
        pg.base->validate();
        if (pg.basepoint < 0 || pg.basepoint >= pg.base->objectCount)
            throw InvalidInput("pointed_category: basepoint out of range");
    }

    ConcreteCategory c;
    c.objCount = n;
    for (const auto& pg : ps) c.objPlus.push_back(pg.base);

    std::vector<PointedHom> homs;                                 // plain mode
    std::vector<std::vector<std::uint64_t>> kept(static_cast<size_t>(n) * n);  // truncated mode
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.homPrime.push_back(FunctorSpace::make(ps[i].base, ps[j].base));
            const FunctorSpace& sp = c.homPrime.back();
            HomRealisation r;
            if (!truncate) {
                homs.push_back(pointed_hom(*ps[j].base, ps[i].basepoint, ps[j].basepoint, sp));
                const PointedHom& h = homs.back();
                c.hom.push_back(std::make_shared<const FinGroupoid>(h.gpd));
                for (const auto& [f, phi] : h.objs) r.objMap.push_back(f);
                r.morMap = h.morIso;
            } else {
                require_within_cap(sp.functorCount(), "pointed hom functor scan");
                auto labels = ps[j].base->componentLabels();
                auto& k = kept[c.pairIndex(i, j)];
                for (std::uint64_t f = 0; f < sp.functorCount(); ++f)
                    if (labels[sp.functorAt(f).objMap[ps[i].basepoint]] == labels[ps[j].basepoint])
                        k.push_back(f);
                r.objMap = k;
                if (sp.symbolic()) {
                    c.hom.push_back(std::make_shared<const FinGroupoid>(
                        discrete_groupoid(static_cast<int>(k.size()))));
                    r.morMap = k;
                } else {
                    std::vector<int> objs(k.begin(), k.end());
                    c.hom.push_back(std::make_shared<const FinGroupoid>(
                        full_subgroupoid(*sp.groupoidPtr(), objs)));
                    for (int m : full_subgroupoid_morphisms(*sp.groupoidPtr(), objs))
                        r.morMap.push_back(static_cast<std::uint64_t>(m));
                }
            }
            c.homPlus.push_back(std::move(r));
        }

    for (int i = 0; i < n; ++i) {
        const FunctorSpace& sp = c.space(i, i);
        std::uint64_t id = sp.identityFunctorIndex();
        if (!truncate) {
            int e = homs[c.pairIndex(i, i)].objIndex.at({id, ps[i].base->identity(ps[i].basepoint)});
            c.identWitness.push_back({e, sp.identityMorphismAt(id)});
        } else {
            const auto& k = kept[c.pairIndex(i, i)];
            auto it = std::lower_bound(k.begin(), k.end(), id);
            if (it == k.end() || *it != id)
                throw ValidationError("pointed_category: identity functor rejected");
            c.identWitness.push_back({static_cast<int>(it - k.begin()), sp.identityMorphismAt(id)});
        }
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                auto& t = c.cmpWitness[c.tripleIndex(i, j, l)];
                const int gs = c.homObjCount(j, l), fs = c.homObjCount(i, j);
                for (int g = 0; g < gs; ++g)
                    for (int f = 0; f < fs; ++f) {
                        GFunctor G = c.realizedFunctor(j, l, g);
                        GFunctor F = c.realizedFunctor(i, j, f);
                        std::uint64_t idx = c.space(i, l).indexOf(compose_functor(G, F));
                        if (!truncate) {
                            int phi = homs[c.pairIndex(i, j)].objs[f].second;
                            int gamma = homs[c.pairIndex(j, l)].objs[g].second;
                            // the composite is pointed by gamma o G(phi)
                            int e = homs[c.pairIndex(i, l)].objIndex.at(
                                {idx, ps[l].base->compose(gamma, G.morMap[phi])});
                            t.push_back({e, c.space(i, l).identityMorphismAt(idx)});
                        } else {
                            const auto& k = kept[c.pairIndex(i, l)];
                            auto it = std::lower_bound(k.begin(), k.end(), idx);
                            if (it == k.end() || *it != idx)
                                throw ValidationError(
                                    "pointed_category: kept functors not closed under composition");
                            t.push_back({static_cast<int>(it - k.begin()),
                                         c.space(i, l).identityMorphismAt(idx)});
                        }
                    }
            }
    c.validate();

    PointedResult out;
    ConcretenessReport rep = conformity_report(c);
    out.cat = std::move(c);
    out.minimalLevel = rep.minimalLevel;
    for (const auto& pc : rep.perPair)
        if (pc.level >= kLevelZero)
            out.obstructions.push_back({pc.x, pc.y, pc.witnessFunctor, pc.witnessFiberClasses});
    return out;
}

CombineResult disjoint_union(const ConcreteCategory& a, const ConcreteCategory& b) {
    ConcretenessReport ra = conformity_report(a);
    ConcretenessReport rb = conformity_report(b);
    const int na = a.objCount, nb = b.objCount, n = na + nb;
    auto empty = std::make_shared<const FinGroupoid>(discrete_groupoid(0));

    ConcreteCategory c;
    c.objCount = n;
    for (int i = 0; i < na; ++i) c.objPlus.push_back(a.objPlus[i]);
    for (int j = 0; j < nb; ++j) c.objPlus.push_back(b.objPlus[j]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x < na && y < na) {
                c.hom.push_back(a.hom[a.pairIndex(x, y)]);
                c.homPrime.push_back(a.homPrime[a.pairIndex(x, y)]);
                c.homPlus.push_back(a.homPlus[a.pairIndex(x, y)]);
            } else if (x >= na && y >= na) {
                c.hom.push_back(b.hom[b.pairIndex(x - na, y - na)]);
                c.homPrime.push_back(b.homPrime[b.pairIndex(x - na, y - na)]);
                c.homPlus.push_back(b.homPlus[b.pairIndex(x - na, y - na)]);
            } else {
                c.hom.push_back(empty);
                c.homPrime.push_back(FunctorSpace::make(c.objPlus[x], c.objPlus[y]));
                c.homPlus.push_back({});
            }
        }
    for (int i = 0; i < na; ++i) c.identWitness.push_back(a.identWitness[i]);
    for (int j = 0; j < nb; ++j) c.identWitness.push_back(b.identWitness[j]);

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x < na && y < na && z < na)
                    c.cmpWitness[c.tripleIndex(x, y, z)] = a.cmpWitness[a.tripleIndex(x, y, z)];
                else if (x >= na && y >= na && z >= na)
                    c.cmpWitness[c.tripleIndex(x, y, z)] =
                        b.cmpWitness[b.tripleIndex(x - na, y - na, z - na)];
                // mixed triples have an empty hom factor: nothing to fill
            }

    CombineResult out;
    ConcretenessReport rc = conformity_report(c);
    out.cat = std::move(c);
    out.raisedFromZero = rc.minimalLevel > std::max(ra.minimalLevel, rb.minimalLevel);
    return out;
}

namespace {

GFunctor sum_functor(const GFunctor& fa, const GFunctor& fb,
                     std::shared_ptr<const FinGroupoid> dom,
                     std::shared_ptr<const FinGroupoid> cod) {
    const int oaDom = fa.dom->objectCount, maDom = fa.dom->morphismCount();
    const int oaCod = fa.cod->objectCount, maCod = fa.cod->morphismCount();
    GFunctor s{dom, cod, {}, {}};
    s.objMap.resize(dom->objectCount);
    s.morMap.resize(dom->morphismCount());
    for (int o = 0; o < dom->objectCount; ++o)
        s.objMap[o] = o < oaDom ? fa.objMap[o] : oaCod + fb.objMap[o - oaDom];
    for (int m = 0; m < dom->morphismCount(); ++m)
        s.morMap[m] = m < maDom ? fa.morMap[m] : maCod + fb.morMap[m - maDom];
    return s;
}

std::uint64_t sum_natiso_index(const FunctorSpace& sp, const GFunctor& src, const GFunctor& tgt,
                               const std::vector<int>& compsA, const std::vector<int>& compsB,
                               int maCod) {
    if (sp.symbolic()) return sp.indexOf(src);  // only identity isos exist there
    std::vector<int> comps;
    comps.reserve(compsA.size() + compsB.size());
    for (int v : compsA) comps.push_back(v);
    for (int v : compsB) comps.push_back(maCod + v);
    return sp.indexOfNatIso(NatIso{src, tgt, comps});
}

}  // namespace

CombineResult product_category(const ConcreteCategory& a, const ConcreteCategory& b) {
    ConcretenessReport ra = conformity_report(a);
    ConcretenessReport rb = conformity_report(b);
    const int na = a.objCount, nb = b.objCount, n = na * nb;

    ConcreteCategory c;
    c.objCount = n;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            c.objPlus.push_back(std::make_shared<const FinGroupoid>(
                fixtures::sum_groupoid(*a.objPlus[i], *b.objPlus[j])));

    auto fa = [&](int x) { return x / nb; };
    auto fb = [&](int x) { return x % nb; };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int i = fa(x), j = fb(x), k = fa(y), l = fb(y);
            c.hom.push_back(std::make_shared<const FinGroupoid>(
                fixtures::product_groupoid(a.homAt(i, k), b.homAt(j, l))));
            c.homPrime.push_back(FunctorSpace::make(c.objPlus[x], c.objPlus[y]));
            const FunctorSpace& sp = c.homPrime.back();
            const FunctorSpace& spa = a.space(i, k);
            const FunctorSpace& spb = b.space(j, l);
            const int obB = b.homObjCount(j, l);
            const int maCod = a.objPlus[k]->morphismCount();

            HomRealisation r;
            const int homObjs = c.homObjCount(x, y);
            for (int e = 0; e < homObjs; ++e) {
                GFunctor s = sum_functor(a.realizedFunctor(i, k, e / obB),
                                         b.realizedFunctor(j, l, e % obB), c.objPlus[x],
                                         c.objPlus[y]);
                r.objMap.push_back(sp.indexOf(s));
            }
            const int mbHom = b.homAt(j, l).morphismCount();
            const auto& homG = c.homAt(x, y);
            for (int m = 0; m < homG.morphismCount(); ++m) {
                const int pa = m / mbHom, qb = m % mbHom;
                NatIso natA = spa.natisoAt(a.homPlus[a.pairIndex(i, k)].morMap[pa]);
                NatIso natB = spb.natisoAt(b.homPlus[b.pairIndex(j, l)].morMap[qb]);
                GFunctor src = sum_functor(natA.source, natB.source, c.objPlus[x], c.objPlus[y]);
                GFunctor tgt = sum_functor(natA.target, natB.target, c.objPlus[x], c.objPlus[y]);
                r.morMap.push_back(
                    sum_natiso_index(sp, src, tgt, natA.components, natB.components, maCod));
            }
            c.homPlus.push_back(std::move(r));
        }

    for (int x = 0; x < n; ++x) {
        const int i = fa(x), j = fb(x);
        const FunctorSpace& sp = c.space(x, x);
        int e = a.ident(i) * b.homObjCount(j, j) + b.ident(j);
        NatIso natA = a.space(i, i).natisoAt(a.identWitness[i].path);
        NatIso natB = b.space(j, j).natisoAt(b.identWitness[j].path);
        GFunctor src = sum_functor(natA.source, natB.source, c.objPlus[x], c.objPlus[x]);
        GFunctor tgt = sum_functor(natA.target, natB.target, c.objPlus[x], c.objPlus[x]);
        c.identWitness.push_back({e, sum_natiso_index(sp, src, tgt, natA.components, natB.components,
                                                      a.objPlus[i]->morphismCount())});
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int i = fa(x), j = fb(x), k = fa(y), l = fb(y), u = fa(z), v = fb(z);
                auto& t = c.cmpWitness[c.tripleIndex(x, y, z)];
                const FunctorSpace& sp = c.space(x, z);
                const int maCod = a.objPlus[u]->morphismCount();
                const int gsA = a.homObjCount(k, u), gsB = b.homObjCount(l, v);
                const int fsA = a.homObjCount(i, k), fsB = b.homObjCount(j, l);
                for (int ga = 0; ga < gsA; ++ga)
                    for (int gb = 0; gb < gsB; ++gb)
                        for (int faE = 0; faE < fsA; ++faE)
                            for (int fbE = 0; fbE < fsB; ++fbE) {
                                const FiberElement& wa = a.cmpAt(i, k, u, ga, faE);
                                const FiberElement& wb = b.cmpAt(j, l, v, gb, fbE);
                                int e = wa.element * b.homObjCount(j, v) + wb.element;
                                NatIso natA = a.space(i, u).natisoAt(wa.path);
                                NatIso natB = b.space(j, v).natisoAt(wb.path);
                                GFunctor src = sum_functor(natA.source, natB.source, c.objPlus[x],
                                                           c.objPlus[z]);
                                GFunctor tgt = sum_functor(natA.target, natB.target, c.objPlus[x],
                                                           c.objPlus[z]);
                                t.push_back({e, sum_natiso_index(sp, src, tgt, natA.components,
                                                                 natB.components, maCod)});
                            }
            }

    CombineResult out;
    ConcretenessReport rc = conformity_report(c);
    out.cat = std::move(c);
    out.raisedFromZero = rc.minimalLevel > std::max(ra.minimalLevel, rb.minimalLevel);
    return out;
}

}  // namespace ncat
