#include "ncat/concat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ncat {

namespace {

int component_count(const FinGroupoid& g) {
    auto labels = g.componentLabels();
    std::set<int> distinct(labels.begin(), labels.end());
    return static_cast<int>(distinct.size());
}

std::string pair_name(int x, int y) {
    std::ostringstream os;
    os << "(" << x << "," << y << ")";
    return os.str();
}

}  // namespace

std::uint64_t ConcreteCategory::composeRealized(int x, int y, int z, int g, int f) const {
    GFunctor comp = compose_functor(realizedFunctor(y, z, g), realizedFunctor(x, y, f));
    return space(x, z).indexOf(comp);
}

void ConcreteCategory::validate() const {
    if (objCount < 0) throw ValidationError("category: negative object count");
    const size_t n = static_cast<size_t>(objCount);
    if (objPlus.size() != n) throw ValidationError("category: objPlus size mismatch");
    if (hom.size() != n * n) throw ValidationError("category: hom size mismatch");
    if (homPrime.size() != n * n) throw ValidationError("category: homPrime size mismatch");
    if (homPlus.size() != n * n) throw ValidationError("category: homPlus size mismatch");
    if (identWitness.size() != n) throw ValidationError("category: identity witness size mismatch");
    if (cmpWitness.size() != n * n * n)
        throw ValidationError("category: composition witness size mismatch");

    for (int x = 0; x < objCount; ++x) {
        if (!objPlus[x]) throw ValidationError("category: missing object groupoid " + std::to_string(x));
        objPlus[x]->validate();
    }

    for (int x = 0; x < objCount; ++x)
        for (int y = 0; y < objCount; ++y) {
            const size_t p = pairIndex(x, y);
            if (!hom[p]) throw ValidationError("category: missing hom groupoid " + pair_name(x, y));
            hom[p]->validate();
            const FinGroupoid& hg = *hom[p];
            const FunctorSpace& sp = homPrime[p];
            if (!(*sp.domain() == *objPlus[x]) || !(*sp.codomain() == *objPlus[y]))
                throw ValidationError("category: functor space endpoints wrong at " + pair_name(x, y));
            const HomRealisation& real = homPlus[p];
            if (real.objMap.size() != static_cast<size_t>(hg.objectCount) ||
                real.morMap.size() != static_cast<size_t>(hg.morphismCount()))
                throw ValidationError("category: realisation size mismatch at " + pair_name(x, y));
            for (std::uint64_t v : real.objMap)
                if (v >= sp.functorCount())
                    throw ValidationError("category: realisation object out of range at " + pair_name(x, y));
            for (int m = 0; m < hg.morphismCount(); ++m) {
                if (real.morMap[m] >= sp.morphismCount())
                    throw ValidationError("category: realisation morphism out of range at " + pair_name(x, y));
                auto view = sp.morphism(real.morMap[m]);
                if (view.src != real.objMap[hg.morphisms[m].src] ||
                    view.tgt != real.objMap[hg.morphisms[m].tgt])
                    throw ValidationError("category: realisation not functorial on endpoints at " +
                                          pair_name(x, y));
            }
            for (int o = 0; o < hg.objectCount; ++o)
                if (real.morMap[hg.identities[o]] != sp.identityMorphismAt(real.objMap[o]))
                    throw ValidationError("category: realisation drops identity at " + pair_name(x, y));
            const int mc = hg.morphismCount();
            for (int b = 0; b < mc; ++b)
                for (int a = 0; a < mc; ++a) {
                    int comp = hg.compTable[static_cast<size_t>(b) * mc + a];
                    if (comp < 0) continue;
                    if (real.morMap[comp] != sp.composeMorphisms(real.morMap[b], real.morMap[a]))
                        throw ValidationError("category: realisation not functorial on composition at " +
                                              pair_name(x, y));
                }
        }

    for (int x = 0; x < objCount; ++x) {
        const FiberElement& w = identWitness[x];
        const FinGroupoid& hg = homAt(x, x);
        const FunctorSpace& sp = space(x, x);
        if (w.element < 0 || w.element >= hg.objectCount)
            throw ValidationError("category: identity element out of range at object " + std::to_string(x));
        if (w.path >= sp.morphismCount())
            throw ValidationError("category: identity path out of range at object " + std::to_string(x));
        auto view = sp.morphism(w.path);
        if (view.src != realizedIndex(x, x, w.element) || view.tgt != sp.identityFunctorIndex())
            throw ValidationError("category: identity path endpoints wrong at object " + std::to_string(x));
    }

    for (int x = 0; x < objCount; ++x)
        for (int y = 0; y < objCount; ++y)
            for (int z = 0; z < objCount; ++z) {
                const auto& table = cmpWitness[tripleIndex(x, y, z)];
                const size_t want = static_cast<size_t>(homObjCount(y, z)) * homObjCount(x, y);
                if (table.size() != want)
                    throw ValidationError("category: composition table size mismatch at triple (" +
                                          std::to_string(x) + "," + std::to_string(y) + "," +
                                          std::to_string(z) + ")");
                const FinGroupoid& hgXZ = homAt(x, z);
                const FunctorSpace& sp = space(x, z);
                for (int g = 0; g < homObjCount(y, z); ++g)
                    for (int f = 0; f < homObjCount(x, y); ++f) {
                        const FiberElement& w = table[static_cast<size_t>(g) * homObjCount(x, y) + f];
                        if (w.element < 0 || w.element >= hgXZ.objectCount)
                            throw ValidationError("category: composite out of range at triple (" +
                                                  std::to_string(x) + "," + std::to_string(y) + "," +
                                                  std::to_string(z) + ")");
                        if (w.path >= sp.morphismCount())
                            throw ValidationError("category: composition path out of range at triple (" +
                                                  std::to_string(x) + "," + std::to_string(y) + "," +
                                                  std::to_string(z) + ")");
                        auto view = sp.morphism(w.path);
                        if (view.src != realizedIndex(x, z, w.element) ||
                            view.tgt != composeRealized(x, y, z, g, f))
                            throw ValidationError("category: composition path endpoints wrong at triple (" +
                                                  std::to_string(x) + "," + std::to_string(y) + "," +
                                                  std::to_string(z) + ") elements g=" + std::to_string(g) +
                                                  " f=" + std::to_string(f));
                    }
            }
}

void require_witness_budget(const ConcreteCategory& c) {
    std::uint64_t entries = 0;
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y)
            for (int z = 0; z < c.objCount; ++z)
                entries = sat_add(entries, sat_mul(static_cast<std::uint64_t>(c.homObjCount(y, z)),
                                                   static_cast<std::uint64_t>(c.homObjCount(x, y))));
    require_within_cap(entries, "composition witness tables");
}

std::vector<PairConformity> pair_conformity(const ConcreteCategory& c) {
    std::vector<PairConformity> out;
    out.reserve(static_cast<size_t>(c.objCount) * c.objCount);
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            const FunctorSpace& sp = c.space(x, y);
            const FinGroupoid& hg = c.homAt(x, y);
            const HomRealisation& real = c.homPlus[c.pairIndex(x, y)];
            PairConformity pc;
            pc.x = x;
            pc.y = y;
            if (sp.functorCount() == 0) {
                out.push_back(pc);
                continue;
            }
            GpdLevel best = kLevelMinusTwo;
            bool haveWitness = false;
            auto consider = [&](std::uint64_t fn, GpdLevel lv, int pts, int cls) {
                if (!haveWitness || lv > best) {
                    pc.witnessFunctor = fn;
                    pc.witnessFiberPoints = pts;
                    pc.witnessFiberClasses = cls;
                    haveWitness = true;
                }
                best = std::max(best, lv);
            };
            if (sp.symbolic()) {
                // Discrete endpoints: the fiber at a table is the full subgroupoid
                // of hom on its realisation preimage. Image points are inspected
                // in ascending order; one empty fiber stands in for all the
                // functors outside the image.
                std::map<std::uint64_t, std::vector<int>> groups;
                for (int o = 0; o < hg.objectCount; ++o) groups[real.objMap[o]].push_back(o);
                for (const auto& kv : groups) {
                    FinGroupoid sub = full_subgroupoid(hg, kv.second);
                    consider(kv.first, trunc_level_groupoid(sub), static_cast<int>(kv.second.size()),
                             component_count(sub));
                }
                if (static_cast<std::uint64_t>(groups.size()) < sp.functorCount()) {
                    std::uint64_t miss = 0;
                    while (groups.count(miss)) ++miss;
                    consider(miss, kLevelMinusOne, 0, 0);
                }
            } else {
                GFunctor phi;
                phi.dom = c.hom[c.pairIndex(x, y)];
                phi.cod = sp.groupoidPtr();
                phi.objMap.assign(real.objMap.begin(), real.objMap.end());
                phi.morMap.assign(real.morMap.begin(), real.morMap.end());
                for (std::uint64_t rep : sp.isoClassRepresentatives()) {
                    HomotopyFiber fib = homotopy_fiber(phi, static_cast<int>(rep));
                    consider(rep, trunc_level_groupoid(fib.gpd),
                             static_cast<int>(fib.points.size()), component_count(fib.gpd));
                }
            }
            pc.level = best;
            out.push_back(pc);
        }
    return out;
}

bool realisation_injective(const ConcreteCategory& c) {
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            const auto& objMap = c.homPlus[c.pairIndex(x, y)].objMap;
            std::set<std::uint64_t> seen(objMap.begin(), objMap.end());
            if (seen.size() != objMap.size()) return false;
        }
    return true;
}

namespace {

NatIso path_iso(const ConcreteCategory& c, int x, int y, std::uint64_t pathId) {
    return c.space(x, y).natisoAt(pathId);
}

/// First hom-groupoid morphism src -> tgt realizing the given space morphism.
std::optional<int> lift_iso(const ConcreteCategory& c, int x, int y, int srcObj, int tgtObj,
                            std::uint64_t natId) {
    const HomRealisation& real = c.homPlus[c.pairIndex(x, y)];
    for (int m : c.homAt(x, y).morphismsBetween(srcObj, tgtObj))
        if (real.morMap[m] == natId) return m;
    return std::nullopt;
}

struct Lifted {
    int src = -1;
    int tgt = -1;
    std::optional<int> cell;
};

/// Associator cell cmp(cmp(h,g),f) -> cmp(h,cmp(g,f)) for h : z -> w,
/// g : y -> z, f : x -> y, derived from the composition paths.
Lifted derived_associator(const ConcreteCategory& c, int x, int y, int z, int w, int h, int g,
                          int f) {
    const FunctorSpace& sp = c.space(x, w);
    int hg = c.cmp(y, z, w, h, g);
    int gf = c.cmp(x, y, z, g, f);
    int lhs = c.cmp(x, y, w, hg, f);
    int rhs = c.cmp(x, z, w, h, gf);

    GFunctor F = c.realizedFunctor(x, y, f);
    GFunctor H = c.realizedFunctor(z, w, h);

    NatIso side1 = compose_natiso(whisker_pre(path_iso(c, y, w, c.cmpAt(y, z, w, h, g).path), F),
                                  path_iso(c, x, w, c.cmpAt(x, y, w, hg, f).path));
    NatIso side2 = compose_natiso(whisker_post(H, path_iso(c, x, z, c.cmpAt(x, y, z, g, f).path)),
                                  path_iso(c, x, w, c.cmpAt(x, z, w, h, gf).path));
    NatIso alpha = compose_natiso(invert_natiso(side2), side1);
    return {lhs, rhs, lift_iso(c, x, w, lhs, rhs, sp.indexOfNatIso(alpha))};
}

/// Left unitor cell cmp(ident y, f) -> f.
Lifted derived_left_unitor(const ConcreteCategory& c, int x, int y, int f) {
    int iy = c.ident(y);
    int lu = c.cmp(x, y, y, iy, f);
    GFunctor F = c.realizedFunctor(x, y, f);
    NatIso step = compose_natiso(whisker_pre(path_iso(c, y, y, c.identWitness[y].path), F),
                                 path_iso(c, x, y, c.cmpAt(x, y, y, iy, f).path));
    return {lu, f, lift_iso(c, x, y, lu, f, c.space(x, y).indexOfNatIso(step))};
}

/// Right unitor cell cmp(f, ident x) -> f.
Lifted derived_right_unitor(const ConcreteCategory& c, int x, int y, int f) {
    int ix = c.ident(x);
    int ru = c.cmp(x, x, y, f, ix);
    GFunctor F = c.realizedFunctor(x, y, f);
    NatIso step = compose_natiso(whisker_post(F, path_iso(c, x, x, c.identWitness[x].path)),
                                 path_iso(c, x, y, c.cmpAt(x, x, y, f, ix).path));
    return {ru, f, lift_iso(c, x, y, ru, f, c.space(x, y).indexOfNatIso(step))};
}

/// psi : a -> a' in hom(y,z) whiskered by f : x -> y, as a cell
/// cmp(a,f) -> cmp(a',f) in hom(x,z).
std::optional<int> whisker_cell_right(const ConcreteCategory& c, int x, int y, int z, int psi,
                                      int f) {
    const FinGroupoid& hgYZ = c.homAt(y, z);
    int a = hgYZ.morphisms[psi].src;
    int a2 = hgYZ.morphisms[psi].tgt;
    int ca = c.cmp(x, y, z, a, f);
    int ca2 = c.cmp(x, y, z, a2, f);
    GFunctor F = c.realizedFunctor(x, y, f);
    NatIso theta = c.space(y, z).natisoAt(c.homPlus[c.pairIndex(y, z)].morMap[psi]);
    NatIso res = compose_natiso(
        invert_natiso(path_iso(c, x, z, c.cmpAt(x, y, z, a2, f).path)),
        compose_natiso(whisker_pre(theta, F), path_iso(c, x, z, c.cmpAt(x, y, z, a, f).path)));
    return lift_iso(c, x, z, ca, ca2, c.space(x, z).indexOfNatIso(res));
}

/// psi : a -> a' in hom(x,y) whiskered by h : y -> z, as a cell
/// cmp(h,a) -> cmp(h,a') in hom(x,z).
std::optional<int> whisker_cell_left(const ConcreteCategory& c, int x, int y, int z, int h,
                                     int psi) {
    const FinGroupoid& hgXY = c.homAt(x, y);
    int a = hgXY.morphisms[psi].src;
    int a2 = hgXY.morphisms[psi].tgt;
    int ha = c.cmp(x, y, z, h, a);
    int ha2 = c.cmp(x, y, z, h, a2);
    GFunctor H = c.realizedFunctor(y, z, h);
    NatIso theta = c.space(x, y).natisoAt(c.homPlus[c.pairIndex(x, y)].morMap[psi]);
    NatIso res = compose_natiso(
        invert_natiso(path_iso(c, x, z, c.cmpAt(x, y, z, h, a2).path)),
        compose_natiso(whisker_post(H, theta), path_iso(c, x, z, c.cmpAt(x, y, z, h, a).path)));
    return lift_iso(c, x, z, ha, ha2, c.space(x, z).indexOfNatIso(res));
}

void add_violation(LawReport& rep, std::string law, std::vector<int> objects,
                   std::vector<int> elements, std::string detail) {
    rep.passed = false;
    rep.violations.push_back({std::move(law), std::move(objects), std::move(elements),
                              std::move(detail)});
}

}  // namespace

LawReport check_unit_assoc(const ConcreteCategory& c) {
    LawReport rep;
    rep.checked = true;
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            const FinGroupoid& hg = c.homAt(x, y);
            for (int f = 0; f < hg.objectCount; ++f) {
                int lu = c.cmp(x, y, y, c.ident(y), f);
                if (hg.morphismsBetween(lu, f).empty())
                    add_violation(rep, "left-unit", {x, y}, {f, lu},
                                  "composite with the identity is not isomorphic to the element");
                int ru = c.cmp(x, x, y, f, c.ident(x));
                if (hg.morphismsBetween(ru, f).empty())
                    add_violation(rep, "right-unit", {x, y}, {f, ru},
                                  "composite with the identity is not isomorphic to the element");
            }
        }
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            if (c.homObjCount(x, y) == 0) continue;
            for (int z = 0; z < c.objCount; ++z) {
                if (c.homObjCount(y, z) == 0) continue;
                for (int w = 0; w < c.objCount; ++w) {
                    if (c.homObjCount(z, w) == 0) continue;
                    const FinGroupoid& hgXW = c.homAt(x, w);
                    for (int h = 0; h < c.homObjCount(z, w); ++h)
                        for (int g = 0; g < c.homObjCount(y, z); ++g)
                            for (int f = 0; f < c.homObjCount(x, y); ++f) {
                                int lhs = c.cmp(x, y, w, c.cmp(y, z, w, h, g), f);
                                int rhs = c.cmp(x, z, w, h, c.cmp(x, y, z, g, f));
                                if (hgXW.morphismsBetween(lhs, rhs).empty())
                                    add_violation(rep, "associativity", {x, y, z, w}, {h, g, f},
                                                  "the two bracketings are not isomorphic");
                            }
                }
            }
        }
    return rep;
}

LawReport check_pentagon_triangle(const ConcreteCategory& c) {
    LawReport rep;
    rep.checked = true;

    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            if (c.homObjCount(x, y) == 0) continue;
            for (int z = 0; z < c.objCount; ++z) {
                if (c.homObjCount(y, z) == 0) continue;
                const FinGroupoid& hgXZ = c.homAt(x, z);
                for (int g = 0; g < c.homObjCount(y, z); ++g)
                    for (int f = 0; f < c.homObjCount(x, y); ++f) {
                        Lifted assoc = derived_associator(c, x, y, y, z, g, c.ident(y), f);
                        Lifted lam = derived_left_unitor(c, x, y, f);
                        Lifted rho = derived_right_unitor(c, y, z, g);
                        if (!assoc.cell || !lam.cell || !rho.cell) {
                            add_violation(rep, "triangle", {x, y, z}, {g, f},
                                          "a required 2-cell has no lift through the realisation");
                            continue;
                        }
                        auto left = whisker_cell_left(c, x, y, z, g, *lam.cell);
                        auto right = whisker_cell_right(c, x, y, z, *rho.cell, f);
                        if (!left || !right) {
                            add_violation(rep, "triangle", {x, y, z}, {g, f},
                                          "a whiskered 2-cell has no lift through the realisation");
                            continue;
                        }
                        int route1 = hgXZ.compose(*left, *assoc.cell);
                        if (route1 < 0 || route1 != *right)
                            add_violation(rep, "triangle", {x, y, z}, {g, f},
                                          "unitor routes disagree");
                    }
            }
        }

    for (int x0 = 0; x0 < c.objCount; ++x0)
        for (int x1 = 0; x1 < c.objCount; ++x1) {
            if (c.homObjCount(x0, x1) == 0) continue;
            for (int x2 = 0; x2 < c.objCount; ++x2) {
                if (c.homObjCount(x1, x2) == 0) continue;
                for (int x3 = 0; x3 < c.objCount; ++x3) {
                    if (c.homObjCount(x2, x3) == 0) continue;
                    for (int x4 = 0; x4 < c.objCount; ++x4) {
                        if (c.homObjCount(x3, x4) == 0) continue;
                        const FinGroupoid& hgOuter = c.homAt(x0, x4);
                        for (int f4 = 0; f4 < c.homObjCount(x3, x4); ++f4)
                            for (int f3 = 0; f3 < c.homObjCount(x2, x3); ++f3)
                                for (int f2 = 0; f2 < c.homObjCount(x1, x2); ++f2)
                                    for (int f1 = 0; f1 < c.homObjCount(x0, x1); ++f1) {
                                        int f43 = c.cmp(x2, x3, x4, f4, f3);
                                        int f32 = c.cmp(x1, x2, x3, f3, f2);
                                        int f21 = c.cmp(x0, x1, x2, f2, f1);
                                        Lifted aTop = derived_associator(c, x1, x2, x3, x4, f4, f3, f2);
                                        Lifted aMid = derived_associator(c, x0, x1, x3, x4, f4, f32, f1);
                                        Lifted aBot = derived_associator(c, x0, x1, x2, x3, f3, f2, f1);
                                        Lifted b1 = derived_associator(c, x0, x1, x2, x4, f43, f2, f1);
                                        Lifted b2 = derived_associator(c, x0, x2, x3, x4, f4, f3, f21);
                                        if (!aTop.cell || !aMid.cell || !aBot.cell || !b1.cell ||
                                            !b2.cell) {
                                            add_violation(rep, "pentagon", {x0, x1, x2, x3, x4},
                                                          {f4, f3, f2, f1},
                                                          "an associator has no lift through the realisation");
                                            continue;
                                        }
                                        auto a1 = whisker_cell_right(c, x0, x1, x4, *aTop.cell, f1);
                                        auto a3 = whisker_cell_left(c, x0, x3, x4, f4, *aBot.cell);
                                        if (!a1 || !a3) {
                                            add_violation(rep, "pentagon", {x0, x1, x2, x3, x4},
                                                          {f4, f3, f2, f1},
                                                          "a whiskered associator has no lift through the realisation");
                                            continue;
                                        }
                                        int chainA = hgOuter.compose(*a3, hgOuter.compose(*aMid.cell, *a1));
                                        int chainB = hgOuter.compose(*b2.cell, *b1.cell);
                                        if (chainA < 0 || chainB < 0 || chainA != chainB)
                                            add_violation(rep, "pentagon", {x0, x1, x2, x3, x4},
                                                          {f4, f3, f2, f1}, "associator routes disagree");
                                    }
                    }
                }
            }
        }
    return rep;
}

namespace {

ConcretenessReport report_at(const ConcreteCategory& c, std::optional<int> level) {
    c.validate();
    ConcretenessReport r;
    r.perPair = pair_conformity(c);
    r.maxFiberLevel = kLevelMinusTwo;
    for (const PairConformity& pc : r.perPair) r.maxFiberLevel = std::max(r.maxFiberLevel, pc.level);
    r.minimalLevel = std::max(0, 2 + r.maxFiberLevel);
    int k = level ? *level : r.minimalLevel;
    if (k < 0 || k > 3) throw InvalidInput("certify: levels outside 0..3 are not modelled");
    r.checkedLevel = k;
    if (k < r.minimalLevel) {
        // the conformity witnesses in perPair show why; no law suite can rescue it
        r.certified = false;
        return r;
    }
    bool ok = true;
    if (k >= 2) {
        r.unitAssoc = check_unit_assoc(c);
        ok = ok && r.unitAssoc.passed;
    }
    if (k >= 3) {
        r.pentagonTriangle = check_pentagon_triangle(c);
        ok = ok && r.pentagonTriangle.passed;
    }
    r.certified = ok;
    return r;
}

}  // namespace

ConcretenessReport conformity_report(const ConcreteCategory& c) { return report_at(c, std::nullopt); }

ConcretenessReport certify_at(const ConcreteCategory& c, int level) { return report_at(c, level); }

ConcretenessReport raise_level(const ConcreteCategory& c, int level) { return report_at(c, level); }

CatEquivWitness cat_is_equiv(const ConcreteCategory& c, int x, int y, int f, int level) {
    if (level < 0 || level > 2) throw InvalidInput("equivalence level must be 0, 1 or 2");
    if (x < 0 || x >= c.objCount || y < 0 || y >= c.objCount)
        throw InvalidInput("equivalence: object out of range");
    if (f < 0 || f >= c.homObjCount(x, y)) throw InvalidInput("equivalence: element out of range");

    CatEquivWitness w;
    w.level = level;
    GFunctor F = c.realizedFunctor(x, y, f);
    if (trunc_level_functor(F) != kLevelMinusTwo) return w;
    w.realizedEquivalence = true;

    const FunctorSpace& spYX = c.space(y, x);
    if (spYX.symbolic()) {
        std::vector<int> inv(F.objMap.size());
        for (size_t i = 0; i < F.objMap.size(); ++i) inv[F.objMap[i]] = static_cast<int>(i);
        GFunctor G{c.objPlus[y], c.objPlus[x], inv, inv};
        w.realizedInverse = spYX.indexOf(G);
    } else {
        GFunctor idX = identity_functor(c.objPlus[x]);
        GFunctor idY = identity_functor(c.objPlus[y]);
        for (std::uint64_t idx = 0; idx < spYX.functorCount(); ++idx) {
            GFunctor G = spYX.functorAt(idx);
            if (!enumerate_natiso_components(compose_functor(G, F), idX).empty() &&
                !enumerate_natiso_components(compose_functor(F, G), idY).empty()) {
                w.realizedInverse = idx;
                break;
            }
        }
        if (!w.realizedInverse)
            throw ValidationError("equivalence: realized inverse exists but was not found");
    }
    if (level == 0) {
        w.value = true;
        return w;
    }

    const FinGroupoid& homYX = c.homAt(y, x);
    const FinGroupoid& homXX = c.homAt(x, x);
    const FinGroupoid& homYY = c.homAt(y, y);
    for (int g = 0; g < homYX.objectCount && !w.leftInverse; ++g) {
        auto isos = homXX.morphismsBetween(c.cmp(x, y, x, g, f), c.ident(x));
        if (!isos.empty()) {
            w.leftInverse = g;
            w.leftIdentityIso = isos.front();
        }
    }
    for (int g = 0; g < homYX.objectCount && !w.rightInverse; ++g) {
        auto isos = homYY.morphismsBetween(c.cmp(y, x, y, f, g), c.ident(y));
        if (!isos.empty()) {
            w.rightInverse = g;
            w.rightIdentityIso = isos.front();
        }
    }
    if (!w.leftInverse || !w.rightInverse) return w;

    auto paths = spYX.morphismsBetween(c.realizedIndex(y, x, *w.leftInverse), *w.realizedInverse);
    if (paths.empty())
        throw ValidationError("equivalence: inverse element does not realize the functor inverse");
    w.inverseFiber = FiberElement{*w.leftInverse, paths.front()};
    w.value = true;
    return w;
}

UnivalenceReport check_univalent(const ConcreteCategory& c) {
    auto pairs = pair_conformity(c);
    GpdLevel maxLevel = kLevelMinusTwo;
    for (const auto& pc : pairs) maxLevel = std::max(maxLevel, pc.level);
    UnivalenceReport r;
    r.levelUsed = std::clamp(std::max(0, 2 + maxLevel), 0, 2);

    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            if (x == y) continue;
            std::vector<int> eqs;
            for (int f = 0; f < c.homObjCount(x, y); ++f)
                if (cat_is_equiv(c, x, y, f, r.levelUsed).value) eqs.push_back(f);
            if (!eqs.empty()) {
                r.violation = UnivalenceViolation{x, y, eqs,
                                                  "equivalence between distinct objects"};
                return r;
            }
        }
    for (int x = 0; x < c.objCount; ++x) {
        std::vector<int> eqs;
        for (int f = 0; f < c.homObjCount(x, x); ++f)
            if (cat_is_equiv(c, x, x, f, r.levelUsed).value) eqs.push_back(f);
        FinGroupoid sub = full_subgroupoid(c.homAt(x, x), eqs);
        if (trunc_level_groupoid(sub) != kLevelMinusTwo) {
            r.violation = UnivalenceViolation{x, x, eqs,
                                              "self-equivalences do not form a contractible groupoid"};
            return r;
        }
    }
    r.univalent = true;
    return r;
}

ConcreteCategory full_subcategory(std::vector<std::shared_ptr<const FinGroupoid>> objects) {
    ConcreteCategory c;
    c.objCount = static_cast<int>(objects.size());
    for (const auto& g : objects) {
        if (!g) throw InvalidInput("full subcategory: missing object groupoid");
        g->validate();
    }
    c.objPlus = std::move(objects);

    const int n = c.objCount;
    c.hom.resize(static_cast<size_t>(n) * n);
    c.homPlus.resize(static_cast<size_t>(n) * n);
    c.homPrime.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            FunctorSpace sp = FunctorSpace::make(c.objPlus[x], c.objPlus[y]);
            const size_t p = c.pairIndex(x, y);
            if (sp.symbolic()) {
                require_within_cap(sat_mul(sp.functorCount(), sp.functorCount()),
                                   "hom groupoid composition table");
                c.hom[p] = std::make_shared<FinGroupoid>(
                    discrete_groupoid(static_cast<int>(sp.functorCount())));
            } else {
                c.hom[p] = sp.groupoidPtr();
            }
            HomRealisation real;
            real.objMap.resize(c.hom[p]->objectCount);
            for (int o = 0; o < c.hom[p]->objectCount; ++o) real.objMap[o] = o;
            real.morMap.resize(c.hom[p]->morphismCount());
            for (int m = 0; m < c.hom[p]->morphismCount(); ++m) real.morMap[m] = m;
            c.homPlus[p] = std::move(real);
            c.homPrime.push_back(std::move(sp));
        }

    c.identWitness.resize(n);
    for (int x = 0; x < n; ++x) {
        const FunctorSpace& sp = c.space(x, x);
        auto id = sp.identityFunctorIndex();
        c.identWitness[x] = FiberElement{static_cast<int>(id), sp.identityMorphismAt(id)};
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto& table = c.cmpWitness[c.tripleIndex(x, y, z)];
                table.resize(static_cast<size_t>(c.homObjCount(y, z)) * c.homObjCount(x, y));
                const FunctorSpace& sp = c.space(x, z);
                for (int g = 0; g < c.homObjCount(y, z); ++g)
                    for (int f = 0; f < c.homObjCount(x, y); ++f) {
                        std::uint64_t comp = c.composeRealized(x, y, z, g, f);
                        table[static_cast<size_t>(g) * c.homObjCount(x, y) + f] =
                            FiberElement{static_cast<int>(comp), sp.identityMorphismAt(comp)};
                    }
            }

    c.validate();
    return c;
}

}  // namespace ncat
