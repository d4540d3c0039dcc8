#include "ncat/cocart.hpp"

#include <algorithm>

namespace ncat {

std::vector<int> ArrowlikeCategory::aObjects() const {
    std::vector<int> out;
    for (int x = 0; x < underlying.objCount; ++x)
        if (!inB[x]) out.push_back(x);
    return out;
}

std::vector<int> ArrowlikeCategory::bObjects() const {
    std::vector<int> out;
    for (int x = 0; x < underlying.objCount; ++x)
        if (inB[x]) out.push_back(x);
    return out;
}

ArrowlikeCategory check_arrowlike(const ConcreteCategory& c, const std::vector<bool>& inB) {
    c.validate();
    if (inB.size() != static_cast<size_t>(c.objCount))
        throw InvalidInput("check_arrowlike: partition has wrong length");
    for (int b = 0; b < c.objCount; ++b)
        for (int a = 0; a < c.objCount; ++a) {
            if (!inB[b] || inB[a]) continue;
            if (c.homObjCount(b, a) > 0)
                throw ValidationError("check_arrowlike: backward hom(" + std::to_string(b) + ", " +
                                      std::to_string(a) + ") is not empty");
        }
    return {c, inB};
}

CocartWitness is_cocartesian(const ArrowlikeCategory& ac, int a, int b, int f) {
    const ConcreteCategory& c = ac.underlying;
    if (a < 0 || a >= c.objCount || b < 0 || b >= c.objCount || ac.inB[a] || !ac.inB[b])
        throw InvalidInput("is_cocartesian: morphism does not cross from A to B");
    if (f < 0 || f >= c.homObjCount(a, b)) throw InvalidInput("is_cocartesian: element out of range");

    CocartWitness w{a, b, f, true, {}};
    for (int bp = 0; bp < c.objCount; ++bp) {
        if (!ac.inB[bp]) continue;
        const int src = c.homObjCount(b, bp);
        const int dst = c.homObjCount(a, bp);
        FinFun map{FinSet{src}, FinSet{dst}, std::vector<int>(src)};
        for (int g = 0; g < src; ++g) map.table[g] = c.cmp(a, b, bp, g, f);
        bool ok = src == dst && trunc_level_set_map(map) == SetTruncLevel::Bijection;
        // a groupoid equivalence also matches the isomorphism relation
        const FinGroupoid& hSrc = c.homAt(b, bp);
        const FinGroupoid& hDst = c.homAt(a, bp);
        for (int g = 0; ok && g < src; ++g)
            for (int g2 = 0; ok && g2 < src; ++g2)
                ok = hSrc.morphismsBetween(g, g2).empty() ==
                     hDst.morphismsBetween(map.table[g], map.table[g2]).empty();
        if (!ok) {
            w.value = false;
            w.evidence.clear();
            return w;
        }
        w.evidence.push_back({bp, std::move(map)});
    }
    return w;
}

FibrationReport is_cocartesian_fibration(const ArrowlikeCategory& ac) {
    const ConcreteCategory& c = ac.underlying;
    FibrationReport rep;
    rep.value = true;
    for (int a : ac.aObjects()) {
        bool any = false;
        for (int b : ac.bObjects())
            for (int f = 0; f < c.homObjCount(a, b); ++f) {
                CocartWitness w = is_cocartesian(ac, a, b, f);
                if (!w.value) continue;
                rep.found.push_back(std::move(w));
                any = true;
            }
        if (!any) {
            rep.value = false;
            rep.objectsWithout.push_back(a);
        }
    }
    return rep;
}

void CFunctor::validate(const ConcreteCategory& c, const ConcreteCategory& d) const {
    if (objMap.size() != static_cast<size_t>(c.objCount))
        throw ValidationError("functor: object map has wrong length");
    for (int v : objMap)
        if (v < 0 || v >= d.objCount) throw ValidationError("functor: object image out of range");
    if (homMap.size() != static_cast<size_t>(c.objCount) * c.objCount)
        throw ValidationError("functor: hom map has wrong length");
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y) {
            const auto& m = homMap[c.pairIndex(x, y)];
            if (m.size() != static_cast<size_t>(c.homObjCount(x, y)))
                throw ValidationError("functor: hom map entry has wrong length");
            for (int v : m)
                if (v < 0 || v >= d.homObjCount(objMap[x], objMap[y]))
                    throw ValidationError("functor: element image out of range");
        }
    for (int x = 0; x < c.objCount; ++x)
        if (homMap[c.pairIndex(x, x)][c.ident(x)] != d.ident(objMap[x]))
            throw ValidationError("functor: identity not preserved");
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y)
            for (int z = 0; z < c.objCount; ++z)
                for (int g = 0; g < c.homObjCount(y, z); ++g)
                    for (int f = 0; f < c.homObjCount(x, y); ++f)
                        if (homMap[c.pairIndex(x, z)][c.cmp(x, y, z, g, f)] !=
                            d.cmp(objMap[x], objMap[y], objMap[z], homMap[c.pairIndex(y, z)][g],
                                  homMap[c.pairIndex(x, y)][f]))
                            throw ValidationError("functor: composition not preserved");
}

ArrowlikeCategory graph_of_functor(const ConcreteCategory& c, const ConcreteCategory& d,
                                   const CFunctor& fun) {
    c.validate();
    d.validate();
    fun.validate(c, d);
    const int nc = c.objCount, nd = d.objCount, n = nc + nd;
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nc; ++y)
            if (!c.homAt(x, y).isDiscrete())
                throw InvalidInput("graph_of_functor: source homs must be discrete");

    // every object, A-side included, carries the groupoid of its image in d
    auto dObj = [&](int x) { return x < nc ? fun.objMap[x] : x - nc; };
    // element of graph hom(x, y) seen inside hom_d(dObj x, dObj y)
    auto mapElem = [&](int x, int y, int e) {
        return (x < nc && y < nc) ? fun.homMap[c.pairIndex(x, y)][e] : e;
    };

    auto empty = std::make_shared<const FinGroupoid>(discrete_groupoid(0));
    ConcreteCategory g;
    g.objCount = n;
    for (int x = 0; x < n; ++x) g.objPlus.push_back(d.objPlus[dObj(x)]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int dx = dObj(x), dy = dObj(y);
            if (x >= nc && y < nc) {  // backward: empty
                g.hom.push_back(empty);
                g.homPrime.push_back(FunctorSpace::make(g.objPlus[x], g.objPlus[y]));
                g.homPlus.push_back({});
                continue;
            }
            g.homPrime.push_back(d.homPrime[d.pairIndex(dx, dy)]);
            if (x < nc && y < nc) {
                g.hom.push_back(c.hom[c.pairIndex(x, y)]);
                HomRealisation r;
                for (int f = 0; f < c.homObjCount(x, y); ++f) {
                    std::uint64_t idx = d.realizedIndex(dx, dy, mapElem(x, y, f));
                    r.objMap.push_back(idx);
                    r.morMap.push_back(g.homPrime.back().identityMorphismAt(idx));
                }
                g.homPlus.push_back(std::move(r));
            } else {
                g.hom.push_back(d.hom[d.pairIndex(dx, dy)]);
                g.homPlus.push_back(d.homPlus[d.pairIndex(dx, dy)]);
            }
        }
    for (int x = 0; x < n; ++x) {
        if (x < nc)
            g.identWitness.push_back({c.ident(x), d.identWitness[dObj(x)].path});
        else
            g.identWitness.push_back(d.identWitness[dObj(x)]);
    }

    require_witness_budget(g);
    g.cmpWitness.resize(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int dx = dObj(x), dy = dObj(y), dz = dObj(z);
                auto& t = g.cmpWitness[g.tripleIndex(x, y, z)];
                const int gs = g.homObjCount(y, z), fs = g.homObjCount(x, y);
                if (gs == 0 || fs == 0) continue;
                const bool allA = x < nc && y < nc && z < nc;
                for (int ge = 0; ge < gs; ++ge)
                    for (int fe = 0; fe < fs; ++fe) {
                        const FiberElement& wd =
                            d.cmpAt(dx, dy, dz, mapElem(y, z, ge), mapElem(x, y, fe));
                        int e = allA ? c.cmp(x, y, z, ge, fe) : wd.element;
                        t.push_back({e, wd.path});
                    }
            }
    g.validate();

    std::vector<bool> inB(static_cast<size_t>(n), false);
    for (int x = nc; x < n; ++x) inB[x] = true;
    return check_arrowlike(g, inB);
}

namespace {

int invert_evidence(const CocartWitness& w, int bPrime, int image) {
    for (const auto& ev : w.evidence)
        if (ev.bPrime == bPrime) {
            for (int g = 0; g < ev.map.dom.size; ++g)
                if (ev.map(g) == image) return g;
            break;
        }
    throw ValidationError("cocartesian evidence lookup failed");
}

}  // namespace

ExtractedFunctor extract_functor(const ArrowlikeCategory& ac) {
    const ConcreteCategory& c = ac.underlying;
    FibrationReport fr = is_cocartesian_fibration(ac);
    if (!fr.value) throw InvalidInput("extract_functor: not a cocartesian fibration");

    ExtractedFunctor out;
    out.aObjects = ac.aObjects();
    std::vector<const CocartWitness*> chosen;
    for (int a : out.aObjects) {
        const CocartWitness* first = nullptr;
        for (const auto& w : fr.found)
            if (w.a == a) {
                first = &w;
                break;
            }
        chosen.push_back(first);
        out.objMap.push_back(first->b);
        out.chosenMorphism.push_back(first->f);
    }

    const int na = static_cast<int>(out.aObjects.size());
    out.action.resize(na);
    for (int i = 0; i < na; ++i) {
        out.action[i].resize(na);
        for (int j = 0; j < na; ++j) {
            const int a1 = out.aObjects[i], a2 = out.aObjects[j];
            auto& act = out.action[i][j];
            for (int u = 0; u < c.homObjCount(a1, a2); ++u) {
                // push u across to hom(a1, b2), then pull back along f_{a1}
                int t = c.cmp(a1, a2, out.objMap[j], chosen[j]->f, u);
                act.push_back(invert_evidence(*chosen[i], out.objMap[j], t));
            }
        }
    }

    // the transport must itself be a functor
    for (int i = 0; i < na; ++i)
        if (out.action[i][i][c.ident(out.aObjects[i])] != c.ident(out.objMap[i]))
            throw ValidationError("extract_functor: transport breaks identities");
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) {
                const int a1 = out.aObjects[i], a2 = out.aObjects[j], a3 = out.aObjects[k];
                for (int g = 0; g < c.homObjCount(a2, a3); ++g)
                    for (int f = 0; f < c.homObjCount(a1, a2); ++f)
                        if (out.action[i][k][c.cmp(a1, a2, a3, g, f)] !=
                            c.cmp(out.objMap[i], out.objMap[j], out.objMap[k], out.action[j][k][g],
                                  out.action[i][j][f]))
                            throw ValidationError("extract_functor: transport breaks composition");
            }
    return out;
}

UniquenessReport cocart_uniqueness_check(const ArrowlikeCategory& ac) {
    const ConcreteCategory& c = ac.underlying;
    UniquenessReport rep;
    UnivalenceReport uv = check_univalent(c);
    if (!uv.univalent) {
        rep.refused = true;
        rep.reason = "underlying category is not univalent" +
                     (uv.violation ? ": " + uv.violation->reason : std::string());
        return rep;
    }

    FibrationReport fr = is_cocartesian_fibration(ac);
    rep.value = true;
    for (size_t i = 0; i < fr.found.size(); ++i)
        for (size_t j = i + 1; j < fr.found.size(); ++j) {
            const CocartWitness& w1 = fr.found[i];
            const CocartWitness& w2 = fr.found[j];
            if (w1.a != w2.a) continue;
            UniquenessPair p;
            p.a = w1.a;
            p.b1 = w1.b;
            p.f1 = w1.f;
            p.b2 = w2.b;
            p.f2 = w2.f;
            p.mediatorI = invert_evidence(w1, w2.b, w2.f);
            p.mediatorJ = invert_evidence(w2, w1.b, w1.f);
            p.identified = w1.b == w2.b &&
                           (w1.f == w2.f || !c.homAt(w1.a, w1.b).morphismsBetween(w1.f, w2.f).empty());
            if (!p.identified) rep.value = false;
            rep.pairs.push_back(p);
        }
    return rep;
}

}  // namespace ncat
