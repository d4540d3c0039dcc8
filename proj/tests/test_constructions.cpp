#include "doctest.h"

#include <algorithm>
#include <memory>
#include <numeric>

#include "ncat/constructions.hpp"
#include "ncat/delta.hpp"

using namespace ncat;
using fixtures::by_name;

static std::shared_ptr<const FinGroupoid> share(FinGroupoid g) {
    return std::make_shared<const FinGroupoid>(std::move(g));
}

// relabel a monoid table by a permutation fixing the unit 0
static std::vector<int> relabel(const std::vector<int>& t, const std::vector<int>& perm, int n) {
    std::vector<int> out(t.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[perm[a] * n + perm[b]] = perm[t[a * n + b]];
    return out;
}

TEST_CASE("finite one-categories validate their tables exhaustively") {
    FiniteOneCategory z2 = monoid_category({0, 1, 1, 0}, 0);
    z2.validate();
    CHECK(z2.objectCount == 1);
    CHECK(z2.compose(0, 0, 0, 1, 1) == 0);

    SUBCASE("unit must be given as element 0 of a square table") {
        CHECK_THROWS_AS(monoid_category({0, 1, 1}, 0), InvalidInput);
        CHECK_THROWS_AS(monoid_category({0, 1, 1, 0}, 2), ValidationError);
        // 1 is not a unit for this table
        CHECK_THROWS_AS(monoid_category({0, 1, 1, 0}, 1), ValidationError);
    }

    SUBCASE("associativity is actually checked") {
        // unit law holds, but (1.1).2 = 1 while 1.(1.2) = 2
        std::vector<int> bad = {0, 1, 2, 1, 2, 1, 2, 1, 1};
        CHECK_THROWS_AS(monoid_category(bad, 0), ValidationError);
    }
}

TEST_CASE("monoid enumeration yields one representative per iso class") {
    CHECK(enumerate_monoids(1).size() == 1);
    CHECK(enumerate_monoids(2).size() == 2);
    auto threes = enumerate_monoids(3);
    CHECK(threes.size() == 7);

    for (const auto& t : threes) {
        monoid_category(t, 0).validate();
        // lexicographically least under unit-fixing relabelings
        std::vector<int> perm = {0, 2, 1};
        CHECK(t <= relabel(t, perm, 3));
    }
    CHECK(std::is_sorted(threes.begin(), threes.end()));
    CHECK(std::adjacent_find(threes.begin(), threes.end()) == threes.end());

    CHECK_THROWS_AS(enumerate_monoids(0), InvalidInput);
}

TEST_CASE("one-categories embed with discrete object groupoids") {
    SUBCASE("the trivial monoid is 0-concrete") {
        ConcreteCategory c = aks_embed(monoid_category({0}, 0));
        c.validate();
        CHECK(conformity_report(c).minimalLevel == 0);
    }

    SUBCASE("Z/2 embeds at level 1 via its regular action") {
        ConcreteCategory c = aks_embed(monoid_category({0, 1, 1, 0}, 0));
        c.validate();
        CHECK(c.objCount == 1);
        CHECK(c.objPlus[0]->isDiscrete());
        CHECK(c.objPlus[0]->objectCount == 2);
        CHECK(realisation_injective(c));
        ConcretenessReport r = conformity_report(c);
        CHECK(r.minimalLevel == 1);
        CHECK(r.certified);
        CHECK(certify_at(c, 2).certified);
    }

    SUBCASE("every monoid of size at most 3 embeds at level exactly 1") {
        for (int size = 2; size <= 3; ++size) {
            for (const auto& t : enumerate_monoids(size)) {
                CAPTURE(size);
                CAPTURE(t);
                ConcreteCategory c = aks_embed(monoid_category(t, 0));
                c.validate();
                CHECK(realisation_injective(c));
                CHECK(conformity_report(c).minimalLevel == 1);
            }
        }
    }
}

TEST_CASE("groupoids viewed as categories report their honest level") {
    SUBCASE("discrete bases certify at the claimed level 1") {
        CHECK(type_as_category(share(by_name("empty"))).computedMinimalLevel == 0);
        CHECK(type_as_category(share(discrete_groupoid(1))).computedMinimalLevel == 0);
        for (int n = 2; n <= 4; ++n) {
            TypeCategoryResult r = type_as_category(share(discrete_groupoid(n)));
            r.cat.validate();
            CHECK(r.computedMinimalLevel == 1);
            CHECK_FALSE(r.diverges);
            CHECK(certify_at(r.cat, 1).certified);
        }
    }

    SUBCASE("a base with loops escapes the general claim") {
        TypeCategoryResult r = type_as_category(share(by_name("bz2")));
        r.cat.validate();
        CHECK(r.computedMinimalLevel == 2);
        CHECK(r.claimedLevel == 1);
        CHECK(r.diverges);
        CHECK_FALSE(certify_at(r.cat, 1).certified);
        CHECK(certify_at(r.cat, 2).certified);
    }
}

TEST_CASE("truncation cuts the functor world down to small fibers") {
    SUBCASE("equivalences of BZ2 are the identity with its two symmetries") {
        ConcreteCategory c = truncated_maps_category({share(by_name("bz2"))}, kLevelMinusTwo);
        c.validate();
        CHECK(c.homObjCount(0, 0) == 1);
        CHECK(c.homAt(0, 0).morphismCount() == 2);
        CHECK(conformity_report(c).minimalLevel == 1);
    }

    SUBCASE("injective-fiber maps between small discrete bases") {
        ConcreteCategory c = truncated_maps_category(
            {share(discrete_groupoid(1)), share(discrete_groupoid(2))}, kLevelMinusOne);
        c.validate();
        CHECK(c.homObjCount(0, 0) == 1);
        CHECK(c.homObjCount(0, 1) == 2);
        CHECK(c.homObjCount(1, 0) == 0);  // nothing injective collapses two points
        CHECK(c.homObjCount(1, 1) == 2);
        CHECK(conformity_report(c).minimalLevel == 1);
    }

    SUBCASE("level 1 keeps everything") {
        auto objs = std::vector<std::shared_ptr<const FinGroupoid>>{share(by_name("bz2"))};
        ConcreteCategory all = truncated_maps_category(objs, kLevelOne);
        ConcreteCategory full = full_subcategory(objs);
        CHECK(all.homObjCount(0, 0) == full.homObjCount(0, 0));
    }

    CHECK_THROWS_AS(truncated_maps_category({share(by_name("one"))}, 2), InvalidInput);
}

TEST_CASE("pointed groupoids form a 2-concrete category") {
    std::vector<PointedGroupoid> ps = {{share(by_name("one")), 0}, {share(by_name("bz2")), 0}};
    PointedResult r = pointed_category(ps);
    r.cat.validate();
    CHECK(r.minimalLevel == 2);

    // hom(p, q) counts pairs (functor, point path)
    CHECK(r.cat.homObjCount(0, 0) == 1);
    CHECK(r.cat.homObjCount(0, 1) == 2);
    CHECK(r.cat.homObjCount(1, 1) == 4);

    SUBCASE("the obstructions are fibers with two isomorphism classes") {
        REQUIRE_FALSE(r.obstructions.empty());
        for (const auto& o : r.obstructions) {
            CHECK(o.fiberClasses == 2);
            CHECK(o.q == 1);  // always over the loopy object
        }
        auto pc = pair_conformity(r.cat);
        for (const auto& p : pc) {
            CAPTURE(p.x);
            CAPTURE(p.y);
            if (p.y == 1 && r.cat.homObjCount(p.x, p.y) > 0) {
                CHECK(p.level == kLevelZero);
                CHECK(p.witnessFiberPoints == 4);
                CHECK(p.witnessFiberClasses == 2);
            }
        }
    }

    SUBCASE("certification respects the computed minimum") {
        CHECK_FALSE(certify_at(r.cat, 1).certified);
        CHECK(certify_at(r.cat, 2).certified);
    }

    SUBCASE("propositional truncation collapses the point paths") {
        PointedResult t = pointed_category(ps, kLevelMinusOne);
        t.cat.validate();
        CHECK(t.minimalLevel == 0);
        CHECK(t.obstructions.empty());
        CHECK(certify_at(t.cat, 1).certified);
        CHECK(t.cat.homObjCount(0, 1) == 1);  // just the qualifying functor
    }

    SUBCASE("bad inputs are rejected") {
        CHECK_THROWS_AS(pointed_category({{share(by_name("one")), 3}}), InvalidInput);
        CHECK_THROWS_AS(pointed_category(ps, kLevelZero), InvalidInput);
    }
}

TEST_CASE("sums and products of concrete categories") {
    ConcreteCategory star = delta_category(0);

    SUBCASE("two points glue to a 1-concrete category") {
        CombineResult u = disjoint_union(star, star);
        u.cat.validate();
        CHECK(u.raisedFromZero);
        CHECK(u.cat.objCount == 2);
        CHECK(u.cat.homObjCount(0, 1) == 0);
        CHECK(u.cat.homObjCount(1, 0) == 0);
        ConcretenessReport r = conformity_report(u.cat);
        CHECK(r.minimalLevel == 1);
        CHECK(certify_at(u.cat, 1).certified);
    }

    SUBCASE("union keeps higher factors as they are") {
        PointedResult p = pointed_category({{share(by_name("bz2")), 0}});
        CombineResult u = disjoint_union(p.cat, star);
        u.cat.validate();
        CHECK(conformity_report(u.cat).minimalLevel == 2);
    }

    SUBCASE("product multiplies hom cardinalities") {
        ConcreteCategory d1 = delta_category(1);
        CombineResult pr = product_category(d1, d1);
        pr.cat.validate();
        CHECK(pr.cat.objCount == 4);
        for (int x = 0; x < 2; ++x)
            for (int a = 0; a < 2; ++a)
                for (int y = 0; y < 2; ++y)
                    for (int b = 0; b < 2; ++b)
                        CHECK(pr.cat.homObjCount(x * 2 + a, y * 2 + b) ==
                              d1.homObjCount(x, y) * d1.homObjCount(a, b));
        ConcretenessReport r = conformity_report(pr.cat);
        CHECK(r.minimalLevel == 1);
        CHECK(certify_at(pr.cat, 1).certified);
    }
}
