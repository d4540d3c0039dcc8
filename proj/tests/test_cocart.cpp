#include "doctest.h"

#include <memory>

#include "ncat/cocart.hpp"
#include "ncat/constructions.hpp"
#include "ncat/freecat.hpp"

using namespace ncat;
using fixtures::by_name;

static std::shared_ptr<const FinGroupoid> share(FinGroupoid g) {
    return std::make_shared<const FinGroupoid>(std::move(g));
}

namespace {

// chain 0 -> 1 -> 2 included into the same chain plus a shortcut 0 -> 2
struct ChainIntoShortcut {
    ConcreteCategory c = free_category(Quiver{3, {{0, 1}, {1, 2}}});
    ConcreteCategory d = free_category(Quiver{3, {{0, 1}, {1, 2}, {0, 2}}});
    CFunctor f;

    ChainIntoShortcut() {
        f.objMap = {0, 1, 2};
        f.homMap.resize(9);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                auto& cell = f.homMap[static_cast<size_t>(x) * 3 + y];
                cell.resize(static_cast<size_t>(c.homObjCount(x, y)));
                // the chain's only path 0 -> 2 lands on the two-arrow route,
                // which precedes the shortcut in path order
                for (auto& v : cell) v = 0;
            }
        f.validate(c, d);
    }
};

}  // namespace

TEST_CASE("arrowlike partitions forbid morphisms back into the source side") {
    ConcreteCategory arrow = free_category(Quiver{2, {{0, 1}}});
    ArrowlikeCategory ac = check_arrowlike(arrow, {false, true});
    CHECK(ac.aObjects() == std::vector<int>{0});
    CHECK(ac.bObjects() == std::vector<int>{1});

    CHECK_THROWS_AS(check_arrowlike(arrow, {true, false}), ValidationError);
    CHECK_THROWS_AS(check_arrowlike(arrow, {false}), InvalidInput);
}

TEST_CASE("cocartesian morphisms are exactly the universal ones") {
    ChainIntoShortcut fx;
    ArrowlikeCategory ac = graph_of_functor(fx.c, fx.d, fx.f);
    ac.underlying.validate();
    CHECK(ac.underlying.objCount == 6);
    // hom(inl 0, inr 2) sees both routes of the target category
    CHECK(ac.underlying.homObjCount(0, 5) == 2);

    SUBCASE("unit elements over the image are cocartesian") {
        CocartWitness w = is_cocartesian(ac, 0, 3, 0);
        CHECK(w.value);
        REQUIRE(w.evidence.size() == 3);  // one bijection per B-object
        for (const auto& e : w.evidence) e.map.validate();
    }

    SUBCASE("the shortcut element is not cocartesian") {
        // element 1 of hom(inl 0, inr 2) is the one-arrow route; nothing in
        // hom(2, -) precomposes onto the two-arrow route
        CocartWitness w = is_cocartesian(ac, 0, 5, 1);
        CHECK_FALSE(w.value);
    }

    SUBCASE("argument hygiene") {
        CHECK_THROWS_AS(is_cocartesian(ac, 3, 4, 0), InvalidInput);  // a must sit in A
        CHECK_THROWS_AS(is_cocartesian(ac, 0, 1, 0), InvalidInput);  // b must sit in B
        CHECK_THROWS_AS(is_cocartesian(ac, 0, 3, 9), InvalidInput);
    }
}

TEST_CASE("fibration check finds exactly the liftable objects") {
    ChainIntoShortcut fx;
    ArrowlikeCategory ac = graph_of_functor(fx.c, fx.d, fx.f);
    FibrationReport r = is_cocartesian_fibration(ac);
    CHECK(r.value);
    CHECK(r.objectsWithout.empty());
    CHECK(r.found.size() == 3);  // one unit lift per chain object
    for (const auto& w : r.found) CHECK(w.value);

    SUBCASE("a source object with no universal arrow is reported") {
        // diamond with both feet on the B side: no arrow out of 0 is universal
        ConcreteCategory dia = free_category(Quiver{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
        ArrowlikeCategory bad = check_arrowlike(dia, {false, true, true, true});
        FibrationReport br = is_cocartesian_fibration(bad);
        CHECK_FALSE(br.value);
        CHECK(br.objectsWithout == std::vector<int>{0});
    }
}

TEST_CASE("a functor survives the round trip through its graph") {
    ChainIntoShortcut fx;
    ArrowlikeCategory ac = graph_of_functor(fx.c, fx.d, fx.f);
    ExtractedFunctor ex = extract_functor(ac);

    CHECK(ex.aObjects == std::vector<int>{0, 1, 2});
    for (size_t i = 0; i < 3; ++i) {
        CHECK(ex.objMap[i] == fx.f.objMap[i] + fx.c.objCount);
        for (size_t j = 0; j < 3; ++j)
            CHECK(ex.action[i][j] == fx.f.homMap[i * 3 + j]);
    }

    SUBCASE("the graph needs discrete source homs") {
        ConcreteCategory loops = full_subcategory({share(by_name("bz2"))});
        CFunctor ident;
        ident.objMap = {0};
        ident.homMap = {{0, 1}};
        CHECK_THROWS_AS(graph_of_functor(loops, loops, ident), InvalidInput);
    }

    SUBCASE("functor validation catches a unit violation") {
        CFunctor broken = fx.f;
        broken.homMap[0][0] = 1;  // the empty path at 0 no longer maps to a unit
        CHECK_THROWS_AS(broken.validate(fx.c, fx.d), ValidationError);
    }
}

TEST_CASE("uniqueness of lifts holds on univalent graphs") {
    SUBCASE("vacuously on a free-category graph") {
        ChainIntoShortcut fx;
        ArrowlikeCategory ac = graph_of_functor(fx.c, fx.d, fx.f);
        UniquenessReport r = cocart_uniqueness_check(ac);
        CHECK_FALSE(r.refused);
        CHECK(r.value);
        CHECK(r.pairs.empty());  // one lift per object, nothing to compare
    }

    SUBCASE("nonvacuously when two lifts compete") {
        ConcreteCategory c = free_category(Quiver{1, {}});
        PointedResult p = pointed_category({{share(by_name("bz2")), 0}});
        CFunctor f;
        f.objMap = {0};
        f.homMap = {{p.cat.ident(0)}};
        f.validate(c, p.cat);

        ArrowlikeCategory ac = graph_of_functor(c, p.cat, f);
        FibrationReport fr = is_cocartesian_fibration(ac);
        CHECK(fr.value);
        CHECK(fr.found.size() == 2);  // the identity and the loop-twisted lift

        UniquenessReport r = cocart_uniqueness_check(ac);
        CHECK_FALSE(r.refused);
        CHECK(r.value);
        REQUIRE(r.pairs.size() == 1);
        const UniquenessPair& pr = r.pairs[0];
        CHECK(pr.identified);
        CHECK(pr.b1 == pr.b2);
        CHECK(pr.mediatorI >= 0);
        CHECK(pr.mediatorJ >= 0);
    }

    SUBCASE("refuses on a non-univalent base") {
        ConcreteCategory c = free_category(Quiver{1, {}});
        ConcreteCategory d = aks_embed(monoid_category({0, 1, 1, 0}, 0));
        CFunctor f;
        f.objMap = {0};
        f.homMap = {{d.ident(0)}};
        f.validate(c, d);

        ArrowlikeCategory ac = graph_of_functor(c, d, f);
        UniquenessReport r = cocart_uniqueness_check(ac);
        CHECK(r.refused);
        CHECK_FALSE(r.reason.empty());
    }
}
