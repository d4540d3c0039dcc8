#include "doctest.h"

#include <map>

#include "ncat/delta.hpp"
#include "ncat/oracles.hpp"

using namespace ncat;

TEST_CASE("term constructors build the documented maps") {
    // Sl(Sr(Z)) : (1, 1) is the identity on one point
    OrdTerm t = ord_sl(ord_sr(ord_z()));
    CHECK(t.dom == 1);
    CHECK(t.cod == 1);
    CHECK(ord_realize(t).table == std::vector<int>{0});

    // Sr(Sl(Sr(Z))) : (1, 2) shifts everything up, picking the top point
    OrdTerm u = ord_sr(t);
    CHECK(ord_realize(u).table == std::vector<int>{1});
    CHECK(ord_realize(u).cod.size == 2);

    // prepending values needs an inhabited codomain
    CHECK_THROWS_AS(ord_sl(ord_z()), InvalidInput);

    SUBCASE("identity terms realize to identity maps") {
        for (int n = 0; n <= 5; ++n) {
            OrdTerm idt = ord_identity(n);
            CHECK(ord_realize(idt) == identity_fun(FinSet{n}));
        }
    }
}

TEST_CASE("term counts agree with the monotone-map oracle") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(count_ord(m, n) == oracles::monotone_map_count(m, n));
        }
    CHECK(count_ord(4, 4) == 35);
    CHECK(count_ord(6, 6) == 462);
    CHECK(count_ord(0, 0) == 1);
    CHECK(count_ord(1, 0) == 0);
    CHECK(count_ord(2, 2) == 3);
    CHECK(count_ord(2, 1) == 1);
}

TEST_CASE("realize and canonicalize are mutually inverse") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            auto terms = enumerate_ord(m, n);
            auto maps = oracles::monotone_maps(m, n);
            REQUIRE(terms.size() == maps.size());
            std::map<std::vector<int>, int> seen;
            for (size_t i = 0; i < terms.size(); ++i) {
                FinFun f = ord_realize(terms[i]);
                f.validate();
                CHECK(seen.emplace(f.table, static_cast<int>(i)).second);  // injective
                CHECK(ord_canonicalize(f) == terms[i]);
            }
            for (const auto& table : maps) {
                FinFun f{FinSet{m}, FinSet{n}, table};
                CHECK(ord_realize(ord_canonicalize(f)) == f);
            }
        }

    SUBCASE("non-monotone maps are rejected") {
        CHECK_THROWS_AS(ord_canonicalize(FinFun{FinSet{2}, FinSet{2}, {1, 0}}), InvalidInput);
    }
}

TEST_CASE("structural composition matches set-level composition") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (int p = 0; p <= 4; ++p) {
                auto fs = enumerate_ord(m, n);
                auto gs = enumerate_ord(n, p);
                for (const auto& g : gs)
                    for (const auto& f : fs) {
                        OrdTerm gf = ord_compose(g, f);
                        CHECK(ord_realize(gf) == compose(ord_realize(g), ord_realize(f)));
                    }
            }

    SUBCASE("units and associativity at the term level") {
        auto fs = enumerate_ord(2, 3);
        for (const auto& f : fs) {
            CHECK(ord_compose(ord_identity(3), f) == f);
            CHECK(ord_compose(f, ord_identity(2)) == f);
        }
        for (const auto& f : enumerate_ord(1, 2))
            for (const auto& g : enumerate_ord(2, 3))
                for (const auto& h : enumerate_ord(3, 2))
                    CHECK(ord_compose(h, ord_compose(g, f)) ==
                          ord_compose(ord_compose(h, g), f));
    }

    SUBCASE("mismatched types are rejected") {
        CHECK_THROWS_AS(ord_compose(ord_identity(2), ord_identity(3)), InvalidInput);
    }
}

TEST_CASE("term syntax round-trips") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (const auto& t : enumerate_ord(m, n)) CHECK(ord_parse(ord_to_string(t)) == t);
    CHECK(ord_to_string(ord_z()) == "Z");
    CHECK(ord_to_string(ord_sr(ord_sl(ord_sr(ord_z())))) == "Sr(Sl(Sr(Z)))");
    CHECK_THROWS_AS(ord_parse("Sl(Q)"), InvalidInput);
    CHECK_THROWS_AS(ord_parse("Sl(Z"), InvalidInput);
    CHECK_THROWS_AS(ord_parse(""), InvalidInput);
    CHECK_THROWS_AS(ord_parse("Sl(Z)"), InvalidInput);  // ill-typed: Sl needs cod >= 1
}

TEST_CASE("the ordinal category realizes into discrete groupoids") {
    ConcreteCategory d = delta_category(2);
    d.validate();
    CHECK(d.objCount == 3);
    // object k carries k+1 points
    for (int k = 0; k <= 2; ++k) {
        CHECK(d.objPlus[k]->objectCount == k + 1);
        CHECK(d.objPlus[k]->isDiscrete());
    }
    // hom cardinalities are monotone-map counts on the fattened objects
    CHECK(d.homObjCount(1, 0) == 1);
    CHECK(d.homObjCount(0, 2) == 3);
    CHECK(d.homObjCount(2, 1) == 4);
    CHECK(realisation_injective(d));

    ConcretenessReport r = conformity_report(d);
    CHECK(r.certified);
    CHECK(r.minimalLevel == 1);
    CHECK(certify_at(d, 1).certified);
    CHECK(certify_at(d, 2).certified);

    SUBCASE("composition witnesses compose the realized maps") {
        for (int g = 0; g < d.homObjCount(1, 2); ++g)
            for (int f = 0; f < d.homObjCount(0, 1); ++f) {
                int gf = d.cmp(0, 1, 2, g, f);
                CHECK(d.realizedIndex(0, 2, gf) == d.composeRealized(0, 1, 2, g, f));
            }
    }

    SUBCASE("degenerate base still works") {
        ConcreteCategory d0 = delta_category(0);
        d0.validate();
        CHECK(d0.objCount == 1);
        // the single self-map is monotone, so every fiber is inhabited
        CHECK(conformity_report(d0).minimalLevel == 0);
        CHECK_THROWS_AS(delta_category(-1), InvalidInput);
    }
}
