#include "doctest.h"

#include <random>

#include "ncat/finset.hpp"

using namespace ncat;

TEST_CASE("finite functions validate and compose") {
    FinFun f{FinSet{3}, FinSet{2}, {0, 1, 1}};
    f.validate();

    SUBCASE("out-of-range table entry is rejected") {
        FinFun bad{FinSet{2}, FinSet{2}, {0, 2}};
        CHECK_THROWS_AS(bad.validate(), ValidationError);
        FinFun shortTable{FinSet{2}, FinSet{2}, {0}};
        CHECK_THROWS_AS(shortTable.validate(), ValidationError);
    }

    SUBCASE("identity is a two-sided unit") {
        CHECK(compose(identity_fun(FinSet{2}), f) == f);
        CHECK(compose(f, identity_fun(FinSet{3})) == f);
    }

    SUBCASE("composition reads right to left") {
        FinFun g{FinSet{2}, FinSet{4}, {3, 0}};
        FinFun gf = compose(g, f);
        CHECK(gf.dom.size == 3);
        CHECK(gf.cod.size == 4);
        CHECK(gf.table == std::vector<int>{3, 0, 0});
    }

    SUBCASE("composing with mismatched middle set throws") {
        FinFun g{FinSet{3}, FinSet{1}, {0, 0, 0}};
        CHECK_THROWS_AS(compose(g, f), InvalidInput);
    }
}

TEST_CASE("fibers list preimages in ascending order") {
    FinFun f{FinSet{5}, FinSet{3}, {2, 0, 2, 1, 0}};
    CHECK(fiber(f, 0) == std::vector<int>{1, 4});
    CHECK(fiber(f, 1) == std::vector<int>{3});
    CHECK(fiber(f, 2) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(fiber(f, 3), InvalidInput);
}

TEST_CASE("truncation level distinguishes bijection, injection, and the rest") {
    CHECK(trunc_level_set_map(identity_fun(FinSet{4})) == SetTruncLevel::Bijection);
    CHECK(trunc_level_set_map(FinFun{FinSet{0}, FinSet{0}, {}}) == SetTruncLevel::Bijection);

    // injection that is not onto
    CHECK(trunc_level_set_map(FinFun{FinSet{2}, FinSet{3}, {2, 0}}) == SetTruncLevel::Injection);
    // empty inclusion is injective, not bijective, once the codomain is inhabited
    CHECK(trunc_level_set_map(FinFun{FinSet{0}, FinSet{1}, {}}) == SetTruncLevel::Injection);

    CHECK(trunc_level_set_map(FinFun{FinSet{2}, FinSet{1}, {0, 0}}) == SetTruncLevel::Any);

    SUBCASE("random sweep agrees with a direct fiber count") {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 500; ++trial) {
            int m = static_cast<int>(rng() % 7);
            int n = 1 + static_cast<int>(rng() % 6);
            FinFun f{FinSet{m}, FinSet{n}, {}};
            f.table.resize(static_cast<size_t>(m));
            for (int& v : f.table) v = static_cast<int>(rng() % n);
            int biggest = 0;
            bool allHit = true;
            for (int y = 0; y < n; ++y) {
                int sz = static_cast<int>(fiber(f, y).size());
                biggest = std::max(biggest, sz);
                if (sz == 0) allHit = false;
            }
            SetTruncLevel expect = biggest > 1 ? SetTruncLevel::Any
                                   : allHit    ? SetTruncLevel::Bijection
                                               : SetTruncLevel::Injection;
            CHECK(trunc_level_set_map(f) == expect);
        }
    }
}

TEST_CASE("connectivity witnesses exist between all small sets") {
    for (int x = 0; x <= 5; ++x) {
        for (int y = 0; y <= 5; ++y) {
            ConnectivityWitness w = connectivity_witness(FinSet{x}, FinSet{y});
            w.map.validate();
            if (w.forward) {
                CHECK(w.map.dom.size == x);
                CHECK(w.map.cod.size == y);
            } else {
                CHECK(w.map.dom.size == y);
                CHECK(w.map.cod.size == x);
            }
        }
    }

    SUBCASE("documented shape: empty domain first, else constant at 0") {
        ConnectivityWitness a = connectivity_witness(FinSet{0}, FinSet{3});
        CHECK(a.forward);
        CHECK(a.map.table.empty());

        ConnectivityWitness b = connectivity_witness(FinSet{2}, FinSet{3});
        CHECK(b.forward);
        CHECK(b.map.table == std::vector<int>{0, 0});

        ConnectivityWitness c = connectivity_witness(FinSet{2}, FinSet{0});
        CHECK_FALSE(c.forward);
        CHECK(c.map.table.empty());
    }
}

TEST_CASE("map enumeration is complete, ordered, and capped") {
    auto maps = enumerate_maps(FinSet{3}, FinSet{2});
    CHECK(maps.size() == 8);
    for (size_t i = 0; i < maps.size(); ++i) {
        maps[i].validate();
        if (i > 0) CHECK(maps[i - 1].table < maps[i].table);
    }
    CHECK(enumerate_maps(FinSet{0}, FinSet{0}).size() == 1);
    CHECK(enumerate_maps(FinSet{1}, FinSet{0}).empty());

    SUBCASE("the global cap stops absurd requests") {
        set_enumeration_cap(100);
        CHECK_THROWS_AS(enumerate_maps(FinSet{10}, FinSet{10}), EnumerationOverflow);
        set_enumeration_cap(1000000);
    }
}
