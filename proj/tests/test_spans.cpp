#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "ncat/spans.hpp"

using namespace ncat;

namespace {

// multiset of (left, right) leg pairs; invariant under span isomorphism
std::vector<std::pair<int, int>> leg_fingerprint(const Span& s) {
    std::vector<std::pair<int, int>> fp;
    for (int u = 0; u < s.apex().size; ++u) fp.emplace_back(s.left(u), s.right(u));
    std::sort(fp.begin(), fp.end());
    return fp;
}

std::vector<Span> all_spans(int apex, int srcSize, int tgtSize) {
    std::vector<Span> out;
    for (const auto& l : enumerate_maps(FinSet{apex}, FinSet{srcSize}))
        for (const auto& r : enumerate_maps(FinSet{apex}, FinSet{tgtSize}))
            out.push_back(Span{l, r});
    return out;
}

}  // namespace

TEST_CASE("span composition pulls back along the shared foot") {
    // 2 <- 3 -> 2 followed by 2 <- 2 -> 1
    Span s{FinFun{FinSet{3}, FinSet{2}, {0, 1, 1}}, FinFun{FinSet{3}, FinSet{2}, {0, 0, 1}}};
    Span t{FinFun{FinSet{2}, FinSet{2}, {0, 1}}, FinFun{FinSet{2}, FinSet{1}, {0, 0}}};
    s.validate();
    t.validate();

    Span ts = span_compose(t, s);
    ts.validate();
    // pullback pairs (u, v) with s.right(u) = t.left(v), u-major:
    // (0,0), (1,0), (2,1)
    CHECK(ts.apex().size == 3);
    CHECK(ts.left.table == std::vector<int>{0, 1, 1});
    CHECK(ts.right.table == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(span_compose(t, t), InvalidInput);  // feet do not match: 1 vs 2

    SUBCASE("identity spans are units up to isomorphism") {
        Span idSrc = identity_span(s.src());
        Span idTgt = identity_span(s.tgt());
        CHECK(span_iso(span_compose(s, idSrc), s).has_value());
        CHECK(span_iso(span_compose(idTgt, s), s).has_value());
    }
}

TEST_CASE("span isomorphism is decided by apex bijections over the legs") {
    Span a{FinFun{FinSet{2}, FinSet{2}, {0, 1}}, FinFun{FinSet{2}, FinSet{2}, {1, 0}}};
    Span b{FinFun{FinSet{2}, FinSet{2}, {1, 0}}, FinFun{FinSet{2}, FinSet{2}, {0, 1}}};
    auto iso = span_iso(a, b);
    REQUIRE(iso.has_value());
    iso->validate();
    // the bijection must commute with both legs
    for (int u = 0; u < 2; ++u) {
        CHECK(a.left(u) == b.left((*iso)(u)));
        CHECK(a.right(u) == b.right((*iso)(u)));
    }

    Span c{FinFun{FinSet{2}, FinSet{2}, {0, 0}}, FinFun{FinSet{2}, FinSet{2}, {0, 1}}};
    CHECK_FALSE(span_iso(a, c).has_value());
    CHECK_FALSE(span_iso(a, identity_span(FinSet{2})).has_value());
    CHECK(span_iso(identity_span(FinSet{3}), identity_span(FinSet{3})).has_value());

    SUBCASE("mismatched endpoints are rejected") {
        CHECK_THROWS_AS(span_iso(a, identity_span(FinSet{3})), InvalidInput);
    }
    SUBCASE("huge apexes hit the enumeration cap") {
        Span big = identity_span(FinSet{11});
        CHECK_THROWS_AS(span_iso(big, big), EnumerationOverflow);
    }
}

TEST_CASE("the leg multiset decides span isomorphism on small sizes") {
    // exhaustive over apexes/endpoints <= 2: iso exists iff fingerprints agree
    for (int apex = 0; apex <= 2; ++apex)
        for (int x = 0; x <= 2; ++x)
            for (int y = 0; y <= 2; ++y) {
                auto spans = all_spans(apex, x, y);
                for (const auto& s : spans)
                    for (const auto& t : spans) {
                        bool same = leg_fingerprint(s) == leg_fingerprint(t);
                        CHECK(span_iso(s, t).has_value() == same);
                    }
            }

    SUBCASE("different apex sizes never compare equal") {
        for (int x = 0; x <= 2; ++x)
            for (int y = 0; y <= 2; ++y)
                for (const auto& s : all_spans(2, x, y))
                    for (const auto& t : all_spans(3, x, y))
                        CHECK_FALSE(span_iso(s, t).has_value());
    }
}

TEST_CASE("composition is associative up to isomorphism on small spans") {
    // exhaustive over all composable triples with every set of size <= 2
    std::vector<Span> pool;
    for (int apex = 0; apex <= 2; ++apex)
        for (int x = 0; x <= 2; ++x)
            for (int y = 0; y <= 2; ++y)
                for (const auto& s : all_spans(apex, x, y)) pool.push_back(s);

    int checked = 0;
    for (const auto& r : pool)
        for (const auto& s : pool) {
            if (s.src() != r.tgt()) continue;
            Span sr = span_compose(s, r);
            for (const auto& t : pool) {
                if (t.src() != s.tgt()) continue;
                Span lhs = span_compose(t, sr);
                Span rhs = span_compose(span_compose(t, s), r);
                // fingerprints agree exactly when the composites are isomorphic
                CHECK(leg_fingerprint(lhs) == leg_fingerprint(rhs));
                ++checked;
            }
        }
    CHECK(checked == 22739);  // all composable triples over sizes <= 2
}

TEST_CASE("families pull back and push forward along spans") {
    // family over {0,1}: fibers of sizes 2 and 1
    Family fam{FinFun{FinSet{3}, FinSet{2}, {0, 0, 1}}};
    // span 2 <- 2 -> 3 relabeling into a bigger base
    Span s{FinFun{FinSet{2}, FinSet{2}, {0, 1}}, FinFun{FinSet{2}, FinSet{3}, {2, 0}}};
    Family out = pull_push(s, fam);
    out.proj.validate();
    CHECK(out.base().size == 3);
    CHECK(out.total().size == 3);
    CHECK(fiber(out.proj, 0).size() == 1);  // fiber of 1 routed to base point 0
    CHECK(fiber(out.proj, 1).empty());
    CHECK(fiber(out.proj, 2).size() == 2);  // fiber of 0 routed to base point 2

    SUBCASE("identity span preserves the family up to nothing at all") {
        Family same = pull_push(identity_span(FinSet{2}), fam);
        for (int b = 0; b < 2; ++b)
            CHECK(fiber(same.proj, b).size() == fiber(fam.proj, b).size());
    }

    SUBCASE("base mismatch is rejected") {
        CHECK_THROWS_AS(pull_push(s, Family{FinFun{FinSet{3}, FinSet{4}, {0, 0, 1}}}), InvalidInput);
    }
}

TEST_CASE("the endo fiber over a small universe is fat but explicit") {
    SUBCASE("two points over universe 2") {
        EndoFiberAnalysis a = endo_fiber_analysis(FinSet{2}, 2);
        // (2*0)! * (2*1)! * (2*2)! = 1 * 2 * 24
        CHECK(a.count == 48);
        REQUIRE(a.witnesses.size() >= 2);
        for (const auto& w : a.witnesses) {
            CHECK(w.vSize == 2);
            REQUIRE(w.path.components.size() == 3);
            for (int k = 0; k <= 2; ++k) {
                const FinFun& comp = w.path.components[static_cast<size_t>(k)];
                comp.validate();
                CHECK(comp.dom.size == 2 * k);
                CHECK(trunc_level_set_map(comp) == SetTruncLevel::Bijection);
            }
        }
        // second witness differs from the first in exactly one transposed component
        int differing = 0;
        for (int k = 0; k <= 2; ++k)
            if (a.witnesses[0].path.components[static_cast<size_t>(k)].table !=
                a.witnesses[1].path.components[static_cast<size_t>(k)].table)
                ++differing;
        CHECK(differing == 1);
    }

    SUBCASE("the empty set is rigid") {
        EndoFiberAnalysis a = endo_fiber_analysis(FinSet{0}, 2);
        CHECK(a.count == 1);
        CHECK(a.witnesses.size() == 1);
    }

    SUBCASE("a point sees only the symmetries of the universe components") {
        EndoFiberAnalysis a = endo_fiber_analysis(FinSet{1}, 2);
        CHECK(a.count == 2);  // 0! * 1! * 2!
    }

    SUBCASE("overflowing counts are refused, not clipped") {
        CHECK_THROWS_AS(endo_fiber_analysis(FinSet{4}, 6), EnumerationOverflow);
    }

    SUBCASE("a set too big for the universe has an empty fiber") {
        EndoFiberAnalysis a = endo_fiber_analysis(FinSet{3}, 2);
        CHECK(a.count == 0);
        CHECK(a.witnesses.empty());
        CHECK_FALSE(a.caveat.empty());
    }

    CHECK_THROWS_AS(endo_fiber_analysis(FinSet{2}, -1), InvalidInput);
}
