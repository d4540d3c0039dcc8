#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncat/cli.hpp"
#include "ncat/constructions.hpp"
#include "ncat/delta.hpp"
#include "ncat/freecat.hpp"
#include "ncat/schema.hpp"

using namespace ncat;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "ncatkit-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    auto path = scratch_dir() / name;
    std::ofstream(path) << text;
    return path.string();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("schema round-trips every object kind") {
    SUBCASE("groupoids") {
        FinGroupoid g = fixtures::by_name("bz3");
        FinGroupoid back = schema::groupoid_from_json(schema::groupoid_to_json(g));
        CHECK(back == g);
    }
    SUBCASE("categories") {
        ConcreteCategory c = delta_category(2);
        schema::json j = schema::category_to_json(c);
        ConcreteCategory back = schema::category_from_json(j);
        back.validate();
        CHECK(schema::category_to_json(back).dump() == j.dump());
    }
    SUBCASE("a pointed category keeps its witnesses intact") {
        auto bz2 = std::make_shared<const FinGroupoid>(fixtures::by_name("bz2"));
        PointedResult p = pointed_category({{bz2, 0}});
        schema::json j = schema::category_to_json(p.cat);
        ConcreteCategory back = schema::category_from_json(j);
        back.validate();
        CHECK(conformity_report(back).minimalLevel == 2);
    }
    SUBCASE("quivers and functors") {
        Quiver q{3, {{0, 1}, {1, 2}}};
        Quiver qb = schema::quiver_from_json(schema::quiver_to_json(q));
        CHECK(qb.vertexCount == 3);
        CHECK(qb.arrows == q.arrows);

        auto one = std::make_shared<const FinGroupoid>(fixtures::by_name("one"));
        auto bz2 = std::make_shared<const FinGroupoid>(fixtures::by_name("bz2"));
        GFunctor f = enumerate_functors(one, bz2).at(0);
        GFunctor fb = schema::gfunctor_from_json(schema::gfunctor_to_json(f));
        CHECK(fb.objMap == f.objMap);
        CHECK(fb.morMap == f.morMap);
        fb.validate();
    }
    SUBCASE("malformed input is an input error, not a crash") {
        CHECK_THROWS_AS(schema::parse_text("{ not json"), InvalidInput);
        CHECK_THROWS_AS(schema::groupoid_from_json(schema::parse_text("{}")), InvalidInput);
        CHECK_THROWS_AS(schema::category_from_json(schema::parse_text("{\"objects\": 1}")),
                        InvalidInput);
        // structurally well-formed but wrong: morphism ids not a permutation
        CHECK_THROWS_AS(
            schema::groupoid_from_json(schema::parse_text(
                R"({"objects":1,"morphisms":[{"id":1,"src":0,"tgt":0}],"identities":[1],"compose":[[1,1,1]]})")),
            InvalidInput);
    }
    SUBCASE("digests are stable and well-formed") {
        CHECK(schema::digest_bytes("") == "fnv1a64:cbf29ce484222325");
        CHECK(schema::digest_bytes("abc") == schema::digest_bytes("abc"));
        CHECK(schema::digest_bytes("abc") != schema::digest_bytes("abd"));
    }
}

TEST_CASE("the tool builds, checks and reports through exit codes") {
    std::string cat = (scratch_dir() / "delta2.json").string();

    RunResult built = run({"build", "delta", "--objects", "2", "--out", cat});
    CHECK(built.code == 0);
    CHECK(contains(built.out, "wrote"));
    REQUIRE(std::filesystem::exists(cat));

    SUBCASE("a sound file passes at its minimal level") {
        RunResult chk = run({"check", cat});
        CHECK(chk.code == 0);
        CHECK(contains(chk.out, "PASS"));
        CHECK(contains(chk.out, "minimal level 1"));
    }

    SUBCASE("asking for a level below minimal fails with a witness") {
        RunResult chk = run({"check", cat, "--require-level", "0"});
        CHECK(chk.code == 1);
        CHECK(contains(chk.out, "FAIL"));
        CHECK(contains(chk.out, "isomorphism classes"));
    }

    SUBCASE("levels above minimal certify") {
        CHECK(run({"check", cat, "--require-level", "1"}).code == 0);
        CHECK(run({"check", cat, "--require-level", "3"}).code == 0);
    }

    SUBCASE("univalence piggybacks on check") {
        RunResult chk = run({"check", cat, "--univalence"});
        CHECK(chk.code == 0);
        CHECK(contains(chk.out, "univalence: pass"));
    }

    SUBCASE("rebuilding produces byte-identical output") {
        std::string again = (scratch_dir() / "delta2-again.json").string();
        CHECK(run({"build", "delta", "--objects", "2", "--out", again}).code == 0);
        std::ifstream a(cat), b(again);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK(sa.str() == sb.str());
    }
}

TEST_CASE("input problems exit with code 2, check failures with 1") {
    CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"check"}).code == 2);  // missing required argument
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "x", "--require-level", "9"}).code == 2);

    std::string junk = write_scratch("junk.json", "{ this is not json");
    RunResult r = run({"check", junk});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "input error"));

    std::string empty = write_scratch("empty.json", "{}");
    CHECK(run({"check", empty}).code == 2);

    SUBCASE("help is not an error") {
        RunResult h = run({"--help"});
        CHECK(h.code == 0);
        CHECK(contains(h.out, "check"));
        CHECK(run({"build", "--help"}).code == 0);
    }

    SUBCASE("the cap flag travels into the enumeration guards") {
        std::string out = (scratch_dir() / "capped.json").string();
        RunResult r2 = run({"--cap", "50", "build", "delta", "--objects", "4", "--out", out});
        CHECK(r2.code == 2);
        CHECK(contains(r2.err, "cap exceeded"));
        set_enumeration_cap(1000000);  // the failed run leaves the tiny cap behind
    }

    SUBCASE("the seed flag is accepted") {
        CHECK(run({"--seed", "7", "oracle", "ord-count", "--m", "2", "--n", "2"}).code == 0);
    }
}

TEST_CASE("oracle and calculus subcommands answer in plain text") {
    RunResult ord = run({"oracle", "ord-count", "--m", "4", "--n", "4"});
    CHECK(ord.code == 0);
    CHECK(contains(ord.out, "35"));

    std::string quiver = write_scratch(
        "diamond.json",
        R"({"vertices":4,"arrows":[{"src":0,"tgt":1},{"src":0,"tgt":2},{"src":1,"tgt":3},{"src":2,"tgt":3}]})");
    RunResult paths = run({"oracle", "path-count", "--quiver", quiver, "--from", "0", "--to", "3"});
    CHECK(paths.code == 0);
    CHECK(contains(paths.out, "2"));

    RunResult fc = run({"oracle", "functor-count", "--dom", "name:bz2", "--cod", "name:bz2"});
    CHECK(fc.code == 0);
    CHECK(contains(fc.out, "2"));

    RunResult realize = run({"delta", "realize", "Sr(Sl(Sr(Z)))"});
    CHECK(realize.code == 0);
    CHECK(contains(realize.out, "[1]"));

    RunResult comp = run({"delta", "compose", "Sl(Sr(Z))", "Sl(Sr(Z))"});
    CHECK(comp.code == 0);
    CHECK(contains(comp.out, "Sl(Sr(Z))"));

    RunResult canon = run({"delta", "canonicalize", "--cod", "2", "--table", "0,0,1"});
    CHECK(canon.code == 0);
    CHECK(contains(canon.out, "Sl("));

    CHECK(run({"delta", "canonicalize", "--cod", "2", "--table", "1,0"}).code == 2);
    CHECK(run({"delta", "realize", "Sl(Q)"}).code == 2);

    RunResult count = run({"delta", "count", "--m", "6", "--n", "6"});
    CHECK(contains(count.out, "462"));

    RunResult ident = run({"delta", "identity", "--n", "2"});
    CHECK(contains(ident.out, "Sl(Sr(Sl(Sr(Z))))"));

    RunResult fiber = run({"spans", "--endo-fiber", "2", "--universe", "2"});
    CHECK(fiber.code == 0);
    CHECK(contains(fiber.out, "count = 48"));
    CHECK(contains(fiber.out, "caveat"));
}

TEST_CASE("json reports are deterministic apart from timing") {
    std::string cat = (scratch_dir() / "pointed.json").string();
    RunResult built = run({"--report", "json", "build", "pointed", "--base", "name:one", "--base",
                           "name:bz2", "--basepoint", "0", "--basepoint", "0", "--out", cat});
    CHECK(built.code == 0);
    schema::json bj = schema::parse_text(built.out);
    CHECK(bj["kind"] == "pointed");
    bool sawLevel = false;
    for (const auto& note : bj["notes"])
        if (contains(note.get<std::string>(), "minimal level 2")) sawLevel = true;
    CHECK(sawLevel);

    auto normalized = [&](const std::string& outText) {
        schema::json j = schema::parse_text(outText);
        j.erase("timing");
        return j.dump();
    };

    RunResult first = run({"--report", "json", "check", cat, "--require-level", "2"});
    RunResult second = run({"--report", "json", "check", cat, "--require-level", "2"});
    CHECK(first.code == 0);
    CHECK(normalized(first.out) == normalized(second.out));

    schema::json j = schema::parse_text(first.out);
    CHECK(j["tool"]["name"] == "ncatkit");
    CHECK(j["verdict"] == "pass");
    CHECK(j["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(j.contains("timing"));

    SUBCASE("failed checks carry per-pair fiber witnesses") {
        RunResult low = run({"--report", "json", "check", cat, "--require-level", "1"});
        CHECK(low.code == 1);
        schema::json lj = schema::parse_text(low.out);
        CHECK(lj["verdict"] == "fail");
        bool fatFiber = false;
        for (const auto& chk : lj["checks"])
            if (chk["name"] == "conformity")
                for (const auto& p : chk["perPair"])
                    if (p["fiberClasses"].get<int>() >= 2) fatFiber = true;
        CHECK(fatFiber);
    }
}

TEST_CASE("the cocart subcommand drives the fibration pipeline") {
    std::string quiver = write_scratch("arrow.json",
                                       R"({"vertices":2,"arrows":[{"src":0,"tgt":1}]})");
    std::string cat = (scratch_dir() / "arrow-cat.json").string();
    REQUIRE(run({"build", "free", "--quiver", quiver, "--out", cat}).code == 0);

    RunResult base = run({"cocart", cat, "--partition", "0,1"});
    CHECK(base.code == 0);
    CHECK(contains(base.out, "fibration: ok"));

    RunResult full = run({"cocart", cat, "--partition", "0,1", "--extract", "--uniqueness"});
    CHECK(full.code == 0);
    CHECK(contains(full.out, "extracted"));
    CHECK(contains(full.out, "uniqueness: ok"));

    RunResult backwards = run({"cocart", cat, "--partition", "1,0"});
    CHECK(backwards.code == 1);
    CHECK(contains(backwards.err, "validation failure"));

    CHECK(run({"cocart", cat, "--partition", "0,2"}).code == 2);
    CHECK(run({"cocart", cat, "--partition", "0"}).code == 2);

    SUBCASE("json verdicts mirror the exit code") {
        RunResult j = run({"--report", "json", "cocart", cat, "--partition", "0,1"});
        CHECK(j.code == 0);
        schema::json parsed = schema::parse_text(j.out);
        CHECK(parsed["verdict"] == "pass");
        CHECK(parsed["fibration"] == true);
    }
}

TEST_CASE("build variants cover the remaining constructions") {
    std::string typeOut = (scratch_dir() / "type-bz2.json").string();
    RunResult t = run({"build", "type", "--base", "name:bz2", "--out", typeOut});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "diverges"));
    CHECK(run({"check", typeOut, "--require-level", "2"}).code == 0);
    CHECK(run({"check", typeOut, "--require-level", "1"}).code == 1);

    std::string aksOut = (scratch_dir() / "aks-z2.json").string();
    RunResult a = run({"build", "aks", "--table", "0,1,1,0", "--out", aksOut});
    CHECK(a.code == 0);
    CHECK(run({"check", aksOut, "--require-level", "1"}).code == 0);
    CHECK(run({"build", "aks", "--table", "0,1,1", "--out", aksOut}).code == 2);

    std::string starOut = (scratch_dir() / "star.json").string();
    REQUIRE(run({"build", "delta", "--objects", "0", "--out", starOut}).code == 0);
    std::string unionOut = (scratch_dir() / "two-stars.json").string();
    RunResult u = run({"build", "union", "--left", starOut, "--right", starOut, "--out", unionOut});
    CHECK(u.code == 0);
    CHECK(contains(u.out, "minimal level 0"));  // the raised-from-zero notice
    CHECK(run({"check", unionOut, "--require-level", "1"}).code == 0);

    std::string d1Out = (scratch_dir() / "d1.json").string();
    REQUIRE(run({"build", "delta", "--objects", "1", "--out", d1Out}).code == 0);
    std::string prodOut = (scratch_dir() / "d1xd1.json").string();
    CHECK(run({"build", "product", "--left", d1Out, "--right", d1Out, "--out", prodOut}).code == 0);
    CHECK(run({"check", prodOut, "--require-level", "1"}).code == 0);

    std::string truncOut = (scratch_dir() / "pointed-trunc.json").string();
    RunResult tr = run({"build", "pointed", "--base", "name:bz2", "--basepoint", "0",
                        "--truncate=-1", "--out", truncOut});
    CHECK(tr.code == 0);
    CHECK(run({"check", truncOut, "--require-level", "1"}).code == 0);

    SUBCASE("mismatched pointed arguments are rejected") {
        CHECK(run({"build", "pointed", "--base", "name:one", "--basepoint", "0", "--basepoint",
                   "1", "--out", truncOut}).code == 2);
    }
}
