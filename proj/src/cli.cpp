#include "ncat/cli.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncat/cocart.hpp"
#include "ncat/common.hpp"
#include "ncat/constructions.hpp"
#include "ncat/delta.hpp"
#include "ncat/freecat.hpp"
#include "ncat/oracles.hpp"
#include "ncat/schema.hpp"
#include "ncat/spans.hpp"

namespace ncat {

namespace {

using schema::json;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json tool_header(const char* command) {
    return json{{"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
                {"command", command}};
}

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// "name:bz2" -> fixture lookup, anything else -> groupoid file.
std::shared_ptr<const FinGroupoid> resolve_groupoid(const std::string& spec) {
    if (spec.rfind("name:", 0) == 0)
        return std::make_shared<const FinGroupoid>(fixtures::by_name(spec.substr(5)));
    return std::make_shared<const FinGroupoid>(
        schema::groupoid_from_json(schema::parse_text(read_bytes(spec))));
}

ConcreteCategory load_category(const std::string& path) {
    return schema::category_from_json(schema::parse_text(read_bytes(path)));
}

std::vector<int> parse_csv_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    return out;
}

// --- check ----------------------------------------------------------------

json per_pair_json(const std::vector<PairConformity>& per) {
    json arr = json::array();
    for (const auto& p : per)
        arr.push_back(json{{"x", p.x},
                           {"y", p.y},
                           {"level", p.level},
                           {"witnessFunctor", p.witnessFunctor},
                           {"fiberPoints", p.witnessFiberPoints},
                           {"fiberClasses", p.witnessFiberClasses}});
    return arr;
}

json law_json(const char* name, const LawReport& lr) {
    json j{{"name", name}, {"verdict", !lr.checked ? "skipped" : lr.passed ? "pass" : "fail"}};
    json v = json::array();
    for (const auto& viol : lr.violations)
        v.push_back(json{{"law", viol.law},
                         {"objects", viol.objects},
                         {"elements", viol.elements},
                         {"detail", viol.detail}});
    j["violations"] = std::move(v);
    return j;
}

void print_law_text(std::ostream& out, const char* name, const LawReport& lr) {
    out << name << ": " << (!lr.checked ? "skipped" : lr.passed ? "pass" : "FAIL") << "\n";
    for (const auto& v : lr.violations) out << "  " << v.law << ": " << v.detail << "\n";
}

int do_check(const std::string& file, std::optional<int> level, bool univalence,
             const std::string& mode, std::ostream& out) {
    Clock clock;
    std::string bytes = read_bytes(file);
    std::string digest = schema::digest_bytes(bytes);
    ConcreteCategory c = schema::category_from_json(schema::parse_text(bytes));

    ConcretenessReport rep = level ? certify_at(c, *level) : conformity_report(c);
    std::optional<UnivalenceReport> univ;
    if (univalence) univ = check_univalent(c);

    bool pass = rep.certified && (!univ || univ->univalent);

    if (mode == "json") {
        json j = tool_header("check");
        j["input"] = json{{"path", file}, {"digest", digest}};
        j["flags"] = json{{"requireLevel", level ? json(*level) : json(nullptr)},
                          {"univalence", univalence},
                          {"cap", enumeration_cap()}};
        json checks = json::array();
        checks.push_back(json{{"name", "validate"}, {"verdict", "pass"}});
        checks.push_back(json{{"name", "conformity"},
                              {"verdict", rep.minimalLevel <= rep.checkedLevel ? "pass" : "fail"},
                              {"minimalLevel", rep.minimalLevel},
                              {"checkedLevel", rep.checkedLevel},
                              {"maxFiberLevel", rep.maxFiberLevel},
                              {"perPair", per_pair_json(rep.perPair)}});
        checks.push_back(law_json("unit-assoc", rep.unitAssoc));
        checks.push_back(law_json("pentagon-triangle", rep.pentagonTriangle));
        if (univ) {
            json u{{"name", "univalence"},
                   {"verdict", univ->univalent ? "pass" : "fail"},
                   {"levelUsed", univ->levelUsed}};
            if (univ->violation)
                u["violation"] = json{{"x", univ->violation->x},
                                      {"y", univ->violation->y},
                                      {"equivalences", univ->violation->equivalences},
                                      {"reason", univ->violation->reason}};
            else
                u["violation"] = nullptr;
            checks.push_back(std::move(u));
        }
        j["checks"] = std::move(checks);
        j["verdict"] = pass ? "pass" : "fail";
        j["timing"] = json{{"totalMs", clock.ms()}};
        out << j.dump(2) << "\n";
    } else {
        out << kToolName << " " << kToolVersion << " check\n";
        out << "input: " << file << " (" << digest << ")\n";
        out << "conformity: minimal level " << rep.minimalLevel << ", checked at "
            << rep.checkedLevel << " — "
            << (rep.minimalLevel <= rep.checkedLevel ? "pass" : "FAIL") << "\n";
        if (rep.minimalLevel > rep.checkedLevel)
            for (const auto& p : rep.perPair) {
                if (p.level + 2 <= rep.checkedLevel) continue;
                out << "  pair (" << p.x << "," << p.y << "): realisation fiber at functor #"
                    << p.witnessFunctor << " has " << p.witnessFiberPoints << " points in "
                    << p.witnessFiberClasses << " isomorphism classes (fiber level " << p.level
                    << ", needs <= " << rep.checkedLevel - 2 << ")\n";
            }
        print_law_text(out, "unit/assoc", rep.unitAssoc);
        print_law_text(out, "pentagon/triangle", rep.pentagonTriangle);
        if (univ) {
            out << "univalence: " << (univ->univalent ? "pass" : "FAIL") << " (checked at level "
                << univ->levelUsed << ")\n";
            if (univ->violation)
                out << "  objects (" << univ->violation->x << "," << univ->violation->y
                    << "): " << univ->violation->reason << "\n";
        }
        out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
        out << "time: " << clock.ms() << "ms\n";
    }
    return pass ? 0 : 1;
}

// --- build / oracle / delta shared output ----------------------------------

void emit_build(std::ostream& out, const std::string& mode, const char* kind,
                const std::string& outPath, const ConcreteCategory& c,
                const std::vector<std::string>& notes, const Clock& clock) {
    schema::save_file(outPath, schema::category_to_json(c));
    if (mode == "json") {
        json j = tool_header("build");
        j["kind"] = kind;
        j["out"] = outPath;
        j["objects"] = c.objCount;
        j["notes"] = notes;
        j["timing"] = json{{"totalMs", clock.ms()}};
        out << j.dump(2) << "\n";
    } else {
        out << "wrote " << outPath << " (" << kind << ", " << c.objCount << " objects)\n";
        for (const auto& n : notes) out << "note: " << n << "\n";
    }
}

void emit_result(std::ostream& out, const std::string& mode, const char* command,
                 const std::string& label, const json& params, const json& result,
                 const Clock& clock) {
    if (mode == "json") {
        json j = tool_header(command);
        j["name"] = label;
        j["params"] = params;
        j["result"] = result;
        j["timing"] = json{{"totalMs", clock.ms()}};
        out << j.dump(2) << "\n";
    } else if (result.is_object() && result.contains("term")) {
        out << label << " = " << result["term"].get<std::string>() << "\n";
    } else if (result.is_object() && result.contains("table")) {
        out << label << ", table = " << result["table"].dump() << "\n";
    } else {
        out << label << " = " << result.dump() << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite category toolkit: build, certify and probe concrete categories"};
    app.name(kToolName);

    std::uint64_t cap = 1000000;
    std::uint64_t seed = 0;
    std::string mode = "text";
    app.add_option("--cap", cap, "global enumeration cap")->capture_default_str();
    app.add_option("--seed", seed, "accepted for interface stability; everything is deterministic");
    app.add_option("--report", mode, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.require_subcommand(1);

    int code = 0;
    // option values are all bound before callbacks fire, so taking the cap
    // here puts it in place before any enumeration starts
    auto apply_cap = [&cap] { set_enumeration_cap(cap); };

    // check ------------------------------------------------------------
    auto* chk = app.add_subcommand("check", "certify a category file");
    chk->fallthrough();
    std::string chkFile;
    int chkLevel = 0;
    bool chkUniv = false;
    chk->add_option("file", chkFile, "category file")->required();
    auto* lvlOpt = chk->add_option("--require-level", chkLevel, "certify at this level")
                       ->check(CLI::Range(0, 3));
    chk->add_flag("--univalence", chkUniv, "also check univalence");
    chk->callback([&, lvlOpt] {
        apply_cap();
        std::optional<int> lvl;
        if (lvlOpt->count()) lvl = chkLevel;
        code = do_check(chkFile, lvl, chkUniv, mode, out);
    });

    // build --------------------------------------------------------------
    auto* build = app.add_subcommand("build", "emit a category fixture file");
    build->fallthrough();
    build->require_subcommand(1);
    std::string outPath;

    auto add_kind = [&](const char* name, const char* help) {
        auto* k = build->add_subcommand(name, help);
        k->fallthrough();
        k->add_option("--out", outPath, "output file")->required();
        return k;
    };

    auto* bDelta = add_kind("delta", "ordinal category on objects 0..N");
    int deltaN = 0;
    bDelta->add_option("--objects", deltaN, "top object index N")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bDelta->callback([&] {
        apply_cap();
        Clock clock;
        emit_build(out, mode, "delta", outPath, delta_category(deltaN), {}, clock);
    });

    auto* bFree = add_kind("free", "free category on an acyclic quiver");
    std::string quiverPath;
    bFree->add_option("--quiver", quiverPath, "quiver file")->required();
    bFree->callback([&] {
        apply_cap();
        Clock clock;
        Quiver q = schema::quiver_from_json(schema::parse_text(read_bytes(quiverPath)));
        emit_build(out, mode, "free", outPath, free_category(q), {}, clock);
    });

    auto* bAks = add_kind("aks", "one-object category from a monoid table");
    std::string aksTable;
    int aksUnit = 0;
    bAks->add_option("--table", aksTable, "row-major multiplication table, comma separated")
        ->required();
    bAks->add_option("--unit", aksUnit, "unit element")->capture_default_str();
    bAks->callback([&] {
        apply_cap();
        Clock clock;
        FiniteOneCategory d = monoid_category(parse_csv_ints(aksTable, "aks"), aksUnit);
        try {
            d.validate();
        } catch (const ValidationError& e) {
            throw InvalidInput(std::string("aks: table is not a unital associative monoid: ") +
                               e.what());
        }
        emit_build(out, mode, "aks", outPath, aks_embed(d), {}, clock);
    });

    auto* bType = add_kind("type", "a groupoid as a category of its morphisms");
    std::string typeBase;
    bType->add_option("--base", typeBase, "groupoid: name:<fixture> or file")->required();
    bType->callback([&] {
        apply_cap();
        Clock clock;
        TypeCategoryResult r = type_as_category(resolve_groupoid(typeBase));
        std::vector<std::string> notes;
        if (r.diverges)
            notes.push_back("computed minimal level " + std::to_string(r.computedMinimalLevel) +
                            " diverges from the general level-" + std::to_string(r.claimedLevel) +
                            " claim for this construction");
        emit_build(out, mode, "type", outPath, r.cat, notes, clock);
    });

    auto* bPointed = add_kind("pointed", "category of pointed groupoids");
    std::vector<std::string> pointedBases;
    std::vector<int> pointedPoints;
    int pointedTrunc = 0;
    bPointed->add_option("--base", pointedBases, "groupoid per object: name:<fixture> or file")
        ->required();
    bPointed->add_option("--basepoint", pointedPoints, "basepoint per object")->required();
    auto* truncOpt = bPointed->add_option("--truncate", pointedTrunc,
                                          "collapse point paths to this level (-1 only)");
    bPointed->callback([&, truncOpt] {
        apply_cap();
        Clock clock;
        if (pointedBases.size() != pointedPoints.size())
            throw InvalidInput("pointed: --base and --basepoint counts differ");
        std::vector<PointedGroupoid> ps;
        for (size_t i = 0; i < pointedBases.size(); ++i)
            ps.push_back(PointedGroupoid{resolve_groupoid(pointedBases[i]), pointedPoints[i]});
        std::optional<GpdLevel> trunc;
        if (truncOpt->count()) trunc = pointedTrunc;
        PointedResult r = pointed_category(ps, trunc);
        std::vector<std::string> notes;
        notes.push_back("minimal level " + std::to_string(r.minimalLevel));
        for (const auto& o : r.obstructions)
            notes.push_back("pair (" + std::to_string(o.p) + "," + std::to_string(o.q) +
                            "): fiber at functor #" + std::to_string(o.functorIdx) + " has " +
                            std::to_string(o.fiberClasses) + " isomorphism classes");
        emit_build(out, mode, "pointed", outPath, r.cat, notes, clock);
    });

    auto* bUnion = add_kind("union", "tagged sum of two category files");
    auto* bProduct = add_kind("product", "product of two category files");
    std::string unionL, unionR, prodL, prodR;
    bUnion->add_option("--left", unionL, "left category file")->required();
    bUnion->add_option("--right", unionR, "right category file")->required();
    bProduct->add_option("--left", prodL, "left category file")->required();
    bProduct->add_option("--right", prodR, "right category file")->required();
    auto combine = [&](const char* kind, const std::string& l, const std::string& r) {
        apply_cap();
        Clock clock;
        CombineResult res = std::string(kind) == "union"
                                ? disjoint_union(load_category(l), load_category(r))
                                : product_category(load_category(l), load_category(r));
        std::vector<std::string> notes;
        if (res.raisedFromZero)
            notes.push_back("an input had minimal level 0; the result does not");
        emit_build(out, mode, kind, outPath, res.cat, notes, clock);
    };
    bUnion->callback([&] { combine("union", unionL, unionR); });
    bProduct->callback([&] { combine("product", prodL, prodR); });

    // oracle -------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle->fallthrough();
    oracle->require_subcommand(1);

    auto* oOrd = oracle->add_subcommand("ord-count", "count weakly monotone maps");
    oOrd->fallthrough();
    int oM = 0, oN = 0;
    oOrd->add_option("--m", oM, "domain size")->required()->check(CLI::NonNegativeNumber);
    oOrd->add_option("--n", oN, "codomain size")->required()->check(CLI::NonNegativeNumber);
    oOrd->callback([&] {
        apply_cap();
        Clock clock;
        emit_result(out, mode, "oracle",
                    "ord-count(" + std::to_string(oM) + "," + std::to_string(oN) + ")",
                    json{{"m", oM}, {"n", oN}}, oracles::monotone_map_count(oM, oN), clock);
    });

    auto* oPath = oracle->add_subcommand("path-count", "count directed paths in a quiver");
    oPath->fallthrough();
    std::string oQuiver;
    int oFrom = 0, oTo = 0;
    oPath->add_option("--quiver", oQuiver, "quiver file")->required();
    oPath->add_option("--from", oFrom, "source vertex")->required();
    oPath->add_option("--to", oTo, "target vertex")->required();
    oPath->callback([&] {
        apply_cap();
        Clock clock;
        Quiver q = schema::quiver_from_json(schema::parse_text(read_bytes(oQuiver)));
        emit_result(out, mode, "oracle",
                    "path-count(" + std::to_string(oFrom) + "->" + std::to_string(oTo) + ")",
                    json{{"quiver", oQuiver}, {"from", oFrom}, {"to", oTo}},
                    oracles::dag_path_count(q.vertexCount, q.arrows, oFrom, oTo), clock);
    });

    auto* oFun = oracle->add_subcommand("functor-count", "count functors between groupoids");
    oFun->fallthrough();
    std::string oDom, oCod;
    oFun->add_option("--dom", oDom, "groupoid: name:<fixture> or file")->required();
    oFun->add_option("--cod", oCod, "groupoid: name:<fixture> or file")->required();
    oFun->callback([&] {
        apply_cap();
        Clock clock;
        auto g = resolve_groupoid(oDom);
        auto h = resolve_groupoid(oCod);
        emit_result(out, mode, "oracle", "functor-count", json{{"dom", oDom}, {"cod", oCod}},
                    oracles::functor_count(*g, *h), clock);
    });

    auto* oFib = oracle->add_subcommand("fiber-count", "count homotopy-fiber points of a functor");
    oFib->fallthrough();
    std::string oFunctorFile;
    int oAt = 0;
    oFib->add_option("--functor", oFunctorFile, "functor file")->required();
    oFib->add_option("--at", oAt, "codomain object")->required();
    oFib->callback([&] {
        apply_cap();
        Clock clock;
        GFunctor f = schema::gfunctor_from_json(schema::parse_text(read_bytes(oFunctorFile)));
        emit_result(out, mode, "oracle", "fiber-count(at " + std::to_string(oAt) + ")",
                    json{{"functor", oFunctorFile}, {"at", oAt}},
                    oracles::fiber_point_count(f, oAt), clock);
    });

    // delta ----------------------------------------------------------------
    auto* delta = app.add_subcommand("delta", "ordinal term calculus");
    delta->fallthrough();
    delta->require_subcommand(1);

    auto* dReal = delta->add_subcommand("realize", "term -> monotone map");
    dReal->fallthrough();
    std::string dTerm;
    dReal->add_option("term", dTerm, "nested constructor string, e.g. Sl(Sr(Z))")->required();
    dReal->callback([&] {
        apply_cap();
        Clock clock;
        OrdTerm t = ord_parse(dTerm);
        FinFun f = ord_realize(t);
        emit_result(out, mode, "delta",
                    ord_to_string(t) + " : Ord(" + std::to_string(t.dom) + "," +
                        std::to_string(t.cod) + ")",
                    json{{"term", dTerm}}, json{{"table", f.table}}, clock);
    });

    auto* dComp = delta->add_subcommand("compose", "compose two terms (first after second)");
    dComp->fallthrough();
    std::string dG, dF;
    dComp->add_option("g", dG, "outer term")->required();
    dComp->add_option("f", dF, "inner term")->required();
    dComp->callback([&] {
        apply_cap();
        Clock clock;
        OrdTerm t = ord_compose(ord_parse(dG), ord_parse(dF));
        emit_result(out, mode, "delta", "compose", json{{"g", dG}, {"f", dF}},
                    json{{"term", ord_to_string(t)}, {"dom", t.dom}, {"cod", t.cod}}, clock);
    });

    auto* dCanon = delta->add_subcommand("canonicalize", "monotone map -> term");
    dCanon->fallthrough();
    std::string dTable;
    int dCod = 0;
    dCanon->add_option("--cod", dCod, "codomain size")->required()->check(CLI::NonNegativeNumber);
    dCanon->add_option("--table", dTable, "comma separated values (empty for the empty map)");
    dCanon->callback([&] {
        apply_cap();
        Clock clock;
        std::vector<int> table = parse_csv_ints(dTable, "canonicalize");
        FinFun f{FinSet{static_cast<int>(table.size())}, FinSet{dCod}, table};
        try {
            f.validate();
        } catch (const ValidationError& e) {
            throw InvalidInput(std::string("canonicalize: ") + e.what());
        }
        OrdTerm t = ord_canonicalize(f);
        emit_result(out, mode, "delta", "canonicalize", json{{"cod", dCod}, {"table", table}},
                    json{{"term", ord_to_string(t)}}, clock);
    });

    auto* dCount = delta->add_subcommand("count", "count terms of a type");
    dCount->fallthrough();
    int dM = 0, dN = 0;
    dCount->add_option("--m", dM, "domain index")->required()->check(CLI::NonNegativeNumber);
    dCount->add_option("--n", dN, "codomain index")->required()->check(CLI::NonNegativeNumber);
    dCount->callback([&] {
        apply_cap();
        Clock clock;
        emit_result(out, mode, "delta",
                    "count(" + std::to_string(dM) + "," + std::to_string(dN) + ")",
                    json{{"m", dM}, {"n", dN}}, count_ord(dM, dN), clock);
    });

    auto* dIdent = delta->add_subcommand("identity", "identity term at an index");
    dIdent->fallthrough();
    int dIdN = 0;
    dIdent->add_option("--n", dIdN, "index")->required()->check(CLI::NonNegativeNumber);
    dIdent->callback([&] {
        apply_cap();
        Clock clock;
        emit_result(out, mode, "delta", "identity(" + std::to_string(dIdN) + ")",
                    json{{"n", dIdN}}, json{{"term", ord_to_string(ord_identity(dIdN))}}, clock);
    });

    // spans ----------------------------------------------------------------
    auto* spans = app.add_subcommand("spans", "span realisation probes");
    spans->fallthrough();
    int spanU = 0, spanUniverse = 0;
    spans->add_option("--endo-fiber", spanU, "size of the set U")
        ->required()
        ->check(CLI::NonNegativeNumber);
    spans->add_option("--universe", spanUniverse, "largest Fin(k) in the universe")
        ->required()
        ->check(CLI::NonNegativeNumber);
    spans->callback([&] {
        apply_cap();
        Clock clock;
        EndoFiberAnalysis a = endo_fiber_analysis(FinSet{spanU}, spanUniverse);
        if (mode == "json") {
            json j = tool_header("spans");
            j["params"] = json{{"endoFiber", spanU}, {"universe", spanUniverse}};
            j["count"] = a.count;
            j["witnesses"] = a.witnesses.size();
            j["caveat"] = a.caveat;
            j["timing"] = json{{"totalMs", clock.ms()}};
            out << j.dump(2) << "\n";
        } else {
            out << "endo fiber of (U x -) with |U| = " << spanU << " over universe Fin(0.."
                << spanUniverse << "): count = " << a.count
                << ", witnesses materialized: " << a.witnesses.size() << "\n";
            out << "caveat: " << a.caveat << "\n";
        }
    });

    // cocart ---------------------------------------------------------------
    auto* cocart = app.add_subcommand("cocart", "cocartesian fibration checks");
    cocart->fallthrough();
    std::string ccFile, ccPartition;
    bool ccExtract = false, ccUniqueness = false;
    cocart->add_option("file", ccFile, "category file")->required();
    cocart->add_option("--partition", ccPartition, "comma separated 0/1 tags, 1 = target side")
        ->required();
    cocart->add_flag("--extract", ccExtract, "extract the modelled functor");
    cocart->add_flag("--uniqueness", ccUniqueness, "check uniqueness of cocartesian lifts");
    cocart->callback([&] {
        apply_cap();
        Clock clock;
        ConcreteCategory c = load_category(ccFile);
        std::vector<int> tags = parse_csv_ints(ccPartition, "partition");
        std::vector<bool> inB;
        for (int t : tags) {
            if (t != 0 && t != 1) throw InvalidInput("partition: tags must be 0 or 1");
            inB.push_back(t == 1);
        }
        ArrowlikeCategory ac = check_arrowlike(c, inB);
        FibrationReport fib = is_cocartesian_fibration(ac);
        bool pass = fib.value;
        json j = tool_header("cocart");
        j["input"] = json{{"path", ccFile}, {"digest", schema::digest_bytes(read_bytes(ccFile))}};
        j["arrowlike"] = true;
        j["fibration"] = fib.value;
        json found = json::array();
        for (const auto& w : fib.found)
            found.push_back(json{{"a", w.a}, {"b", w.b}, {"f", w.f}});
        j["cocartesian"] = std::move(found);
        j["objectsWithout"] = fib.objectsWithout;
        if (fib.value && ccExtract) {
            ExtractedFunctor ex = extract_functor(ac);
            j["extracted"] = json{{"aObjects", ex.aObjects},
                                  {"objMap", ex.objMap},
                                  {"chosenMorphism", ex.chosenMorphism}};
        }
        if (ccUniqueness) {
            UniquenessReport uq = cocart_uniqueness_check(ac);
            json pairs = json::array();
            for (const auto& p : uq.pairs)
                pairs.push_back(json{{"a", p.a},
                                     {"b1", p.b1},
                                     {"f1", p.f1},
                                     {"b2", p.b2},
                                     {"f2", p.f2},
                                     {"identified", p.identified}});
            j["uniqueness"] = json{{"refused", uq.refused},
                                   {"reason", uq.reason},
                                   {"value", uq.value},
                                   {"pairs", std::move(pairs)}};
            pass = pass && !uq.refused && uq.value;
        }
        j["verdict"] = pass ? "pass" : "fail";
        j["timing"] = json{{"totalMs", clock.ms()}};
        if (mode == "json") {
            out << j.dump(2) << "\n";
        } else {
            out << "arrowlike: ok\n";
            out << "fibration: " << (fib.value ? "ok" : "FAIL") << " (" << fib.found.size()
                << " cocartesian morphisms)\n";
            for (int a : fib.objectsWithout)
                out << "  no cocartesian morphism out of A-object " << a << "\n";
            if (j.contains("extracted"))
                out << "extracted: objMap = " << j["extracted"]["objMap"].dump() << "\n";
            if (j.contains("uniqueness")) {
                const auto& u = j["uniqueness"];
                if (u["refused"].get<bool>())
                    out << "uniqueness: refused — " << u["reason"].get<std::string>() << "\n";
                else
                    out << "uniqueness: " << (u["value"].get<bool>() ? "ok" : "FAIL") << "\n";
            }
            out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
        }
        code = pass ? 0 : 1;
    });

    std::vector<std::string> argv{std::string(kToolName)};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const EnumerationOverflow& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation failure: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace ncat
