#include "ncat/schema.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncat/common.hpp"
#include "ncat/functor_space.hpp"

namespace ncat::schema {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("schema: " + what); }

int get_nat(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) bad(std::string(key) + " must be an integer");
    auto v = j.at(key).get<std::int64_t>();
    if (v < 0) bad(std::string(key) + " must be nonnegative");
    return static_cast<int>(v);
}

std::vector<int> get_int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) bad(std::string(key) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_number_integer()) bad(std::string(key) + " entries must be integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::uint64_t> get_u64_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) bad(std::string(key) + " must be an array");
    std::vector<std::uint64_t> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_number_integer()) bad(std::string(key) + " entries must be integers");
        out.push_back(e.get<std::uint64_t>());
    }
    return out;
}

json fiber_elements_to_json(const std::vector<FiberElement>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(json{{"element", w.element}, {"path", w.path}});
    return arr;
}

std::vector<FiberElement> fiber_elements_from_json(const json& j, const char* key) {
    if (!j.is_array()) bad(std::string(key) + " must be an array");
    std::vector<FiberElement> out;
    for (const auto& e : j) {
        if (!e.is_object()) bad(std::string(key) + " entries must be objects");
        FiberElement w;
        w.element = get_nat(e, "element");
        if (!e.contains("path") || !e.at("path").is_number_integer()) bad("path must be an integer");
        w.path = e.at("path").get<std::uint64_t>();
        out.push_back(w);
    }
    return out;
}

}  // namespace

json groupoid_to_json(const FinGroupoid& g) {
    json j;
    j["objects"] = g.objectCount;
    json mors = json::array();
    for (int m = 0; m < g.morphismCount(); ++m)
        mors.push_back(json{{"id", m}, {"src", g.src(m)}, {"tgt", g.tgt(m)}});
    j["morphisms"] = std::move(mors);
    j["identities"] = g.identities;
    json comp = json::array();
    for (int gg = 0; gg < g.morphismCount(); ++gg)
        for (int f = 0; f < g.morphismCount(); ++f) {
            int h = g.compTable[static_cast<size_t>(gg) * g.morphismCount() + f];
            if (h >= 0) comp.push_back(json::array({gg, f, h}));
        }
    j["compose"] = std::move(comp);
    return j;
}

FinGroupoid groupoid_from_json(const json& j) {
    if (!j.is_object()) bad("groupoid must be an object");
    FinGroupoid g;
    g.objectCount = get_nat(j, "objects");
    if (!j.contains("morphisms") || !j.at("morphisms").is_array()) bad("morphisms must be an array");
    const auto& mors = j.at("morphisms");
    g.morphisms.resize(mors.size());
    std::vector<bool> seen(mors.size(), false);
    for (const auto& e : mors) {
        if (!e.is_object()) bad("morphism entries must be objects");
        int id = get_nat(e, "id");
        if (id >= static_cast<int>(mors.size()) || seen[id]) bad("morphism ids must be 0..m-1, unique");
        seen[id] = true;
        g.morphisms[id] = Morphism{get_nat(e, "src"), get_nat(e, "tgt")};
    }
    g.identities = get_int_array(j, "identities");
    size_t m = g.morphisms.size();
    g.compTable.assign(m * m, -1);
    if (!j.contains("compose") || !j.at("compose").is_array()) bad("compose must be an array");
    for (const auto& e : j.at("compose")) {
        if (!e.is_array() || e.size() != 3) bad("compose entries must be triples");
        auto gg = e[0].get<std::int64_t>(), f = e[1].get<std::int64_t>(), h = e[2].get<std::int64_t>();
        if (gg < 0 || f < 0 || h < 0 || gg >= static_cast<std::int64_t>(m) ||
            f >= static_cast<std::int64_t>(m) || h >= static_cast<std::int64_t>(m))
            bad("compose entry out of range");
        g.compTable[static_cast<size_t>(gg) * m + f] = static_cast<int>(h);
    }
    try {
        g.validate();
    } catch (const ValidationError& e) {
        bad(std::string("groupoid does not validate: ") + e.what());
    }
    return g;
}

json category_to_json(const ConcreteCategory& c) {
    json j;
    j["objects"] = c.objCount;
    json objPlus = json::array();
    for (const auto& g : c.objPlus) objPlus.push_back(groupoid_to_json(*g));
    j["objPlus"] = std::move(objPlus);
    json hom = json::array();
    for (const auto& g : c.hom) hom.push_back(groupoid_to_json(*g));
    j["hom"] = std::move(hom);
    json homPlus = json::array();
    for (const auto& r : c.homPlus)
        homPlus.push_back(json{{"objMap", r.objMap}, {"morMap", r.morMap}});
    j["homPlus"] = std::move(homPlus);
    json cmp = json::array();
    for (const auto& triple : c.cmpWitness) cmp.push_back(fiber_elements_to_json(triple));
    j["witnesses"] = json{{"ident", fiber_elements_to_json(c.identWitness)}, {"cmp", std::move(cmp)}};
    return j;
}

ConcreteCategory category_from_json(const json& j) {
    if (!j.is_object()) bad("category must be an object");
    ConcreteCategory c;
    c.objCount = get_nat(j, "objects");
    if (!j.contains("objPlus") || !j.at("objPlus").is_array()) bad("objPlus must be an array");
    for (const auto& e : j.at("objPlus"))
        c.objPlus.push_back(std::make_shared<const FinGroupoid>(groupoid_from_json(e)));
    if (static_cast<int>(c.objPlus.size()) != c.objCount) bad("objPlus length must equal objects");
    if (!j.contains("hom") || !j.at("hom").is_array()) bad("hom must be an array");
    for (const auto& e : j.at("hom"))
        c.hom.push_back(std::make_shared<const FinGroupoid>(groupoid_from_json(e)));
    size_t pairs = static_cast<size_t>(c.objCount) * c.objCount;
    if (c.hom.size() != pairs) bad("hom length must equal objects^2");
    for (int x = 0; x < c.objCount; ++x)
        for (int y = 0; y < c.objCount; ++y)
            c.homPrime.push_back(FunctorSpace::make(c.objPlus[x], c.objPlus[y]));
    if (!j.contains("homPlus") || !j.at("homPlus").is_array()) bad("homPlus must be an array");
    for (const auto& e : j.at("homPlus")) {
        if (!e.is_object()) bad("homPlus entries must be objects");
        c.homPlus.push_back(HomRealisation{get_u64_array(e, "objMap"), get_u64_array(e, "morMap")});
    }
    if (c.homPlus.size() != pairs) bad("homPlus length must equal objects^2");
    if (!j.contains("witnesses") || !j.at("witnesses").is_object()) bad("witnesses must be an object");
    const auto& w = j.at("witnesses");
    if (!w.contains("ident")) bad("witnesses.ident missing");
    c.identWitness = fiber_elements_from_json(w.at("ident"), "witnesses.ident");
    if (!w.contains("cmp") || !w.at("cmp").is_array()) bad("witnesses.cmp must be an array");
    for (const auto& e : w.at("cmp"))
        c.cmpWitness.push_back(fiber_elements_from_json(e, "witnesses.cmp"));
    if (c.cmpWitness.size() != pairs * c.objCount) bad("witnesses.cmp length must equal objects^3");
    try {
        c.validate();
    } catch (const ValidationError& e) {
        bad(std::string("category does not validate: ") + e.what());
    }
    return c;
}

json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertexCount;
    json arrows = json::array();
    for (const auto& [s, t] : q.arrows) arrows.push_back(json{{"src", s}, {"tgt", t}});
    j["arrows"] = std::move(arrows);
    return j;
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object()) bad("quiver must be an object");
    Quiver q;
    q.vertexCount = get_nat(j, "vertices");
    if (!j.contains("arrows") || !j.at("arrows").is_array()) bad("arrows must be an array");
    for (const auto& e : j.at("arrows")) {
        if (!e.is_object()) bad("arrow entries must be objects");
        q.arrows.emplace_back(get_nat(e, "src"), get_nat(e, "tgt"));
    }
    q.validate();
    return q;
}

json gfunctor_to_json(const GFunctor& f) {
    json j;
    j["dom"] = groupoid_to_json(*f.dom);
    j["cod"] = groupoid_to_json(*f.cod);
    j["objMap"] = f.objMap;
    j["morMap"] = f.morMap;
    return j;
}

GFunctor gfunctor_from_json(const json& j) {
    if (!j.is_object()) bad("functor must be an object");
    if (!j.contains("dom") || !j.contains("cod")) bad("functor needs dom and cod");
    GFunctor f;
    f.dom = std::make_shared<const FinGroupoid>(groupoid_from_json(j.at("dom")));
    f.cod = std::make_shared<const FinGroupoid>(groupoid_from_json(j.at("cod")));
    f.objMap = get_int_array(j, "objMap");
    f.morMap = get_int_array(j, "morMap");
    try {
        f.validate();
    } catch (const ValidationError& e) {
        bad(std::string("functor does not validate: ") + e.what());
    }
    return f;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("parse: ") + e.what());
    }
}

json load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + hex;
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return digest_bytes(buf.str());
}

}  // namespace ncat::schema
