#include "ncat/finset.hpp"

#include <algorithm>

namespace ncat {

void FinFun::validate() const {
    if (static_cast<int>(table.size()) != dom.size)
        throw ValidationError("FinFun: table size " + std::to_string(table.size()) +
                              " does not match domain size " + std::to_string(dom.size));
    for (int i = 0; i < dom.size; ++i)
        if (table[i] < 0 || table[i] >= cod.size)
            throw ValidationError("FinFun: value " + std::to_string(table[i]) + " at " +
                                  std::to_string(i) + " outside codomain of size " +
                                  std::to_string(cod.size));
}

bool operator==(const FinFun& a, const FinFun& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
}

FinFun identity_fun(FinSet x) {
    FinFun f{x, x, {}};
    f.table.resize(x.size);
    for (int i = 0; i < x.size; ++i) f.table[i] = i;
    return f;
}

FinFun constant_fun(FinSet x, FinSet y, int value) {
    if (value < 0 || value >= y.size) throw InvalidInput("constant_fun: value outside codomain");
    return FinFun{x, y, std::vector<int>(static_cast<size_t>(x.size), value)};
}

FinFun compose(const FinFun& g, const FinFun& f) {
    if (!(f.cod == g.dom))
        throw InvalidInput("compose: codomain of first argument (" + std::to_string(f.cod.size) +
                           ") does not match domain of second (" + std::to_string(g.dom.size) + ")");
    FinFun h{f.dom, g.cod, {}};
    h.table.resize(f.dom.size);
    for (int i = 0; i < f.dom.size; ++i) h.table[i] = g.table[f.table[i]];
    return h;
}

std::vector<int> fiber(const FinFun& f, int y) {
    if (y < 0 || y >= f.cod.size) throw InvalidInput("fiber: point outside codomain");
    std::vector<int> out;
    for (int i = 0; i < f.dom.size; ++i)
        if (f.table[i] == y) out.push_back(i);
    return out;
}

SetTruncLevel trunc_level_set_map(const FinFun& f) {
    std::vector<int> hits(static_cast<size_t>(f.cod.size), 0);
    for (int v : f.table) ++hits[v];
    bool injective = true;
    bool surjective = true;
    for (int h : hits) {
        if (h > 1) injective = false;
        if (h == 0) surjective = false;
    }
    if (injective && surjective) return SetTruncLevel::Bijection;
    if (injective) return SetTruncLevel::Injection;
    return SetTruncLevel::Any;
}

ConnectivityWitness connectivity_witness(FinSet x, FinSet y) {
    if (x.size == 0) return {true, FinFun{x, y, {}}};
    if (y.size > 0) return {true, constant_fun(x, y, 0)};
    return {false, FinFun{y, x, {}}};
}

std::vector<FinFun> enumerate_maps(FinSet x, FinSet y) {
    if (y.size == 0 && x.size > 0) return {};
    require_within_cap(sat_pow(static_cast<std::uint64_t>(y.size), static_cast<std::uint64_t>(x.size)),
                       "enumerate_maps");
    std::vector<FinFun> out;
    std::vector<int> table(static_cast<size_t>(x.size), 0);
    while (true) {
        out.push_back(FinFun{x, y, table});
        int i = x.size - 1;
        while (i >= 0 && table[i] == y.size - 1) {
            table[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++table[i];
    }
    return out;
}

}  // namespace ncat
