#include "ncat/delta.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ncat {

bool operator==(const OrdTerm& a, const OrdTerm& b) {
    return a.dom == b.dom && a.cod == b.cod && a.steps == b.steps;
}

OrdTerm ord_z() { return {}; }

OrdTerm ord_sl(const OrdTerm& t) {
    if (t.cod < 1) throw InvalidInput("Sl needs a target with at least one value");
    OrdTerm r = t;
    r.dom += 1;
    r.steps.push_back(0);
    return r;
}

OrdTerm ord_sr(const OrdTerm& t) {
    OrdTerm r = t;
    r.cod += 1;
    r.steps.push_back(1);
    return r;
}

FinFun ord_realize(const OrdTerm& t) {
    std::vector<int> table;
    int n = 0;
    for (std::uint8_t s : t.steps) {
        if (s == 0) {
            table.insert(table.begin(), 0);
        } else {
            for (int& v : table) ++v;
            ++n;
        }
    }
    FinFun f{FinSet{static_cast<int>(table.size())}, FinSet{n}, std::move(table)};
    if (f.dom.size != t.dom || f.cod.size != t.cod)
        throw ValidationError("ordinal term carries a wrong type");
    f.validate();
    return f;
}

OrdTerm ord_canonicalize(const FinFun& f) {
    f.validate();
    if (!std::is_sorted(f.table.begin(), f.table.end()))
        throw InvalidInput("canonicalize: map is not order-preserving");
    int m = f.dom.size;
    int n = f.cod.size;
    std::vector<int> table = f.table;
    std::vector<std::uint8_t> outer;
    while (m != 0 || n != 0) {
        if (m > 0 && table.front() == 0) {
            outer.push_back(0);
            table.erase(table.begin());
            --m;
        } else if (n > 0) {
            for (int& v : table) --v;
            outer.push_back(1);
            --n;
        } else {
            throw InvalidInput("canonicalize: map into the empty ordinal");
        }
    }
    OrdTerm t;
    t.dom = f.dom.size;
    t.cod = f.cod.size;
    t.steps.assign(outer.rbegin(), outer.rend());
    return t;
}

OrdTerm ord_identity(int n) {
    if (n < 0) throw InvalidInput("ordinal size must be nonnegative");
    OrdTerm t = ord_z();
    for (int i = 0; i < n; ++i) t = ord_sl(ord_sr(t));
    return t;
}

OrdTerm ord_compose(const OrdTerm& g, const OrdTerm& f) {
    if (g.dom != f.cod) throw InvalidInput("ord_compose: types do not match");
    if (f.steps.empty()) return g;  // f = Z, so g already has an empty source
    if (g.steps.back() == 1) {      // g = Sr(g')
        OrdTerm g2 = g;
        g2.steps.pop_back();
        g2.cod -= 1;
        return ord_sr(ord_compose(g2, f));
    }
    if (f.steps.back() == 1) {  // g = Sl(g'), f = Sr(f'): the two cancel
        OrdTerm g2 = g;
        g2.steps.pop_back();
        g2.dom -= 1;
        OrdTerm f2 = f;
        f2.steps.pop_back();
        f2.cod -= 1;
        return ord_compose(g2, f2);
    }
    OrdTerm f2 = f;  // g = Sl(g'), f = Sl(f'): peel the shared bottom point
    f2.steps.pop_back();
    f2.dom -= 1;
    return ord_sl(ord_compose(g, f2));
}

std::uint64_t count_ord(int m, int n) {
    if (m < 0 || n < 0) throw InvalidInput("ordinal sizes must be nonnegative");
    std::vector<std::vector<std::uint64_t>> t(m + 1, std::vector<std::uint64_t>(n + 1, 0));
    t[0][0] = 1;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) continue;
            std::uint64_t v = 0;
            if (i >= 1 && j >= 1) v = sat_add(v, t[i - 1][j]);
            if (j >= 1) v = sat_add(v, t[i][j - 1]);
            t[i][j] = v;
        }
    return t[m][n];
}

std::vector<OrdTerm> enumerate_ord(int m, int n) {
    require_within_cap(count_ord(m, n), "ordinal terms");
    if (m == 0 && n == 0) return {ord_z()};
    std::vector<OrdTerm> out;
    if (m >= 1 && n >= 1)
        for (const OrdTerm& t : enumerate_ord(m - 1, n)) out.push_back(ord_sl(t));
    if (n >= 1)
        for (const OrdTerm& t : enumerate_ord(m, n - 1)) out.push_back(ord_sr(t));
    return out;
}

std::string ord_to_string(const OrdTerm& t) {
    std::string s;
    for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) s += (*it == 0) ? "Sl(" : "Sr(";
    s += "Z";
    s.append(t.steps.size(), ')');
    return s;
}

OrdTerm ord_parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    size_t pos = 0;
    std::vector<std::uint8_t> outer;
    while (s.compare(pos, 3, "Sl(") == 0 || s.compare(pos, 3, "Sr(") == 0) {
        outer.push_back(s[pos + 1] == 'l' ? 0 : 1);
        pos += 3;
    }
    if (s.compare(pos, 1, "Z") != 0) throw InvalidInput("ordinal term: expected Z at position " +
                                                        std::to_string(pos));
    pos += 1;
    for (size_t i = 0; i < outer.size(); ++i) {
        if (pos >= s.size() || s[pos] != ')')
            throw InvalidInput("ordinal term: missing closing parenthesis");
        ++pos;
    }
    if (pos != s.size()) throw InvalidInput("ordinal term: trailing characters");
    OrdTerm t = ord_z();
    for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        t = (*it == 0) ? ord_sl(t) : ord_sr(t);
    return t;
}

ConcreteCategory delta_category(int n) {
    if (n < 0) throw InvalidInput("delta category needs a top object >= 0");
    ConcreteCategory c;
    c.objCount = n + 1;
    const int nn = c.objCount;

    c.objPlus.resize(nn);
    for (int k = 0; k < nn; ++k)
        c.objPlus[k] = std::make_shared<FinGroupoid>(discrete_groupoid(k + 1));

    std::vector<std::vector<OrdTerm>> terms(static_cast<size_t>(nn) * nn);
    std::vector<std::map<std::vector<std::uint8_t>, int>> termIndex(static_cast<size_t>(nn) * nn);
    c.hom.resize(static_cast<size_t>(nn) * nn);
    c.homPlus.resize(static_cast<size_t>(nn) * nn);
    c.homPrime.reserve(static_cast<size_t>(nn) * nn);
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y) {
            const size_t p = c.pairIndex(x, y);
            terms[p] = enumerate_ord(x + 1, y + 1);
            for (size_t i = 0; i < terms[p].size(); ++i)
                termIndex[p][terms[p][i].steps] = static_cast<int>(i);
            c.hom[p] = std::make_shared<FinGroupoid>(
                discrete_groupoid(static_cast<int>(terms[p].size())));
            FunctorSpace sp = FunctorSpace::make(c.objPlus[x], c.objPlus[y]);
            HomRealisation real;
            real.objMap.resize(terms[p].size());
            for (size_t i = 0; i < terms[p].size(); ++i) {
                FinFun table = ord_realize(terms[p][i]);
                GFunctor gf{c.objPlus[x], c.objPlus[y], table.table, table.table};
                real.objMap[i] = sp.indexOf(gf);
            }
            real.morMap = real.objMap;
            c.homPlus[p] = std::move(real);
            c.homPrime.push_back(std::move(sp));
        }

    c.identWitness.resize(nn);
    for (int k = 0; k < nn; ++k) {
        const size_t p = c.pairIndex(k, k);
        int elem = termIndex[p].at(ord_identity(k + 1).steps);
        c.identWitness[k] =
            FiberElement{elem, c.space(k, k).identityMorphismAt(c.homPlus[p].objMap[elem])};
    }

    require_witness_budget(c);
    c.cmpWitness.resize(static_cast<size_t>(nn) * nn * nn);
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y)
            for (int z = 0; z < nn; ++z) {
                auto& table = c.cmpWitness[c.tripleIndex(x, y, z)];
                const auto& gs = terms[c.pairIndex(y, z)];
                const auto& fs = terms[c.pairIndex(x, y)];
                const auto& outIndex = termIndex[c.pairIndex(x, z)];
                const auto& outReal = c.homPlus[c.pairIndex(x, z)];
                const FunctorSpace& sp = c.space(x, z);
                table.resize(gs.size() * fs.size());
                for (size_t g = 0; g < gs.size(); ++g)
                    for (size_t f = 0; f < fs.size(); ++f) {
                        int elem = outIndex.at(ord_compose(gs[g], fs[f]).steps);
                        table[g * fs.size() + f] =
                            FiberElement{elem, sp.identityMorphismAt(outReal.objMap[elem])};
                    }
            }

    c.validate();
    return c;
}

}  // namespace ncat
