#include "ncat/spans.hpp"

#include <algorithm>
#include <numeric>

namespace ncat {

void Span::validate() const {
    left.validate();
    right.validate();
    if (!(left.dom == right.dom)) throw ValidationError("span: legs disagree on the apex");
}

Span identity_span(FinSet x) { return {identity_fun(x), identity_fun(x)}; }

Span span_compose(const Span& t, const Span& s) {
    s.validate();
    t.validate();
    if (!(s.tgt() == t.src())) throw InvalidInput("span_compose: endpoint mismatch");
    std::vector<int> lTable, rTable;
    for (int u = 0; u < s.apex().size; ++u)
        for (int v = 0; v < t.apex().size; ++v) {
            if (s.right(u) != t.left(v)) continue;
            lTable.push_back(s.left(u));
            rTable.push_back(t.right(v));
        }
    FinSet apex{static_cast<int>(lTable.size())};
    return {{apex, s.src(), lTable}, {apex, t.tgt(), rTable}};
}

std::optional<FinFun> span_iso(const Span& s, const Span& t) {
    s.validate();
    t.validate();
    if (!(s.src() == t.src()) || !(s.tgt() == t.tgt()))
        throw InvalidInput("span_iso: endpoint mismatch");
    const int n = s.apex().size;
    if (n != t.apex().size) return std::nullopt;
    std::uint64_t perms = 1;
    for (int i = 2; i <= n; ++i) perms = sat_mul(perms, static_cast<std::uint64_t>(i));
    require_within_cap(perms, "span apex permutations");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            ok = t.left(p[u]) == s.left(u) && t.right(p[u]) == s.right(u);
        if (ok) return FinFun{s.apex(), t.apex(), p};
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

Family pull_push(const Span& s, const Family& a) {
    s.validate();
    a.proj.validate();
    if (!(a.base() == s.src())) throw InvalidInput("pull_push: family is not over the span's source");
    std::vector<int> table;
    for (int e = 0; e < a.total().size; ++e)
        for (int u = 0; u < s.apex().size; ++u) {
            if (a.proj(e) != s.left(u)) continue;
            table.push_back(s.right(u));
        }
    return {{FinSet{static_cast<int>(table.size())}, s.tgt(), table}};
}

EndoFiberAnalysis endo_fiber_analysis(FinSet u, int universeMax) {
    if (u.size < 0 || universeMax < 0) throw InvalidInput("endo_fiber_analysis: negative size");
    EndoFiberAnalysis out;
    out.caveat =
        "count taken in a bounded extensional model; it does not settle whether the "
        "corresponding identity-function type is contractible";
    if (u.size > universeMax && u.size != 0) return out;  // no V of the right size in universe

    std::uint64_t count = 1;
    for (int k = 0; k <= universeMax; ++k) {
        const int cells = u.size * k;
        for (int i = 2; i <= cells; ++i) count = sat_mul(count, static_cast<std::uint64_t>(i));
    }
    if (count == UINT64_MAX) throw EnumerationOverflow("endo_fiber_analysis: count overflows");
    out.count = count;

    EndoFiberElement ident{u.size, {}};
    for (int k = 0; k <= universeMax; ++k)
        ident.path.components.push_back(identity_fun(FinSet{u.size * k}));
    out.witnesses.push_back(ident);
    if (count >= 2) {
        EndoFiberElement swapped = ident;
        for (auto& comp : swapped.path.components)
            if (comp.dom.size >= 2) {
                std::swap(comp.table[0], comp.table[1]);
                break;
            }
        out.witnesses.push_back(swapped);
    }
    return out;
}

}  // namespace ncat
