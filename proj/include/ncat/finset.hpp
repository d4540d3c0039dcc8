#pragma once

#include <optional>
#include <vector>

#include "ncat/common.hpp"

namespace ncat {

/// Finite set {0, ..., size-1}.
struct FinSet {
    int size = 0;
};

inline bool operator==(FinSet a, FinSet b) { return a.size == b.size; }

/// Truncation level of a map between finite sets, measured on its fibers.
///  -2: every fiber is a single point (bijection)
///  -1: every fiber has at most one point (injection)
///   0: no constraint
enum class SetTruncLevel : int {
    Bijection = -2,
    Injection = -1,
    Any = 0,
};

/// Total function between finite sets, given by its value table.
struct FinFun {
    FinSet dom;
    FinSet cod;
    std::vector<int> table;  // table[i] in [0, cod.size)

    int operator()(int i) const { return table[i]; }
    void validate() const;
};

bool operator==(const FinFun& a, const FinFun& b);

FinFun identity_fun(FinSet x);
FinFun constant_fun(FinSet x, FinSet y, int value);

/// g after f; domains must line up.
FinFun compose(const FinFun& g, const FinFun& f);

/// Elements of the domain mapping to y, ascending.
std::vector<int> fiber(const FinFun& f, int y);

/// Minimal truncation level of f.
SetTruncLevel trunc_level_set_map(const FinFun& f);

/// A zig-zag witnessing that X and Y are "connected" through maps:
/// either a map X -> Y (forward) or Y -> X (backward).
struct ConnectivityWitness {
    bool forward = true;
    FinFun map;
};

/// Deterministic witness: empty inclusion when X is empty, otherwise the
/// constant map at 0 when Y is nonempty, otherwise the empty inclusion Y -> X.
ConnectivityWitness connectivity_witness(FinSet x, FinSet y);

/// All maps X -> Y in lexicographic table order. Guarded by the global cap.
std::vector<FinFun> enumerate_maps(FinSet x, FinSet y);

}  // namespace ncat
