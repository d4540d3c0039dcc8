#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncat/finset.hpp"

namespace ncat {

/// Span of finite sets X <- apex -> Y.
struct Span {
    FinFun left;   // apex -> X
    FinFun right;  // apex -> Y

    FinSet apex() const { return left.dom; }
    FinSet src() const { return left.cod; }
    FinSet tgt() const { return right.cod; }
    void validate() const;
};

Span identity_span(FinSet x);

/// t after s, apex the pullback {(u,v) : s.right(u) = t.left(v)} in
/// lexicographic order (u-major), legs projected through the factors.
Span span_compose(const Span& t, const Span& s);

/// A bijection of apexes commuting with both legs, when one exists.
/// Exhaustive search over apex permutations, guarded by the global cap;
/// endpoints must agree.
std::optional<FinFun> span_iso(const Span& s, const Span& t);

/// A finite set over a base.
struct Family {
    FinFun proj;  // total -> base

    FinSet total() const { return proj.dom; }
    FinSet base() const { return proj.cod; }
};

/// Pull the family back along the left leg (pairs (a,u) with proj(a) =
/// left(u), lexicographic), then push forward along the right leg.
Family pull_push(const Span& s, const Family& a);

/// Componentwise bijections F(Fin(k)) -> G(Fin(k)), k = 0..universeMax, with
/// no naturality constraint between the components.
struct PointwisePath {
    std::vector<FinFun> components;
};

struct EndoFiberElement {
    int vSize = 0;        // |V|; a bijection at Fin(1) forces it to |U|
    PointwisePath path;   // from (V x -) to (U x -)
};

struct EndoFiberAnalysis {
    std::uint64_t count = 0;
    std::vector<EndoFiberElement> witnesses;  // >= 2 distinct ones when they exist
    std::string caveat;
};

/// Fiber of the pull-push realisation at the functor (U x -), over the
/// universe {Fin(0), ..., Fin(universeMax)}: pairs (V, pointwise path
/// (V x -) -> (U x -)). The count is the full product of component
/// permutation counts; two explicit witnesses are materialized, the second
/// one transposing the first two elements of the smallest nonempty component.
EndoFiberAnalysis endo_fiber_analysis(FinSet u, int universeMax);

}  // namespace ncat
