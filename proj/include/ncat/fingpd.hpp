#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ncat/common.hpp"
#include "ncat/finset.hpp"

namespace ncat {

/// Truncation level of a finite groupoid, as a type.
///  -2 contractible, -1 empty-or-contractible, 0 all automorphisms trivial, 1 anything.
using GpdLevel = int;

inline constexpr GpdLevel kLevelMinusTwo = -2;  // contractible
inline constexpr GpdLevel kLevelMinusOne = -1;  // empty or contractible
inline constexpr GpdLevel kLevelZero = 0;       // discrete up to iso
inline constexpr GpdLevel kLevelOne = 1;        // no constraint

struct Morphism {
    int src = 0;
    int tgt = 0;
};

/// Finite groupoid: objects 0..objectCount-1, morphisms indexed by id,
/// identities per object, total composition table for matching pairs.
struct FinGroupoid {
    int objectCount = 0;
    std::vector<Morphism> morphisms;
    std::vector<int> identities;  // object -> morphism id
    std::vector<int> compTable;   // [g * |mor| + f] -> id of g.f, or -1 when tgt(f) != src(g)

    int morphismCount() const { return static_cast<int>(morphisms.size()); }
    int src(int m) const { return morphisms[m].src; }
    int tgt(int m) const { return morphisms[m].tgt; }
    int identity(int x) const { return identities[x]; }

    /// g after f.
    int compose(int g, int f) const;
    int inverse(int m) const;
    bool isDiscrete() const { return morphismCount() == objectCount; }

    /// Morphism ids from a to b, ascending.
    std::vector<int> morphismsBetween(int a, int b) const;

    /// Connected-component labels (smallest member object as representative).
    std::vector<int> componentLabels() const;

    void validate() const;
};

bool operator==(const FinGroupoid& a, const FinGroupoid& b);

FinGroupoid discrete_groupoid(int n);

/// Full subgroupoid induced on the listed objects (objects reindexed in the
/// given order, morphism order inherited).
FinGroupoid full_subgroupoid(const FinGroupoid& g, const std::vector<int>& objects);

/// Original morphism ids of full_subgroupoid(g, objects), in the subgroupoid's
/// morphism order.
std::vector<int> full_subgroupoid_morphisms(const FinGroupoid& g, const std::vector<int>& objects);

/// Functor between finite groupoids. The groupoids travel with the functor
/// through shared ownership so values stay self-contained.
struct GFunctor {
    std::shared_ptr<const FinGroupoid> dom;
    std::shared_ptr<const FinGroupoid> cod;
    std::vector<int> objMap;
    std::vector<int> morMap;

    void validate() const;
};

bool operator==(const GFunctor& a, const GFunctor& b);
bool functor_data_less(const GFunctor& a, const GFunctor& b);

GFunctor identity_functor(std::shared_ptr<const FinGroupoid> g);
GFunctor compose_functor(const GFunctor& g, const GFunctor& f);

/// Natural isomorphism between parallel functors, one component per object.
struct NatIso {
    GFunctor source;
    GFunctor target;
    std::vector<int> components;  // object of dom -> morphism id in cod

    void validate() const;
};

NatIso identity_natiso(const GFunctor& f);
NatIso compose_natiso(const NatIso& b, const NatIso& a);  // vertical
NatIso invert_natiso(const NatIso& a);
/// h . alpha : h.F => h.G for alpha : F => G.
NatIso whisker_post(const GFunctor& h, const NatIso& alpha);
/// alpha . h : F.h => G.h.
NatIso whisker_pre(const NatIso& alpha, const GFunctor& h);

/// All functors G -> H in canonical order: objMap lexicographic, then morMap
/// lexicographic. Guarded by the global cap.
std::vector<GFunctor> enumerate_functors(std::shared_ptr<const FinGroupoid> g,
                                         std::shared_ptr<const FinGroupoid> h);

/// All natural isomorphisms F => G, components enumerated lexicographically.
std::vector<std::vector<int>> enumerate_natiso_components(const GFunctor& f, const GFunctor& g);

/// The groupoid of functors G -> H and natural isomorphisms, with the functor
/// and iso lists kept alongside the bare groupoid.
struct FunctorGroupoid {
    std::shared_ptr<const FinGroupoid> dom;
    std::shared_ptr<const FinGroupoid> cod;
    FinGroupoid gpd;  // objects index `functors`, morphisms index `isos`
    std::vector<GFunctor> functors;
    struct Iso {
        int srcIdx;
        int tgtIdx;
        std::vector<int> components;
    };
    std::vector<Iso> isos;

    int indexOfFunctor(const GFunctor& f) const;         // -1 when absent
    int indexOfIso(int srcIdx, int tgtIdx, const std::vector<int>& comps) const;
};

FunctorGroupoid functor_groupoid(std::shared_ptr<const FinGroupoid> g,
                                 std::shared_ptr<const FinGroupoid> h);

/// Homotopy fiber of F at object h of the codomain.
struct HomotopyFiber {
    FinGroupoid gpd;
    std::vector<std::pair<int, int>> points;          // fiber object -> (g, phi)
    std::vector<std::pair<int, int>> morphismSource;  // fiber morphism -> (fiber src obj, psi)
};

HomotopyFiber homotopy_fiber(const GFunctor& f, int h);

GpdLevel trunc_level_groupoid(const FinGroupoid& g);

/// Max over fibers of F (one representative per iso class of the codomain);
/// -2 when the codomain is empty.
GpdLevel trunc_level_functor(const GFunctor& f);

struct EquivalenceWitness {
    bool value = false;
    std::optional<GFunctor> inverse;
    std::optional<NatIso> unit;    // inverse . F => id_dom
    std::optional<NatIso> counit;  // F . inverse => id_cod
};

/// Decides whether F is an equivalence (trunc level -2 on every fiber) and, if
/// so, searches a quasi-inverse with both natural isomorphisms.
EquivalenceWitness is_equivalence(const GFunctor& f);

bool is_fully_faithful(const GFunctor& f);

std::vector<int> loop_group(const FinGroupoid& g, int x);

// --- fixture catalogue ---------------------------------------------------

namespace fixtures {

FinGroupoid empty_groupoid();
FinGroupoid point();  // one object, one morphism
FinGroupoid cyclic(int n);  // one object, Z/n worth of loops (morphism 0 = identity)
FinGroupoid chaotic(int n);  // n objects, exactly one morphism between each pair
FinGroupoid sum_groupoid(const FinGroupoid& a, const FinGroupoid& b);
FinGroupoid product_groupoid(const FinGroupoid& a, const FinGroupoid& b);

/// Lookup by name: "empty", "one", "bz2", "bz3", "bzn:k", "discrete:k", "chaotic:k".
FinGroupoid by_name(const std::string& name);

/// Names of the groupoids used by exhaustive fixture sweeps (<= 3 objects).
std::vector<std::string> sweep_names();

}  // namespace fixtures

}  // namespace ncat
