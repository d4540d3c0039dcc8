#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ncat/concat.hpp"

namespace ncat {

/// Finite 1-category presented by hom sets and tables: objects 0..n-1,
/// hom(x,y) = {0..homSize(x,y)-1}, a unit element per object and a total
/// composition table per triple. Everything is validated exhaustively.
struct FiniteOneCategory {
    int objectCount = 0;
    std::vector<int> homSize;  // pair-indexed x*n+y
    std::vector<int> unit;     // per object, an element of hom(x,x)
    // triple-indexed; entry [g * homSize(x,y) + f] composes g : y -> z after f : x -> y
    std::vector<std::vector<int>> compTable;

    size_t pairIndex(int x, int y) const { return static_cast<size_t>(x) * objectCount + y; }
    size_t tripleIndex(int x, int y, int z) const {
        return (static_cast<size_t>(x) * objectCount + y) * objectCount + z;
    }
    int homAt(int x, int y) const { return homSize[pairIndex(x, y)]; }
    int compose(int x, int y, int z, int g, int f) const {
        return compTable[tripleIndex(x, y, z)][static_cast<size_t>(g) * homAt(x, y) + f];
    }

    void validate() const;
};

/// One-object category from a monoid multiplication table; table[g*n+f] = g.f.
FiniteOneCategory monoid_category(const std::vector<int>& mulTable, int unitElem);

/// All associative unital multiplication tables of the given size with unit 0,
/// one representative per isomorphism class (lexicographically least table
/// under relabelings fixing the unit), in ascending table order.
std::vector<std::vector<int>> enumerate_monoids(int size);

/// Embed a finite 1-category: an object's groupoid is the discrete groupoid of
/// pairs (y, f in hom(y,x)); an element acts by postcomposition. Identity and
/// composition witnesses hold strictly exactly because the category is unital
/// and associative.
ConcreteCategory aks_embed(const FiniteOneCategory& d);

struct TypeCategoryResult {
    ConcreteCategory cat;
    int computedMinimalLevel = 0;
    int claimedLevel = 1;  // the general claim for this construction
    bool diverges = false;
};

/// A groupoid as a category: hom(x,y) is the discrete groupoid on the
/// morphisms, an object's groupoid is the slice of morphisms into it, and
/// elements act by postcomposition. The result reports the computed minimal
/// level next to the claimed one because they disagree on groupoids with
/// nontrivial loops (the slice is contractible, so the fiber picks up the
/// whole hom set).
TypeCategoryResult type_as_category(std::shared_ptr<const FinGroupoid> x);

/// Full subcategory of the groupoid world cut down to functors whose fibers
/// are at most n-truncated. Identities always qualify; closure of the kept
/// sets under composition is re-verified while the witnesses are built.
ConcreteCategory truncated_maps_category(std::vector<std::shared_ptr<const FinGroupoid>> objects,
                                         GpdLevel n);

struct PointedGroupoid {
    std::shared_ptr<const FinGroupoid> base;
    int basepoint = 0;
};

struct PointedObstruction {
    int p = 0;
    int q = 0;
    std::uint64_t functorIdx = 0;  // realisation target whose fiber is fat
    int fiberClasses = 0;          // isomorphism classes in that fiber (>= 2)
};

struct PointedResult {
    ConcreteCategory cat;
    int minimalLevel = 0;
    std::vector<PointedObstruction> obstructions;
};

/// Category of pointed groupoids. Hom elements are pairs (F, phi: F(p) -> q);
/// their isomorphisms are the natural isomorphisms compatible with the point
/// paths; the realisation forgets phi. With truncate = -1 the point path is
/// collapsed to the proposition "F(p) and q are connected" and the hom becomes
/// the full subgroupoid of qualifying functors.
PointedResult pointed_category(const std::vector<PointedGroupoid>& ps,
                               std::optional<GpdLevel> truncate = std::nullopt);

struct CombineResult {
    ConcreteCategory cat;
    bool raisedFromZero = false;  // some input had minimal level 0
};

/// Tagged sum: homs within a factor are untouched, cross homs are empty.
/// The result is never 0-concrete when both factors are inhabited, so
/// level-0 inputs are raised with a notice.
CombineResult disjoint_union(const ConcreteCategory& a, const ConcreteCategory& b);

/// Product: objects are pairs, an object's groupoid is the disjoint union of
/// the factors', homs are product groupoids acting summand-wise.
CombineResult product_category(const ConcreteCategory& a, const ConcreteCategory& b);

}  // namespace ncat
