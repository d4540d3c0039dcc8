#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncat/fingpd.hpp"
#include "ncat/functor_space.hpp"

namespace ncat {

/// A hom element together with a path from its realisation to some target
/// functor (a morphism id in the relevant functor space).
struct FiberElement {
    int element = -1;
    std::uint64_t path = 0;
};

/// Realisation data for one hom groupoid: where its objects and morphisms
/// land in the functor space between the endpoint object groupoids.
struct HomRealisation {
    std::vector<std::uint64_t> objMap;
    std::vector<std::uint64_t> morMap;
};

/// Finite category packaged with its realisation into functor groupoids.
///
/// Composition and identities are carried by witnesses: each identity element
/// comes with a path from its realisation to the identity functor, and each
/// composite element with a path from its realisation to the composite of the
/// factors' realisations. All higher structure is derived from these paths.
struct ConcreteCategory {
    int objCount = 0;
    std::vector<std::shared_ptr<const FinGroupoid>> objPlus;  // per object
    std::vector<std::shared_ptr<const FinGroupoid>> hom;      // pair-indexed
    std::vector<FunctorSpace> homPrime;                       // pair-indexed
    std::vector<HomRealisation> homPlus;                      // pair-indexed
    std::vector<FiberElement> identWitness;                   // per object
    // triple-indexed; entry [g * |hom(x,y)| + f] composes g : y -> z after f : x -> y
    std::vector<std::vector<FiberElement>> cmpWitness;

    size_t pairIndex(int x, int y) const { return static_cast<size_t>(x) * objCount + y; }
    size_t tripleIndex(int x, int y, int z) const {
        return (static_cast<size_t>(x) * objCount + y) * objCount + z;
    }

    const FinGroupoid& homAt(int x, int y) const { return *hom[pairIndex(x, y)]; }
    const FunctorSpace& space(int x, int y) const { return homPrime[pairIndex(x, y)]; }
    int homObjCount(int x, int y) const { return homAt(x, y).objectCount; }

    std::uint64_t realizedIndex(int x, int y, int f) const {
        return homPlus[pairIndex(x, y)].objMap[f];
    }
    GFunctor realizedFunctor(int x, int y, int f) const {
        return space(x, y).functorAt(realizedIndex(x, y, f));
    }
    int ident(int x) const { return identWitness[x].element; }
    const FiberElement& cmpAt(int x, int y, int z, int g, int f) const {
        return cmpWitness[tripleIndex(x, y, z)][static_cast<size_t>(g) * homObjCount(x, y) + f];
    }
    int cmp(int x, int y, int z, int g, int f) const { return cmpAt(x, y, z, g, f).element; }

    /// Index in space(x, z) of realize(g) composed after realize(f).
    std::uint64_t composeRealized(int x, int y, int z, int g, int f) const;

    /// Full structural validation: groupoid axioms, realisation functoriality,
    /// witness endpoints. Throws ValidationError naming the failing component.
    void validate() const;
};

/// Conformity data for one ordered pair of objects.
struct PairConformity {
    int x = 0;
    int y = 0;
    GpdLevel level = kLevelMinusTwo;
    std::uint64_t witnessFunctor = 0;  // target functor achieving the level
    int witnessFiberPoints = 0;        // objects of the fiber at the witness
    int witnessFiberClasses = 0;       // its isomorphism classes
};

struct LawViolation {
    std::string law;
    std::vector<int> objects;   // the objects involved, in order
    std::vector<int> elements;  // the hom elements involved, in order
    std::string detail;
};

struct LawReport {
    bool checked = false;
    bool passed = true;
    std::vector<LawViolation> violations;
};

struct ConcretenessReport {
    std::vector<PairConformity> perPair;
    GpdLevel maxFiberLevel = kLevelMinusTwo;
    int minimalLevel = 0;  // 2 + maxFiberLevel, floored at 0
    int checkedLevel = 0;  // level whose law suite was run
    LawReport unitAssoc;         // run when checkedLevel >= 2
    LawReport pentagonTriangle;  // run when checkedLevel >= 3
    bool certified = false;
};

/// Guard taken by builders before allocating composition-witness tables:
/// the total entry count across all triples must stay within the cap.
void require_witness_budget(const ConcreteCategory& c);

/// Per-pair fiber levels only (no law suites, no witness validation).
std::vector<PairConformity> pair_conformity(const ConcreteCategory& c);

/// True when the realisation is injective on the elements of every hom.
bool realisation_injective(const ConcreteCategory& c);

/// Validate, compute conformity, and run the law suite of the minimal level.
ConcretenessReport conformity_report(const ConcreteCategory& c);

/// Certify at an explicit level in 0..3, running that level's law suite.
/// A level below minimal yields an uncertified report whose perPair entries
/// carry the offending fiber witnesses; levels outside 0..3 are rejected.
ConcretenessReport certify_at(const ConcreteCategory& c, int level);

/// Re-certification at a higher level; alias for certify_at with the
/// monotonicity precondition spelled out in the error message.
ConcretenessReport raise_level(const ConcreteCategory& c, int level);

LawReport check_unit_assoc(const ConcreteCategory& c);
LawReport check_pentagon_triangle(const ConcreteCategory& c);

/// Equivalence data for an element f : x -> y, graded by level.
struct CatEquivWitness {
    bool value = false;
    int level = 0;
    bool realizedEquivalence = false;
    std::optional<std::uint64_t> realizedInverse;  // functor index in space(y, x)
    std::optional<int> leftInverse;                // g  with g . f  iso to ident x
    std::optional<int> rightInverse;               // g' with f . g' iso to ident y
    std::optional<int> leftIdentityIso;            // hom(x,x) morphism g.f -> ident x
    std::optional<int> rightIdentityIso;           // hom(y,y) morphism f.g' -> ident y
    std::optional<FiberElement> inverseFiber;      // left inverse over realizedInverse
};

/// Decide equivalence of f : x -> y at the given level (0, 1 or 2).
/// Level 0 asks that the realisation is an equivalence of groupoids;
/// level 1 additionally demands one-sided inverses up to isomorphism and a
/// fiber element over the realized inverse; level 2 records the identifying
/// isomorphisms explicitly.
CatEquivWitness cat_is_equiv(const ConcreteCategory& c, int x, int y, int f, int level);

struct UnivalenceViolation {
    int x = 0;
    int y = 0;
    std::vector<int> equivalences;
    std::string reason;
};

struct UnivalenceReport {
    bool univalent = false;
    int levelUsed = 0;
    std::optional<UnivalenceViolation> violation;
};

/// Univalence check: no equivalences between distinct objects, and for each
/// object the full subgroupoid of hom(x,x) on its equivalences is contractible.
UnivalenceReport check_univalent(const ConcreteCategory& c);

/// Full subcategory of the groupoid world on the given objects: hom(x,y) is
/// the canonical functor groupoid, realisation is the identity, witnesses are
/// identity paths.
ConcreteCategory full_subcategory(std::vector<std::shared_ptr<const FinGroupoid>> objects);

}  // namespace ncat
