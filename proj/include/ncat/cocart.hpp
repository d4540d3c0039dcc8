#pragma once

#include <string>
#include <vector>

#include "ncat/concat.hpp"
#include "ncat/finset.hpp"

namespace ncat {

/// A concrete category whose objects are split into a source side A and a
/// target side B with no morphisms from B back to A.
struct ArrowlikeCategory {
    ConcreteCategory underlying;
    std::vector<bool> inB;  // tag per object: true = target side

    std::vector<int> aObjects() const;
    std::vector<int> bObjects() const;
};

/// Validate the partition: every hom from a B-object to an A-object must be
/// empty. Throws ValidationError naming the first offending pair.
ArrowlikeCategory check_arrowlike(const ConcreteCategory& c, const std::vector<bool>& inB);

/// Evidence that precomposition with f is an equivalence onto hom(a, bPrime):
/// the element bijection g -> cmp(g, f), stored as a lookup table.
struct CocartEvidence {
    int bPrime = 0;
    FinFun map;  // hom(b, bPrime) -> hom(a, bPrime)
};

struct CocartWitness {
    int a = 0;
    int b = 0;
    int f = 0;
    bool value = false;
    std::vector<CocartEvidence> evidence;  // one per B-object when value holds
};

/// Is f : a -> b (a in A, b in B) cocartesian? True when for every B-object
/// the precomposition map is a bijection of hom elements that respects the
/// isomorphism relation in both directions.
CocartWitness is_cocartesian(const ArrowlikeCategory& ac, int a, int b, int f);

struct FibrationReport {
    bool value = false;
    std::vector<CocartWitness> found;  // all cocartesian morphisms, canonical order
    std::vector<int> objectsWithout;   // A-objects with none
};

/// Every A-object must have at least one cocartesian morphism out of it.
FibrationReport is_cocartesian_fibration(const ArrowlikeCategory& ac);

/// Functor between concrete categories: object map plus per-pair element maps.
struct CFunctor {
    std::vector<int> objMap;
    std::vector<std::vector<int>> homMap;  // pair-indexed in the source category

    /// Identity and composition preservation, exhaustively.
    void validate(const ConcreteCategory& c, const ConcreteCategory& d) const;
};

/// The graph of F : C -> D: A-side objects are C's with object groupoid
/// borrowed from their image, B-side objects are D's; hom(inl a, inr b) =
/// hom_D(F a, b); backward homs empty. C must have discrete hom groupoids
/// (the element maps carry no action on hom isomorphisms).
ArrowlikeCategory graph_of_functor(const ConcreteCategory& c, const ConcreteCategory& d,
                                   const CFunctor& f);

struct ExtractedFunctor {
    std::vector<int> aObjects;        // A-side objects, ascending
    std::vector<int> objMap;          // parallel: chosen target B-object
    std::vector<int> chosenMorphism;  // parallel: the chosen cocartesian element
    // action[i][j] maps elements of hom(aObjects[i], aObjects[j]) to elements
    // of hom(objMap[i], objMap[j])
    std::vector<std::vector<std::vector<int>>> action;
};

/// Recover a functor from a cocartesian fibration: pick the first cocartesian
/// morphism out of each A-object, transport A-side elements through the
/// evidence bijections, and re-verify functoriality of the result.
ExtractedFunctor extract_functor(const ArrowlikeCategory& ac);

struct UniquenessPair {
    int a = 0;
    int b1 = 0, f1 = 0;
    int b2 = 0, f2 = 0;
    int mediatorI = -1;  // element of hom(b1, b2) carrying f1 to f2
    int mediatorJ = -1;  // element of hom(b2, b1) carrying f2 to f1
    bool identified = false;
};

struct UniquenessReport {
    bool refused = false;
    std::string reason;
    bool value = false;
    std::vector<UniquenessPair> pairs;
};

/// On a univalent category: any two cocartesian morphisms out of the same
/// A-object must share their target and be isomorphic in the hom groupoid;
/// the mediating elements of both transports are reported. Refuses to run
/// when the underlying category is not univalent.
UniquenessReport cocart_uniqueness_check(const ArrowlikeCategory& ac);

}  // namespace ncat
