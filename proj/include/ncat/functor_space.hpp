#pragma once

#include <memory>
#include <vector>

#include "ncat/fingpd.hpp"

namespace ncat {

/// Canonical groupoid of functors between two finite groupoids.
///
/// When both endpoints are discrete the space is kept symbolic: a functor is
/// its object table, its index is the table's lexicographic rank, and the only
/// natural isomorphisms are identities (morphism id = functor index). That
/// keeps huge discrete spaces (e.g. maps between large path sets) usable
/// without enumerating them. Otherwise the full functor groupoid is built.
class FunctorSpace {
  public:
    static FunctorSpace make(std::shared_ptr<const FinGroupoid> dom,
                             std::shared_ptr<const FinGroupoid> cod);

    bool symbolic() const { return symbolic_; }
    const std::shared_ptr<const FinGroupoid>& domain() const { return dom_; }
    const std::shared_ptr<const FinGroupoid>& codomain() const { return cod_; }

    std::uint64_t functorCount() const;
    std::uint64_t morphismCount() const;

    GFunctor functorAt(std::uint64_t idx) const;
    /// Index of a functor in the canonical enumeration; throws when absent.
    std::uint64_t indexOf(const GFunctor& f) const;
    std::uint64_t identityFunctorIndex() const;

    struct MorphismView {
        std::uint64_t src;
        std::uint64_t tgt;
    };
    MorphismView morphism(std::uint64_t id) const;
    NatIso natisoAt(std::uint64_t id) const;
    /// Morphism id of a natural isomorphism; throws when absent.
    std::uint64_t indexOfNatIso(const NatIso& iso) const;
    std::uint64_t identityMorphismAt(std::uint64_t functorIdx) const;
    std::uint64_t composeMorphisms(std::uint64_t b, std::uint64_t a) const;
    std::uint64_t invertMorphism(std::uint64_t id) const;
    std::vector<std::uint64_t> morphismsBetween(std::uint64_t a, std::uint64_t b) const;

    /// Representative functor index per isomorphism class, ascending.
    std::vector<std::uint64_t> isoClassRepresentatives() const;

    /// Materialized view; throws for symbolic spaces.
    const FunctorGroupoid& materialized() const;
    /// Shared handle to the materialized space's underlying groupoid.
    std::shared_ptr<const FinGroupoid> groupoidPtr() const;

  private:
    bool symbolic_ = false;
    std::shared_ptr<const FinGroupoid> dom_;
    std::shared_ptr<const FinGroupoid> cod_;
    std::shared_ptr<const FunctorGroupoid> fg_;  // materialized mode
    std::uint64_t count_ = 0;                    // symbolic mode
};

}  // namespace ncat
