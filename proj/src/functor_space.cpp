#include "ncat/functor_space.hpp"

#include <algorithm>

namespace ncat {

FunctorSpace FunctorSpace::make(std::shared_ptr<const FinGroupoid> dom,
                                std::shared_ptr<const FinGroupoid> cod) {
    FunctorSpace s;
    s.dom_ = dom;
    s.cod_ = cod;
    if (dom->isDiscrete() && cod->isDiscrete()) {
        s.symbolic_ = true;
        if (dom->objectCount > 0 && cod->objectCount == 0)
            s.count_ = 0;
        else
            s.count_ = sat_pow(static_cast<std::uint64_t>(cod->objectCount),
                               static_cast<std::uint64_t>(dom->objectCount));
        if (s.count_ == UINT64_MAX)
            throw EnumerationOverflow("FunctorSpace: discrete functor count overflows");
        return s;
    }
    s.fg_ = std::make_shared<FunctorGroupoid>(functor_groupoid(dom, cod));
    return s;
}

std::uint64_t FunctorSpace::functorCount() const {
    return symbolic_ ? count_ : fg_->functors.size();
}

std::uint64_t FunctorSpace::morphismCount() const {
    return symbolic_ ? count_ : fg_->isos.size();
}

GFunctor FunctorSpace::functorAt(std::uint64_t idx) const {
    if (idx >= functorCount()) throw InvalidInput("FunctorSpace: functor index out of range");
    if (!symbolic_) return fg_->functors[idx];
    const int n = dom_->objectCount;
    const std::uint64_t radix = static_cast<std::uint64_t>(cod_->objectCount);
    GFunctor f{dom_, cod_, std::vector<int>(static_cast<size_t>(n), 0), {}};
    std::uint64_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
        f.objMap[i] = static_cast<int>(rest % radix);
        rest /= radix;
    }
    f.morMap = f.objMap;  // discrete morphism ids coincide with object ids
    return f;
}

std::uint64_t FunctorSpace::indexOf(const GFunctor& f) const {
    if (!symbolic_) {
        int i = fg_->indexOfFunctor(f);
        if (i < 0) throw InvalidInput("FunctorSpace: functor not in enumeration");
        return static_cast<std::uint64_t>(i);
    }
    std::uint64_t idx = 0;
    const std::uint64_t radix = static_cast<std::uint64_t>(cod_->objectCount);
    for (int v : f.objMap) {
        if (v < 0 || v >= cod_->objectCount) throw InvalidInput("FunctorSpace: value out of range");
        idx = idx * radix + static_cast<std::uint64_t>(v);
    }
    return idx;
}

std::uint64_t FunctorSpace::identityFunctorIndex() const {
    return indexOf(identity_functor(dom_));
}

FunctorSpace::MorphismView FunctorSpace::morphism(std::uint64_t id) const {
    if (symbolic_) {
        if (id >= count_) throw InvalidInput("FunctorSpace: morphism id out of range");
        return {id, id};
    }
    const auto& iso = fg_->isos.at(id);
    return {static_cast<std::uint64_t>(iso.srcIdx), static_cast<std::uint64_t>(iso.tgtIdx)};
}

NatIso FunctorSpace::natisoAt(std::uint64_t id) const {
    if (symbolic_) return identity_natiso(functorAt(id));
    const auto& iso = fg_->isos.at(id);
    return NatIso{fg_->functors[iso.srcIdx], fg_->functors[iso.tgtIdx], iso.components};
}

std::uint64_t FunctorSpace::indexOfNatIso(const NatIso& iso) const {
    if (symbolic_) {
        std::uint64_t s = indexOf(iso.source), t = indexOf(iso.target);
        if (s != t) throw InvalidInput("FunctorSpace: discrete space has only identity isos");
        return s;
    }
    int s = fg_->indexOfFunctor(iso.source);
    int t = fg_->indexOfFunctor(iso.target);
    int id = s < 0 || t < 0 ? -1 : fg_->indexOfIso(s, t, iso.components);
    if (id < 0) throw InvalidInput("FunctorSpace: natural isomorphism not in enumeration");
    return static_cast<std::uint64_t>(id);
}

std::uint64_t FunctorSpace::identityMorphismAt(std::uint64_t functorIdx) const {
    if (symbolic_) {
        if (functorIdx >= count_) throw InvalidInput("FunctorSpace: functor index out of range");
        return functorIdx;
    }
    return static_cast<std::uint64_t>(fg_->gpd.identity(static_cast<int>(functorIdx)));
}

std::uint64_t FunctorSpace::composeMorphisms(std::uint64_t b, std::uint64_t a) const {
    if (symbolic_) {
        if (a != b) throw InvalidInput("FunctorSpace: identity isos compose only with themselves");
        return a;
    }
    return static_cast<std::uint64_t>(fg_->gpd.compose(static_cast<int>(b), static_cast<int>(a)));
}

std::uint64_t FunctorSpace::invertMorphism(std::uint64_t id) const {
    if (symbolic_) return id;
    return static_cast<std::uint64_t>(fg_->gpd.inverse(static_cast<int>(id)));
}

std::vector<std::uint64_t> FunctorSpace::morphismsBetween(std::uint64_t a, std::uint64_t b) const {
    if (symbolic_) {
        if (a == b) return {a};
        return {};
    }
    std::vector<std::uint64_t> out;
    for (int m : fg_->gpd.morphismsBetween(static_cast<int>(a), static_cast<int>(b)))
        out.push_back(static_cast<std::uint64_t>(m));
    return out;
}

std::vector<std::uint64_t> FunctorSpace::isoClassRepresentatives() const {
    if (symbolic_) {
        std::vector<std::uint64_t> out(count_);
        for (std::uint64_t i = 0; i < count_; ++i) out[i] = i;
        return out;
    }
    std::vector<std::uint64_t> out;
    auto labels = fg_->gpd.componentLabels();
    for (int i = 0; i < fg_->gpd.objectCount; ++i)
        if (labels[i] == i) out.push_back(static_cast<std::uint64_t>(i));
    return out;
}

const FunctorGroupoid& FunctorSpace::materialized() const {
    if (symbolic_) throw InvalidInput("FunctorSpace: symbolic space has no materialized groupoid");
    return *fg_;
}

std::shared_ptr<const FinGroupoid> FunctorSpace::groupoidPtr() const {
    if (symbolic_) throw InvalidInput("FunctorSpace: symbolic space has no materialized groupoid");
    return {fg_, &fg_->gpd};
}

}  // namespace ncat
