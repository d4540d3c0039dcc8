#pragma once

#include <cstdint>
#include <vector>

#include "ncat/fingpd.hpp"
#include "ncat/finset.hpp"

namespace ncat::oracles {

/// Number of weakly monotone maps Fin(m) -> Fin(n), by direct enumeration of
/// all n^m tables. Deliberately ignorant of the term calculus.
std::uint64_t monotone_map_count(int m, int n);

/// All weakly monotone tables Fin(m) -> Fin(n) in lexicographic order.
std::vector<std::vector<int>> monotone_maps(int m, int n);

/// Number of directed paths from `from` to `to` in an acyclic arrow list,
/// counted by dynamic programming over arrows.
std::uint64_t dag_path_count(int vertices, const std::vector<std::pair<int, int>>& arrows, int from,
                             int to);

/// Number of functors G -> H by plodding enumeration: every (objMap, morMap)
/// candidate is generated and checked against the functor axioms in full.
std::uint64_t functor_count(const FinGroupoid& g, const FinGroupoid& h);

/// Number of natural isomorphisms between two functors by checking every
/// component tuple against naturality in full.
std::uint64_t natiso_count(const GFunctor& f, const GFunctor& g);

/// Number of homotopy-fiber points of F at h: pairs (object, morphism to h).
std::uint64_t fiber_point_count(const GFunctor& f, int h);

}  // namespace ncat::oracles
