#pragma once

#include <vector>

#include "ncat/concat.hpp"

namespace ncat {

/// Finite quiver. Only acyclic quivers are accepted (cycles would give
/// infinitely many paths).
struct Quiver {
    int vertexCount = 0;
    std::vector<std::pair<int, int>> arrows;  // (src, tgt)

    void validate() const;
};

/// Directed path, arrows listed source-to-target.
struct PathTerm {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;
};

bool operator==(const PathTerm& a, const PathTerm& b);

PathTerm path_identity(int v);

/// q after p: p runs first.
PathTerm path_compose(const PathTerm& q, const PathTerm& p);

/// All paths from -> to, ordered lexicographically by arrow list (so the
/// empty path, when present, comes first). Guarded by the global cap.
std::vector<PathTerm> quiver_paths(const Quiver& q, int from, int to);

/// Free category on an acyclic quiver. An object's groupoid is the discrete
/// groupoid of paths into it from anywhere; a hom element acts on it by
/// postcomposition.
ConcreteCategory free_category(const Quiver& q);

}  // namespace ncat
