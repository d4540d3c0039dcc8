#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncat/concat.hpp"
#include "ncat/finset.hpp"

namespace ncat {

/// Term of the ordinal-map calculus. A term of type (m, n) denotes an
/// order-preserving map Fin(m) -> Fin(n); the constructors are
///   Z            : (0, 0)
///   Sl : (m, n)  -> (m+1, n)   for n >= 1, prepends the value 0
///   Sr : (m, n)  -> (m, n+1)   shifts every value up by one
/// Steps are stored innermost-first, so the outermost constructor is at the
/// back. Every order-preserving map has exactly one term.
struct OrdTerm {
    int dom = 0;
    int cod = 0;
    std::vector<std::uint8_t> steps;  // 0 = Sl, 1 = Sr
};

bool operator==(const OrdTerm& a, const OrdTerm& b);

OrdTerm ord_z();
OrdTerm ord_sl(const OrdTerm& t);
OrdTerm ord_sr(const OrdTerm& t);

FinFun ord_realize(const OrdTerm& t);

/// Unique term denoting an order-preserving map; InvalidInput otherwise.
OrdTerm ord_canonicalize(const FinFun& f);

OrdTerm ord_identity(int n);

/// Structural composition g after f, defined by recursion on the terms
/// (not by canonicalizing the composite table).
OrdTerm ord_compose(const OrdTerm& g, const OrdTerm& f);

/// Number of terms of type (m, n), saturating.
std::uint64_t count_ord(int m, int n);

/// All terms of type (m, n) in canonical order (Sl-block before Sr-block,
/// recursively). Guarded by the global cap.
std::vector<OrdTerm> enumerate_ord(int m, int n);

std::string ord_to_string(const OrdTerm& t);
OrdTerm ord_parse(const std::string& text);

/// The category of ordinals 0..n (object k carrying k+1 points), with hom
/// elements the ordinal terms and realisation into maps of discrete groupoids.
ConcreteCategory delta_category(int n);

}  // namespace ncat
