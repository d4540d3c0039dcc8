#pragma once

#include <string>

#include "json.hpp"
#include "ncat/concat.hpp"
#include "ncat/fingpd.hpp"
#include "ncat/freecat.hpp"

namespace ncat::schema {

using json = nlohmann::ordered_json;

// Groupoid files: {objects, morphisms: [{id, src, tgt}], identities, compose: [[g, f, h], ...]}.
json groupoid_to_json(const FinGroupoid& g);
FinGroupoid groupoid_from_json(const json& j);

// Category files: {objects, objPlus, hom, homPlus, witnesses}. homPlus indexes
// the canonical functor enumeration of the endpoint groupoids, so spaces are
// rebuilt on load rather than stored.
json category_to_json(const ConcreteCategory& c);
ConcreteCategory category_from_json(const json& j);

// Quiver files: {vertices, arrows: [{src, tgt}]}.
json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

// Functor files: {dom, cod, objMap, morMap} with inline groupoids.
json gfunctor_to_json(const GFunctor& f);
GFunctor gfunctor_from_json(const json& j);

/// Parse text as JSON; parse errors surface as InvalidInput with position.
json parse_text(const std::string& text);

/// Read and parse a file; missing file or parse error -> InvalidInput.
json load_file(const std::string& path);

void save_file(const std::string& path, const json& j);

/// FNV-1a 64 over the raw bytes, rendered "fnv1a64:<16 hex digits>".
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::string& path);

}  // namespace ncat::schema
