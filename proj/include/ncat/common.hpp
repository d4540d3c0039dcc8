#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncat {

inline constexpr const char* kToolName = "ncatkit";
inline constexpr const char* kToolVersion = "0.1.0";

/// Base class for every error the library reports deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 2).
struct InvalidInput : Error {
    using Error::Error;
};

/// A search or enumeration would exceed the configured candidate cap.
struct EnumerationOverflow : Error {
    using Error::Error;
};

/// A structure fails its own axioms (bad witness, broken table, ...).
struct ValidationError : Error {
    using Error::Error;
};

namespace detail {
inline std::atomic<std::uint64_t>& cap_storage() {
    static std::atomic<std::uint64_t> cap{1000000};
    return cap;
}
}  // namespace detail

inline std::uint64_t enumeration_cap() { return detail::cap_storage().load(); }
inline void set_enumeration_cap(std::uint64_t cap) { detail::cap_storage().store(cap); }

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) return UINT64_MAX;
    return a + b;
}

/// Saturating multiply used when sizing candidate spaces against the cap.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

inline void require_within_cap(std::uint64_t candidates, const std::string& what) {
    if (candidates > enumeration_cap())
        throw EnumerationOverflow(what + ": candidate count " +
                                  (candidates == UINT64_MAX ? std::string("(overflow)")
                                                            : std::to_string(candidates)) +
                                  " exceeds cap " + std::to_string(enumeration_cap()));
}

}  // namespace ncat
