#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace syzstab {

using Int = std::int64_t;

/// Bad caller input: rank mismatches, out-of-range parameters, parse failures.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A numeric identity that must hold was violated (e.g. adjunction parity).
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Three-valued answer for positivity tests that may be undecidable.
enum class Tri { yes, no, unknown };

inline const char* to_string(Tri t) {
    switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "unknown";
    }
}

} // namespace syzstab
