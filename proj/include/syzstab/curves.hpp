#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "syzstab/core.hpp"
#include "syzstab/lattice.hpp"
#include "syzstab/surfaces.hpp"

namespace syzstab {

/// What is known about the restriction of a line bundle to an irreducible
/// non-singular member C of a linear system: the genus of C, the degree
/// of the restriction, and optional curve-level facts supplied by the
/// caller. Clifford bounds and the canonical flag must be internally
/// consistent; validate() reports the first violation.
struct CurveRestriction {
    Int genus = 0;
    Int degree = 0;
    std::optional<Int> cliff_lower_bound;
    bool bn_general = false;
    bool nonhyperelliptic = false;
    bool is_canonical = false;

    friend bool operator==(const CurveRestriction&, const CurveRestriction&) = default;
};

/// First inconsistency in the supplied data, if any.
///   - genus must be >= 0, degree >= 1
///   - a Clifford bound needs genus >= 2 and cannot exceed floor((g-1)/2)
///   - the canonical bundle has degree exactly 2g - 2
inline std::optional<std::string> validate(const CurveRestriction& c) {
    if (c.genus < 0) return "genus must be >= 0, got " + std::to_string(c.genus);
    if (c.degree <= 0) return "degree must be >= 1, got " + std::to_string(c.degree);
    if (c.cliff_lower_bound) {
        const Int cl = *c.cliff_lower_bound;
        if (cl < 0) return "Clifford bound must be >= 0, got " + std::to_string(cl);
        if (c.genus < 2)
            return "a Clifford bound needs genus >= 2, got genus " + std::to_string(c.genus);
        const Int cap = (c.genus - 1) / 2;
        if (cl > cap)
            return "Clifford bound " + std::to_string(cl) + " exceeds floor((g-1)/2) = " +
                   std::to_string(cap) + " for genus " + std::to_string(c.genus);
    }
    if (c.is_canonical && c.degree != 2 * c.genus - 2)
        return "canonical restriction must have degree 2g-2 = " +
               std::to_string(2 * c.genus - 2) + ", got " + std::to_string(c.degree);
    return std::nullopt;
}

enum class Stability { stable, semistable, unknown };

inline const char* to_string(Stability s) {
    switch (s) {
    case Stability::stable: return "Stable";
    case Stability::semistable: return "Semistable";
    default: return "Unknown";
    }
}

struct CurveVerdict {
    Stability status = Stability::unknown;
    std::string rule;
    std::string reason;
};

/// g = 1 + (C^2 + C.K)/2, possibly negative. C^2 + C.K is even on any
/// smooth surface; odd input is malformed data.
inline Int adjunction_genus(Int self_int, Int k_pair) {
    if ((self_int + k_pair) % 2 != 0)
        throw input_error("adjunction_genus: C^2 + C.K must be even, got C^2 = " +
                          std::to_string(self_int) + ", C.K = " + std::to_string(k_pair));
    return 1 + (self_int + k_pair) / 2;
}

/// Genus of an irreducible non-singular member of |C| by adjunction.
/// A negative value certifies that no such member exists; callers turn
/// that into a failed hypothesis.
inline Int genus_of_member(const SurfaceModel& S, const DivisorClass& C) {
    const Int g = adjunction_genus(S.pair(C, C), S.pair(C, S.K()));
    if (g < 0)
        throw input_error("genus_of_member: adjunction gives genus " + std::to_string(g) +
                          " < 0; |" + C.str() + "| has no irreducible non-singular member");
    return g;
}

/// Genus from numeric data (H = L there, so the member lies in |L|).
inline Int genus_of_member(const NumericSurfaceData& d) {
    const Int g = adjunction_genus(d.L2, d.LK);
    if (g < 0)
        throw input_error("genus_of_member: adjunction gives genus " + std::to_string(g) +
                          " < 0 on the supplied numeric data");
    return g;
}

/// deg L|_C = L.C.
inline Int restricted_degree(const SurfaceModel& S, const DivisorClass& L,
                             const DivisorClass& C) {
    return S.pair(L, C);
}

/// Decide (semi)stability of the restricted syzygy bundle M_{L|C} from
/// (genus, degree, flags). First matching rule wins:
///   1. g = 0: direct sum of degree -1 line bundles; Stable at rank one
///      (degree 1), Semistable otherwise.
///   2. g = 1, degree >= 2: Stable.
///   3. degree > 2g: Stable.
///   4. degree = 2g: Semistable.
///   5. canonical restriction: Stable if non-hyperelliptic, else Semistable.
///   6. degree >= 2g - cliff: Semistable.
///   7. Brill-Noether general curve: Semistable.
///   8. otherwise Unknown.
inline CurveVerdict curve_syzygy_semistability(const CurveRestriction& c) {
    if (auto bad = validate(c)) throw input_error("curve_syzygy_semistability: " + *bad);

    const Int g = c.genus, d = c.degree;
    auto verdict = [](Stability s, std::string rule, std::string reason) {
        return CurveVerdict{s, std::move(rule), std::move(reason)};
    };
    std::ostringstream why;

    if (g == 0) {
        if (d == 1) {
            why << "g = 0, deg = 1: M is a single line bundle of degree -1";
            return verdict(Stability::stable, "rank-one", why.str());
        }
        why << "g = 0: M is a direct sum of " << d << " line bundles of degree -1";
        return verdict(Stability::semistable, "genus-zero", why.str());
    }
    if (g == 1 && d >= 2) {
        why << "g = 1, deg = " << d << " >= 2: stable on an elliptic curve";
        return verdict(Stability::stable, "elliptic", why.str());
    }
    if (d > 2 * g) {
        why << "deg = " << d << " > 2g = " << 2 * g;
        return verdict(Stability::stable, "degree-above-2g", why.str());
    }
    if (d == 2 * g) {
        why << "deg = " << d << " = 2g";
        return verdict(Stability::semistable, "degree-equal-2g", why.str());
    }
    if (c.is_canonical) {
        why << "restriction is the canonical bundle (deg = 2g-2 = " << d << ")";
        if (c.nonhyperelliptic) {
            why << ", curve non-hyperelliptic";
            return verdict(Stability::stable, "canonical-nonhyperelliptic", why.str());
        }
        return verdict(Stability::semistable, "canonical", why.str());
    }
    if (c.cliff_lower_bound && d >= 2 * g - *c.cliff_lower_bound) {
        why << "deg = " << d << " >= 2g - cliff = " << 2 * g - *c.cliff_lower_bound;
        return verdict(Stability::semistable, "clifford-bound", why.str());
    }
    if (c.bn_general) {
        why << "curve asserted Brill-Noether general";
        return verdict(Stability::semistable, "brill-noether-general", why.str());
    }
    why << "no rule applies (g = " << g << ", deg = " << d << ")";
    return verdict(Stability::unknown, "none", why.str());
}

} // namespace syzstab
