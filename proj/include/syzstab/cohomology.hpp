#pragma once

#include <optional>
#include <string>

#include "syzstab/core.hpp"
#include "syzstab/lattice.hpp"
#include "syzstab/surfaces.hpp"

namespace syzstab {

/// Euler characteristic chi(D) = chi(O) + D.(D-K)/2 on a lattice surface.
/// The parity D^2 + D.K == 0 (mod 2) is forced on every built-in lattice;
/// a violation means corrupted data.
inline Int chi(const SurfaceModel& S, const DivisorClass& D) {
    const Int dd = S.pair(D, D);
    const Int dk = S.pair(D, S.K());
    if ((dd + dk) % 2 != 0)
        throw invariant_error("chi: D^2 + D.K is odd (D = " + D.str() + ")");
    return S.chiO() + (dd - dk) / 2;
}

/// chi(L) from numeric data alone. Parity failures here come from user
/// input, so they are input errors.
inline Int chi(const NumericSurfaceData& d) {
    if ((d.L2 + d.LK) % 2 != 0)
        throw input_error("chi: L2 + LK must be even, got L2 = " + std::to_string(d.L2) +
                          ", LK = " + std::to_string(d.LK));
    return d.chiO + (d.L2 - d.LK) / 2;
}

/// Exact section count on the toric families, valid for every class.
/// p2:           h0(dh) = (d+1)(d+2)/2 for d >= 0, else 0.
/// hirzebruch n: h0(aC+bF) = sum_{k=0..a} max(0, b - kn + 1) for a >= 0,
///               else 0 (pushforward to P^1).
inline Int h0_exact(const SurfaceModel& S, const DivisorClass& D) {
    switch (S.family()) {
    case Family::p2: {
        if (D.rank() != 1) throw input_error("h0_exact: class rank must be 1 on p2");
        const Int d = D[0];
        return d >= 0 ? (d + 1) * (d + 2) / 2 : 0;
    }
    case Family::hirzebruch: {
        if (D.rank() != 2) throw input_error("h0_exact: class rank must be 2 on hirzebruch");
        const Int a = D[0], b = D[1], n = S.param();
        if (a < 0) return 0;
        Int total = 0;
        for (Int k = 0; k <= a; ++k) {
            const Int summand = b - k * n + 1;
            if (summand <= 0) break; // terms are non-increasing in k
            total += summand;
        }
        return total;
    }
    default:
        throw input_error("h0_exact: only p2 and hirzebruch have exact section counts; "
                          "use h0_certified");
    }
}

/// h0 with a certified justification, or nothing.
///   p2/hirzebruch: exact count.
///   delpezzo, D nef: h0 = chi(D)  (h1 = h2 = 0 for nef classes there).
///   otherwise: unknown.
inline std::optional<Int> h0_certified(const SurfaceModel& S, const DivisorClass& D) {
    switch (S.family()) {
    case Family::p2:
    case Family::hirzebruch:
        return h0_exact(S, D);
    case Family::del_pezzo:
        if (is_nef(S, D)) return chi(S, D);
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

/// Is h1(D) = 0? Rule priority: exact toric formula (decides both ways),
/// then nef-on-del-Pezzo, then the Kodaira rule D - K ample; otherwise
/// unknown.
inline Tri h1_is_zero(const SurfaceModel& S, const DivisorClass& D) {
    switch (S.family()) {
    case Family::p2:
    case Family::hirzebruch: {
        // h1 = h0 - chi + h2 with h2 = h0(K - D) by Serre duality.
        const Int h1 = h0_exact(S, D) + h0_exact(S, S.K() - D) - chi(S, D);
        return h1 == 0 ? Tri::yes : Tri::no;
    }
    case Family::del_pezzo:
        if (is_nef(S, D)) return Tri::yes;
        if (is_ample(S, D - S.K())) return Tri::yes;
        return Tri::unknown;
    default:
        return Tri::unknown;
    }
}

/// h0 of a line bundle of the given degree on a curve of the given genus,
/// where Riemann-Roch alone decides it: deg < 0 gives 0, and the
/// nonspecial range deg >= 2g - 1 gives deg - g + 1. In between the value
/// depends on the bundle, not just the numbers.
inline std::optional<Int> h0_curve_nonspecial(Int genus, Int degree) {
    if (genus < 0) throw input_error("h0_curve_nonspecial: negative genus");
    if (degree < 0) return 0;
    if (degree >= 2 * genus - 1) return degree - genus + 1;
    return std::nullopt;
}

/// Bundle of everything this module can say about one class.
struct CohomologyResult {
    std::optional<Int> h0;
    Tri h1_zero = Tri::unknown;
    Tri h2_zero = Tri::unknown;
    Int chi = 0;
    std::string method; // "exact-formula" | "chi-plus-vanishing" | "unknown"
};

inline CohomologyResult analyze(const SurfaceModel& S, const DivisorClass& D) {
    CohomologyResult r;
    r.chi = chi(S, D);
    switch (S.family()) {
    case Family::p2:
    case Family::hirzebruch: {
        r.h0 = h0_exact(S, D);
        const Int h2 = h0_exact(S, S.K() - D);
        r.h2_zero = h2 == 0 ? Tri::yes : Tri::no;
        const Int h1 = *r.h0 + h2 - r.chi;
        r.h1_zero = h1 == 0 ? Tri::yes : Tri::no;
        r.method = "exact-formula";
        return r;
    }
    case Family::del_pezzo:
        if (is_nef(S, D)) {
            r.h0 = r.chi;
            r.h1_zero = Tri::yes;
            r.h2_zero = Tri::yes;
            r.method = "chi-plus-vanishing";
            return r;
        }
        if (is_ample(S, D - S.K())) {
            r.h1_zero = Tri::yes;
            r.h2_zero = Tri::yes;
            r.h0 = r.chi;
            r.method = "chi-plus-vanishing";
            return r;
        }
        r.method = "unknown";
        return r;
    default:
        r.method = "unknown";
        return r;
    }
}

} // namespace syzstab
