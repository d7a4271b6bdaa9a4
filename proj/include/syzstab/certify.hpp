#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syzstab/cohomology.hpp"
#include "syzstab/core.hpp"
#include "syzstab/curves.hpp"
#include "syzstab/lattice.hpp"
#include "syzstab/rational.hpp"
#include "syzstab/surfaces.hpp"

namespace syzstab {

// ---------------------------------------------------------------------------
// Certificates

enum class HypStatus { verified, asserted, failed, unknown };

inline const char* to_string(HypStatus s) {
    switch (s) {
    case HypStatus::verified: return "Verified";
    case HypStatus::asserted: return "Asserted";
    case HypStatus::failed: return "Failed";
    default: return "Unknown";
    }
}

inline std::optional<HypStatus> parse_hyp_status(std::string_view s) {
    if (s == "Verified") return HypStatus::verified;
    if (s == "Asserted") return HypStatus::asserted;
    if (s == "Failed") return HypStatus::failed;
    if (s == "Unknown") return HypStatus::unknown;
    return std::nullopt;
}

struct Hypothesis {
    std::string id;
    std::string statement;
    HypStatus status = HypStatus::unknown;
    std::string evidence;

    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

enum class Verdict { h_stable, inconclusive };

inline const char* to_string(Verdict v) {
    return v == Verdict::h_stable ? "HStable" : "Inconclusive";
}

enum class Criterion { thm32, cor33, prop34, cor35, cor36, cor37, thm37, thm21 };

inline const char* to_string(Criterion c) {
    switch (c) {
    case Criterion::thm32: return "thm32";
    case Criterion::cor33: return "cor33";
    case Criterion::prop34: return "prop34";
    case Criterion::cor35: return "cor35";
    case Criterion::cor36: return "cor36";
    case Criterion::cor37: return "cor37";
    case Criterion::thm37: return "thm37";
    default: return "thm21";
    }
}

inline std::optional<Criterion> parse_criterion(std::string_view s) {
    if (s == "thm32") return Criterion::thm32;
    if (s == "cor33") return Criterion::cor33;
    if (s == "prop34") return Criterion::prop34;
    if (s == "cor35") return Criterion::cor35;
    if (s == "cor36") return Criterion::cor36;
    if (s == "cor37") return Criterion::cor37;
    if (s == "thm37") return Criterion::thm37;
    if (s == "thm21") return Criterion::thm21;
    return std::nullopt;
}

/// Outcome of one criterion run. The verdict is a pure function of the
/// hypothesis statuses: HStable iff every hypothesis is Verified or
/// Asserted. H is stored as resolved coordinates whenever the surface
/// has a lattice; H_tag records how the caller named it ("L", "antiK",
/// or "" for explicit coordinates).
struct Certificate {
    Criterion criterion = Criterion::thm32;
    SurfaceModel surface = SurfaceModel::p2();
    std::optional<DivisorClass> L;
    std::optional<DivisorClass> H;
    std::string H_tag;
    std::vector<Hypothesis> hypotheses;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Int> n_value;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Verdict conclude(const std::vector<Hypothesis>& hs) {
    for (const auto& h : hs)
        if (h.status == HypStatus::failed || h.status == HypStatus::unknown)
            return Verdict::inconclusive;
    return Verdict::h_stable;
}

/// Lattice arithmetic outranks user assertions: a computed "no" stays
/// Failed even when asserted; an assertion only upgrades "unknown".
inline HypStatus merge(Tri computed, bool asserted) {
    switch (computed) {
    case Tri::yes: return HypStatus::verified;
    case Tri::no: return HypStatus::failed;
    default: return asserted ? HypStatus::asserted : HypStatus::unknown;
    }
}

/// Curve assertions consumed by the checks. bn_general and
/// nonhyperelliptic refer to the member curve; the rest to L (or, for
/// irreducible_member, to the system the member is drawn from).
struct Assertions {
    bool ample = false;
    bool generated = false;
    bool irreducible_member = false;
    bool bn_general = false;
    bool nonhyperelliptic = false;
};

struct CheckOptions {
    Assertions asserted;
    std::optional<Int> cliff_bound;
};

// ---------------------------------------------------------------------------
// Slope arithmetic

/// Slope data of the syzygy bundle of L with respect to H.
/// rank = h0(L) - 1, c1 = -L, slope = -L.H / rank exactly.
struct SyzygyStats {
    Int rank = 0;
    DivisorClass c1{std::vector<Int>{}};
    Int slope_numerator = 0;
    Rational slope;
};

inline std::optional<SyzygyStats> syzygy_slope(const SurfaceModel& S, const DivisorClass& L,
                                               const DivisorClass& H) {
    const std::optional<Int> h0 = h0_certified(S, L);
    if (!h0 || *h0 < 2) return std::nullopt;
    const Int rank = *h0 - 1;
    const Int num = -S.pair(L, H);
    return SyzygyStats{rank, -L, num, Rational(num, rank)};
}

// ---------------------------------------------------------------------------
// Evidence builders

namespace detail {

struct RayMin {
    Int value = 0;
    DivisorClass ray{std::vector<Int>{}};
};

inline RayMin min_ray_pairing(const SurfaceModel& S, const DivisorClass& L) {
    RayMin best;
    bool first = true;
    for (const auto& R : S.extremal_rays()) {
        const Int v = S.pair(L, R);
        if (first || v < best.value) {
            best = {v, R};
            first = false;
        }
    }
    return best;
}

inline std::string ample_evidence(const SurfaceModel& S, const DivisorClass& L) {
    const RayMin m = min_ray_pairing(S, L);
    std::ostringstream e;
    e << "min L.R over " << S.extremal_rays().size() << " extremal ray(s) is " << m.value
      << " at R = (" << m.ray.str() << ")";
    return e.str();
}

inline std::string generated_evidence(const SurfaceModel& S, const DivisorClass& L, Tri gg) {
    std::ostringstream e;
    if (gg == Tri::no) {
        const RayMin m = min_ray_pairing(S, L);
        e << "not nef: L.R = " << m.value << " at R = (" << m.ray.str() << ")";
        return e.str();
    }
    switch (S.family()) {
    case Family::p2:
    case Family::hirzebruch:
        e << "nef, and nef classes on this surface are globally generated";
        break;
    case Family::del_pezzo: {
        const Int lk = -S.pair(L, S.K());
        if (gg == Tri::unknown)
            e << "nef with L.(-K) = 1 on delpezzo:8: global generation undecided";
        else if (S.param() <= 7)
            e << "nef on delpezzo:" << S.param() << " (degree >= 2): globally generated";
        else
            e << "nef on delpezzo:8 with L.(-K) = " << lk << " != 1: globally generated";
        break;
    }
    default:
        e << "no lattice data";
    }
    return e.str();
}

struct MemberOutcome {
    HypStatus status = HypStatus::unknown;
    std::string evidence;
    Int genus = 0;
};

/// Hypothesis "the system |C| has an irreducible non-singular member".
/// Adjunction genus < 0 disproves it outright (and outranks assertions).
inline MemberOutcome member_hypothesis(const SurfaceModel& S, const DivisorClass& C,
                                       bool asserted) {
    if (C.is_zero())
        return {HypStatus::failed, "the zero class has no irreducible member", 0};
    const Int g = adjunction_genus(S.pair(C, C), S.pair(C, S.K()));
    std::ostringstream e;
    if (g < 0) {
        e << "adjunction genus 1 + (C^2 + C.K)/2 = " << g << " < 0: no such member";
        return {HypStatus::failed, e.str(), g};
    }
    switch (has_irreducible_member(S, C, asserted)) {
    case MemberStatus::verified:
        e << "globally generated with "
          << (is_ample(S, C) ? std::string("C ample")
                             : "C^2 = " + std::to_string(S.pair(C, C)) + " > 0")
          << ": a general member is irreducible and non-singular; g = " << g;
        return {HypStatus::verified, e.str(), g};
    case MemberStatus::asserted:
        e << "asserted; adjunction genus g = " << g;
        return {HypStatus::asserted, e.str(), g};
    default:
        e << "not verifiable from lattice data (C^2 = " << S.pair(C, C) << ", g = " << g << ")";
        return {HypStatus::unknown, e.str(), g};
    }
}

inline MemberOutcome member_hypothesis(const NumericSurfaceData& d, bool asserted) {
    const Int g = adjunction_genus(d.L2, d.LK);
    std::ostringstream e;
    if (g < 0) {
        e << "adjunction genus 1 + (L^2 + L.K)/2 = " << g << " < 0: no such member";
        return {HypStatus::failed, e.str(), g};
    }
    if (asserted) {
        e << "asserted; adjunction genus g = " << g;
        return {HypStatus::asserted, e.str(), g};
    }
    e << "not verifiable from numeric data (g = " << g << ")";
    return {HypStatus::unknown, e.str(), g};
}

inline std::string h1_evidence(const SurfaceModel& S, const DivisorClass& D, Tri t) {
    std::ostringstream e;
    switch (S.family()) {
    case Family::p2:
    case Family::hirzebruch: {
        const Int h1 = h0_exact(S, D) + h0_exact(S, S.K() - D) - chi(S, D);
        e << "h^1(" << D.str() << ") = h^0 + h^0(K - D) - chi = " << h1;
        break;
    }
    case Family::del_pezzo:
        if (t == Tri::yes)
            e << (is_nef(S, D) ? "D nef on a del Pezzo surface: h^1(D) = 0"
                               : "D - K ample: h^1(D) = 0 by Kodaira vanishing");
        else
            e << "neither D nef nor D - K ample: h^1 undecided";
        break;
    default:
        e << "no exact cohomology for a numeric surface";
    }
    return e.str();
}

/// Statement "M_{L|C} is semistable" decided through the curve rules.
/// A user Clifford bound is consulted only when the unconditional rules
/// do not decide; an inconsistent bound fails the hypothesis only when
/// it would have been needed.
struct RestrictionOutcome {
    HypStatus status = HypStatus::unknown;
    std::string evidence;
};

inline HypStatus rule_status(const CurveVerdict& v) {
    if (v.status == Stability::unknown) return HypStatus::unknown;
    if (v.rule == "clifford-bound" || v.rule == "brill-noether-general" ||
        v.rule == "canonical-nonhyperelliptic")
        return HypStatus::asserted;
    return HypStatus::verified;
}

inline RestrictionOutcome restriction_semistable(Int g, Int d, const CheckOptions& opt,
                                                 bool canonical) {
    std::ostringstream e;
    if (g < 0) {
        e << "genus " << g << " < 0: no member curve";
        return {HypStatus::failed, e.str()};
    }
    if (d <= 0) {
        e << "deg L|_C = " << d << " <= 0: restriction carries no syzygy bundle";
        return {HypStatus::unknown, e.str()};
    }
    CurveRestriction c{g, d, std::nullopt, opt.asserted.bn_general,
                       opt.asserted.nonhyperelliptic, canonical};
    if (opt.cliff_bound) {
        CurveRestriction with = c;
        with.cliff_lower_bound = opt.cliff_bound;
        if (auto bad = validate(with)) {
            const CurveVerdict v0 = curve_syzygy_semistability(c);
            if (v0.status != Stability::unknown)
                return {rule_status(v0), v0.reason + " [" + v0.rule + "]"};
            return {HypStatus::failed, "Clifford assertion inconsistent: " + *bad};
        }
        c = with;
    }
    const CurveVerdict v = curve_syzygy_semistability(c);
    return {rule_status(v), v.reason + " [" + v.rule + "]"};
}

inline Hypothesis unknown_assertable(std::string id, std::string statement, bool asserted) {
    Hypothesis h{std::move(id), std::move(statement), HypStatus::unknown,
                 "not computable from numeric data"};
    if (asserted) {
        h.status = HypStatus::asserted;
        h.evidence = "asserted";
    }
    return h;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Criterion checks

/// Restriction-to-a-member criterion with an arbitrary polarization H:
/// (1) h^1(L - H) = 0, (2) h^0(H) >= h^0(L|_C), (3) M_{L|C} semistable
/// for C an irreducible non-singular member of |H|. All three verified
/// (or asserted) certify that M_L is H-stable.
inline Certificate check_thm32(const SurfaceModel& S, const DivisorClass& L,
                               const DivisorClass& H, const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::thm32;
    cert.surface = S;
    cert.L = L;
    cert.H = H;
    auto& hs = cert.hypotheses;

    const bool ample = is_ample(S, L);
    hs.push_back({"L-ample", "L is ample", merge(ample ? Tri::yes : Tri::no, opt.asserted.ample),
                  detail::ample_evidence(S, L)});
    const Tri gg = is_globally_generated(S, L);
    hs.push_back({"L-generated", "L is globally generated", merge(gg, opt.asserted.generated),
                  detail::generated_evidence(S, L, gg)});
    const auto member = detail::member_hypothesis(S, H, opt.asserted.irreducible_member);
    hs.push_back({"H-irreducible-member", "|H| contains an irreducible non-singular member",
                  member.status, member.evidence});

    const bool h_is_l = L == H;
    if (h_is_l) {
        hs.push_back({"h1-vanishing", "h^1(L - H) = 0", HypStatus::verified,
                      "L - H = 0 and h^1(O) = q = 0"});
        hs.push_back({"sections-dominate", "h^0(H) >= h^0(L|_C)", HypStatus::verified,
                      "h^0(L|_C) = h^0(L) - 1 via the restriction sequence with h^1(O) = 0"});
    } else {
        const DivisorClass diff = L - H;
        const Tri h1z = h1_is_zero(S, diff);
        hs.push_back({"h1-vanishing", "h^1(L - H) = 0", merge(h1z, false),
                      detail::h1_evidence(S, diff, h1z)});

        Hypothesis sections{"sections-dominate", "h^0(H) >= h^0(L|_C)", HypStatus::unknown, ""};
        const std::optional<Int> h0H = h0_certified(S, H);
        const Int d = S.pair(L, H);
        std::optional<Int> h0LC;
        if (member.genus >= 0) h0LC = h0_curve_nonspecial(member.genus, d);
        if (h0H && h0LC) {
            sections.status = *h0H >= *h0LC ? HypStatus::verified : HypStatus::failed;
            sections.evidence = "h^0(H) = " + std::to_string(*h0H) + ", h^0(L|_C) = " +
                                std::to_string(*h0LC) + " (deg = " + std::to_string(d) +
                                ", g = " + std::to_string(member.genus) + ")";
        } else {
            sections.evidence = !h0H ? "h^0(H) not certified on this surface"
                                     : "deg L|_C = " + std::to_string(d) +
                                           " < 2g - 1: curve h^0 not determined by degree";
        }
        hs.push_back(std::move(sections));
    }

    const Int d = S.pair(L, H);
    const bool canonical = member.genus >= 0 && (L - H) == S.K();
    const auto restr = detail::restriction_semistable(member.genus, d, opt, canonical);
    hs.push_back({"restriction-semistable", "M_{L|C} is semistable", restr.status,
                  "deg L|_C = L.H = " + std::to_string(d) + "; " + restr.evidence});

    cert.verdict = conclude(hs);
    return cert;
}

/// Numeric-data form of the same check; H = L is forced, so (1) and (2)
/// reduce to regularity of the surface.
inline Certificate check_thm32(const NumericSurfaceData& data, const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::thm32;
    cert.surface = SurfaceModel::numeric(data);
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    hs.push_back(detail::unknown_assertable("L-ample", "L is ample", opt.asserted.ample));
    hs.push_back(detail::unknown_assertable("L-generated", "L is globally generated",
                                            opt.asserted.generated));
    const auto member = detail::member_hypothesis(data, opt.asserted.irreducible_member);
    hs.push_back({"H-irreducible-member", "|H| contains an irreducible non-singular member",
                  member.status, member.evidence});

    const std::string qev = "h^1(O) = q = " + std::to_string(data.q);
    hs.push_back({"h1-vanishing", "h^1(L - H) = 0",
                  data.q == 0 ? HypStatus::verified : HypStatus::failed,
                  "L - H = 0 and " + qev});
    if (data.q == 0)
        hs.push_back({"sections-dominate", "h^0(H) >= h^0(L|_C)", HypStatus::verified,
                      "h^0(L|_C) = h^0(L) - 1 via the restriction sequence with h^1(O) = 0"});
    else
        hs.push_back({"sections-dominate", "h^0(H) >= h^0(L|_C)", HypStatus::unknown,
                      qev + " != 0: restriction argument unavailable"});

    const auto restr = detail::restriction_semistable(member.genus, data.L2, opt, false);
    hs.push_back({"restriction-semistable", "M_{L|C} is semistable", restr.status,
                  "deg L|_C = L^2 = " + std::to_string(data.L2) + "; " + restr.evidence});

    cert.verdict = conclude(hs);
    return cert;
}

namespace detail {

inline Hypothesis genus_or_bn(Int g, bool bn) {
    std::ostringstream e;
    if (g <= 1) {
        e << "g(C) = " << g << " <= 1";
        return {"genus-or-bn", "g(C) <= 1 or C is Brill-Noether general", HypStatus::verified,
                e.str()};
    }
    if (bn) {
        e << "g(C) = " << g << " > 1; curve asserted Brill-Noether general";
        return {"genus-or-bn", "g(C) <= 1 or C is Brill-Noether general", HypStatus::asserted,
                e.str()};
    }
    e << "g(C) = " << g << " > 1 and Brill-Noether generality not asserted";
    return {"genus-or-bn", "g(C) <= 1 or C is Brill-Noether general", HypStatus::unknown,
            e.str()};
}

} // namespace detail

/// L-stability from a low-genus or Brill-Noether general member of |L|
/// on a regular surface.
inline Certificate check_cor33(const SurfaceModel& S, const DivisorClass& L,
                               const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::cor33;
    cert.surface = S;
    cert.L = L;
    cert.H = L;
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    hs.push_back({"surface-regular", "q = 0", HypStatus::verified, "q = 0 for this family"});
    const bool ample = is_ample(S, L);
    hs.push_back({"L-ample", "L is ample", merge(ample ? Tri::yes : Tri::no, opt.asserted.ample),
                  detail::ample_evidence(S, L)});
    const Tri gg = is_globally_generated(S, L);
    hs.push_back({"L-generated", "L is globally generated", merge(gg, opt.asserted.generated),
                  detail::generated_evidence(S, L, gg)});
    const auto member = detail::member_hypothesis(S, L, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});
    hs.push_back(detail::genus_or_bn(member.genus, opt.asserted.bn_general));

    cert.verdict = conclude(hs);
    return cert;
}

inline Certificate check_cor33(const NumericSurfaceData& data, const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::cor33;
    cert.surface = SurfaceModel::numeric(data);
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    hs.push_back({"surface-regular", "q = 0",
                  data.q == 0 ? HypStatus::verified : HypStatus::failed,
                  "q = " + std::to_string(data.q)});
    hs.push_back(detail::unknown_assertable("L-ample", "L is ample", opt.asserted.ample));
    hs.push_back(detail::unknown_assertable("L-generated", "L is globally generated",
                                            opt.asserted.generated));
    const auto member = detail::member_hypothesis(data, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});
    hs.push_back(detail::genus_or_bn(member.genus, opt.asserted.bn_general));

    cert.verdict = conclude(hs);
    return cert;
}

namespace detail {

/// Shared tail of the L-polarized checks: the restriction of L to a
/// member of |L| has degree L^2; genus <= 1 members certify directly,
/// higher genus goes through the curve rules (branching on -L.K and the
/// Clifford bound). Evidence records deg L|_C, -L.K, and the bound used.
inline Hypothesis l_restriction_hypothesis(Int g, Int l2, Int neg_lk, const CheckOptions& opt) {
    std::ostringstream e;
    e << "deg L|_C = L^2 = " << l2 << ", -L.K = " << neg_lk << ", g = " << g << "; ";
    if (g >= 0 && g <= 1) {
        e << "g <= 1";
        return {"restriction-semistable", "M_{L|C} is semistable", HypStatus::verified, e.str()};
    }
    const auto restr = restriction_semistable(g, l2, opt, false);
    e << restr.evidence;
    return {"restriction-semistable", "M_{L|C} is semistable", restr.status, e.str()};
}

} // namespace detail

/// L-stability on a regular surface through the degree of L|_C:
/// -L.K >= 2 certifies outright; -L.K = 1 needs cliff(C) >= 1;
/// L.K = 0 needs cliff(C) >= 2; genus <= 1 members certify directly.
inline Certificate check_prop34(const SurfaceModel& S, const DivisorClass& L,
                                const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::prop34;
    cert.surface = S;
    cert.L = L;
    cert.H = L;
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    hs.push_back({"surface-regular", "q = 0", HypStatus::verified, "q = 0 for this family"});
    const bool ample = is_ample(S, L);
    hs.push_back({"L-ample", "L is ample", merge(ample ? Tri::yes : Tri::no, opt.asserted.ample),
                  detail::ample_evidence(S, L)});
    const Tri gg = is_globally_generated(S, L);
    hs.push_back({"L-generated", "L is globally generated", merge(gg, opt.asserted.generated),
                  detail::generated_evidence(S, L, gg)});
    const auto member = detail::member_hypothesis(S, L, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});
    hs.push_back(detail::l_restriction_hypothesis(member.genus, S.pair(L, L),
                                                  -S.pair(L, S.K()), opt));

    cert.verdict = conclude(hs);
    return cert;
}

inline Certificate check_prop34(const NumericSurfaceData& data, const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::prop34;
    cert.surface = SurfaceModel::numeric(data);
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    hs.push_back({"surface-regular", "q = 0",
                  data.q == 0 ? HypStatus::verified : HypStatus::failed,
                  "q = " + std::to_string(data.q)});
    hs.push_back(detail::unknown_assertable("L-ample", "L is ample", opt.asserted.ample));
    hs.push_back(detail::unknown_assertable("L-generated", "L is globally generated",
                                            opt.asserted.generated));
    const auto member = detail::member_hypothesis(data, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});
    hs.push_back(detail::l_restriction_hypothesis(member.genus, data.L2, -data.LK, opt));

    cert.verdict = conclude(hs);
    return cert;
}

/// L-stability for every ample L = aC + bF on a Hirzebruch surface:
/// -L.K = 2b - an + 2a, at least 4 on the ample cone, so the degree
/// branch always fires. Threshold used is 2.
inline Certificate check_hirzebruch(const SurfaceModel& S, const DivisorClass& L,
                                    const CheckOptions& opt = {}) {
    if (S.family() != Family::hirzebruch)
        throw input_error("cor36 applies to hirzebruch:n surfaces only, got " + S.descriptor());
    Certificate cert;
    cert.criterion = Criterion::cor36;
    cert.surface = S;
    cert.L = L;
    cert.H = L;
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    const Int a = L[0]; // L = aC + bF, so L.F = a and L.C = b - na
    const Int lc = S.pair(L, DivisorClass({1, 0}));
    const bool ample = is_ample(S, L);
    {
        std::ostringstream e;
        e << "a = L.F = " << a << ", b - na = L.C = " << lc << "; ample iff both positive";
        hs.push_back({"L-ample", "L is ample",
                      merge(ample ? Tri::yes : Tri::no, opt.asserted.ample), e.str()});
    }
    const Tri gg = is_globally_generated(S, L);
    hs.push_back({"L-generated", "L is globally generated", merge(gg, opt.asserted.generated),
                  detail::generated_evidence(S, L, gg)});
    const auto member = detail::member_hypothesis(S, L, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});

    const Int neg_lk = -S.pair(L, S.K());
    {
        std::ostringstream e;
        e << "-L.K = 2b - an + 2a = " << neg_lk
          << " >= 2 required (every ample class here gives >= 4)";
        hs.push_back({"negLK-threshold", "-L.K >= 2",
                      neg_lk >= 2 ? HypStatus::verified : HypStatus::failed, e.str()});
    }
    hs.push_back(detail::l_restriction_hypothesis(member.genus, S.pair(L, L), neg_lk, opt));

    cert.verdict = conclude(hs);
    return cert;
}

/// L-stability for ample generated L on a del Pezzo surface: members of
/// genus <= 1 certify directly, otherwise -L.K >= 2 follows from
/// h^0(-K) >= 2 and the degree branch applies.
inline Certificate check_delpezzo_L(const SurfaceModel& S, const DivisorClass& L,
                                    const CheckOptions& opt = {}) {
    if (S.family() != Family::del_pezzo)
        throw input_error("cor35 applies to delpezzo:r surfaces only, got " + S.descriptor());
    Certificate cert;
    cert.criterion = Criterion::cor35;
    cert.surface = S;
    cert.L = L;
    cert.H = L;
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    const bool ample = is_ample(S, L);
    hs.push_back({"L-ample", "L is ample", merge(ample ? Tri::yes : Tri::no, opt.asserted.ample),
                  detail::ample_evidence(S, L)});
    const Tri gg = is_globally_generated(S, L);
    hs.push_back({"L-generated", "L is globally generated", merge(gg, opt.asserted.generated),
                  detail::generated_evidence(S, L, gg)});
    const auto member = detail::member_hypothesis(S, L, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});

    const Int neg_lk = -S.pair(L, S.K());
    {
        std::ostringstream e;
        Hypothesis h{"slope-condition", "g(C) <= 1 or -L.K >= 2", HypStatus::unknown, ""};
        if (member.genus >= 0 && member.genus <= 1) {
            e << "g(C) = " << member.genus << " <= 1";
            h.status = HypStatus::verified;
        } else if (neg_lk >= 2) {
            e << "-L.K = " << neg_lk << " >= 2 (g(C) = " << member.genus << " > 1)";
            h.status = HypStatus::verified;
        } else {
            e << "g(C) = " << member.genus << " > 1 and -L.K = " << neg_lk << " < 2";
            h.status = HypStatus::failed;
        }
        h.evidence = e.str();
        hs.push_back(std::move(h));
    }

    cert.verdict = conclude(hs);
    return cert;
}

/// L-stability on a K-numerically-trivial regular surface: the member
/// has deg L|_C = L^2 = 2g - 2, so cliff(C) >= 2 puts the degree over
/// the Clifford threshold.
inline Certificate check_enriques(const NumericSurfaceData& data, const CheckOptions& opt = {}) {
    Certificate cert;
    cert.criterion = Criterion::cor37;
    cert.surface = SurfaceModel::numeric(data);
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;

    hs.push_back({"K-numerically-trivial", "L.K = 0 and K^2 = 0",
                  data.k_numerically_trivial() ? HypStatus::verified : HypStatus::failed,
                  "L.K = " + std::to_string(data.LK) + ", K^2 = " + std::to_string(data.K2)});
    hs.push_back({"surface-regular", "q = 0",
                  data.q == 0 ? HypStatus::verified : HypStatus::failed,
                  "q = " + std::to_string(data.q)});
    hs.push_back(detail::unknown_assertable("L-ample", "L is ample", opt.asserted.ample));
    hs.push_back(detail::unknown_assertable("L-generated", "L is globally generated",
                                            opt.asserted.generated));
    const auto member = detail::member_hypothesis(data, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});

    {
        const Int g = member.genus;
        Hypothesis h{"clifford-degree-bound", "deg L|_C = 2g - 2 >= 2g - cliff(C)",
                     HypStatus::unknown, ""};
        std::ostringstream e;
        e << "deg L|_C = L^2 = " << data.L2 << ", g = " << g << "; ";
        if (g < 0) {
            e << "no member curve";
            h.status = HypStatus::failed;
        } else if (!opt.cliff_bound) {
            e << "Clifford bound not supplied";
        } else if (*opt.cliff_bound < 2) {
            e << "asserted cliff >= " << *opt.cliff_bound << " < 2: degree bound not reached";
        } else if (g < 2 || *opt.cliff_bound > (g - 1) / 2) {
            e << "cliff >= " << *opt.cliff_bound << " impossible: cliff(C) <= floor((g-1)/2)"
              << (g >= 2 ? " = " + std::to_string((g - 1) / 2) : "") << " for g = " << g;
            h.status = HypStatus::failed;
        } else {
            e << "2g - 2 = " << 2 * g - 2 << " >= 2g - cliff = " << 2 * g - *opt.cliff_bound
              << " with asserted cliff >= " << *opt.cliff_bound;
            h.status = HypStatus::asserted;
        }
        h.evidence = e.str();
        hs.push_back(std::move(h));
    }

    cert.verdict = conclude(hs);
    return cert;
}

/// (-K)-stability of M_L for globally generated L with an irreducible
/// member on a del Pezzo surface. rank M_L = (L^2 - L.K)/2 and the slope
/// gap -2 L.K/(L^2 - L.K) <= 1 + 2/(L^2 - L.K) reduces to
/// -L.K <= L^2 + 2, which is adjunction (g >= 0).
inline Certificate check_delpezzo_antiK(const SurfaceModel& S, const DivisorClass& L,
                                        const CheckOptions& opt = {}) {
    if (S.family() != Family::del_pezzo)
        throw input_error("thm37 applies to delpezzo:r surfaces only, got " + S.descriptor());
    Certificate cert;
    cert.criterion = Criterion::thm37;
    cert.surface = S;
    cert.L = L;
    cert.H = -S.K();
    cert.H_tag = "antiK";
    auto& hs = cert.hypotheses;

    const Tri gg = is_globally_generated(S, L);
    hs.push_back({"L-generated", "L is globally generated", merge(gg, opt.asserted.generated),
                  detail::generated_evidence(S, L, gg)});
    const auto member = detail::member_hypothesis(S, L, opt.asserted.irreducible_member);
    hs.push_back({"L-irreducible-member", "|L| contains an irreducible non-singular member",
                  member.status, member.evidence});

    const Int l2 = S.pair(L, L);
    const Int lk = S.pair(L, S.K());
    const Int rank = (l2 - lk) / 2;
    {
        std::ostringstream e;
        e << "rank M_L = (L^2 - L.K)/2 = (" << l2 << " - " << lk << ")/2 = " << rank;
        if (const auto h0 = h0_certified(S, L)) e << "; cross-check h^0(L) - 1 = " << *h0 - 1;
        hs.push_back({"rank-positive", "rank M_L = (L^2 - L.K)/2 >= 1",
                      rank >= 1 ? HypStatus::verified : HypStatus::failed, e.str()});
    }
    {
        Hypothesis h{"slope-gap", "-L.K <= L^2 + 2", HypStatus::unknown, ""};
        std::ostringstream e;
        if (rank >= 1) {
            const Rational mu_dual(-2 * lk, l2 - lk);
            const Rational bound(l2 - lk + 2, l2 - lk);
            e << "mu_{-K}(M_L^dual) = -2 L.K/(L^2 - L.K) = " << mu_dual.str()
              << " <= 1 + 2/(L^2 - L.K) = " << bound.str() << " iff -L.K = " << -lk
              << " <= L^2 + 2 = " << l2 + 2;
            h.status = -lk <= l2 + 2 ? HypStatus::verified : HypStatus::failed;
        } else {
            e << "rank " << rank << " < 1: slope undefined";
        }
        h.evidence = e.str();
        hs.push_back(std::move(h));
    }

    cert.verdict = conclude(hs);
    return cert;
}

// ---------------------------------------------------------------------------
// Effective bound search

struct BoundOptions {
    std::optional<Int> m; // multiplier for H; auto when absent
    Int n_max = 1000;
    Assertions asserted;
};

/// Smallest n <= n_max such that L_n = nL + D is ample and generated and
///   (a) h^1(L_n - mH) = 0
///   (b) deg L_n|_C = L_n.mH >= 2g, C an irreducible member of |mH|
///   (c) h^0(mH) >= 3
///   (d) h^0(mH) - 1 + h^0(L_n - mH) >= h^0(L_n|_C) - 1 = L_n.mH - g
/// certify that M_{L_n} is H-stable. m defaults to 1 when H is ample and
/// generated with an irreducible member; otherwise it must be supplied.
inline Certificate bound_thm21(const SurfaceModel& S, const DivisorClass& L,
                               const DivisorClass& D, const DivisorClass& H,
                               const BoundOptions& opt = {}) {
    if (opt.n_max < 1) throw input_error("bound: n_max must be >= 1");
    Certificate cert;
    cert.criterion = Criterion::thm21;
    cert.surface = S;
    cert.L = L;
    cert.H = H;
    auto& hs = cert.hypotheses;

    const bool ampleL = is_ample(S, L);
    const bool ampleH = is_ample(S, H);
    hs.push_back({"L-ample", "L is ample", ampleL ? HypStatus::verified : HypStatus::failed,
                  detail::ample_evidence(S, L)});
    hs.push_back({"H-ample", "H is ample", ampleH ? HypStatus::verified : HypStatus::failed,
                  detail::ample_evidence(S, H)});
    if (!ampleL || !ampleH) {
        hs.push_back({"multiple-irreducible-member",
                      "|mH| contains an irreducible non-singular member", HypStatus::unknown,
                      "not evaluated: ampleness failed"});
        cert.verdict = conclude(hs);
        return cert;
    }

    Int m = 1;
    if (opt.m) {
        if (*opt.m < 1) throw input_error("bound: m must be >= 1");
        m = *opt.m;
    } else {
        const bool qualifies = is_globally_generated(S, H) == Tri::yes &&
                               has_irreducible_member(S, H, opt.asserted.irreducible_member) !=
                                   MemberStatus::unknown;
        if (!qualifies)
            throw input_error("bound: automatic m needs H ample and globally generated with an "
                              "irreducible member; supply --m-mult");
    }
    const DivisorClass Hm = m * H;
    const auto member = detail::member_hypothesis(S, Hm, opt.asserted.irreducible_member);
    hs.push_back({"multiple-irreducible-member",
                  "|mH| contains an irreducible non-singular member", member.status,
                  "m = " + std::to_string(m) + (opt.m ? "" : " (auto)") + "; " +
                      member.evidence});
    const Int g = member.genus;
    const std::optional<Int> h0H = h0_certified(S, Hm);

    struct Track {
        std::optional<Int> first;
        bool at_success = false;
    };
    Track gate, ca, cb, cc, cd;
    std::optional<Int> success;
    std::ostringstream at_n; // numbers at the certifying n

    for (Int n = 1; n <= opt.n_max && !success; ++n) {
        const DivisorClass Ln = n * L + D;
        const bool pos = is_ample(S, Ln) && is_globally_generated(S, Ln) == Tri::yes;
        if (pos && !gate.first) gate.first = n;
        if (!pos) continue;

        const DivisorClass diff = Ln - Hm;
        const bool a = h1_is_zero(S, diff) == Tri::yes;
        const Int deg = S.pair(Ln, Hm);
        const bool b = deg >= 2 * g;
        const bool c = h0H && *h0H >= 3;
        bool dcond = false;
        std::optional<Int> h0diff;
        if (b && h0H) {
            h0diff = h0_certified(S, diff);
            if (h0diff) dcond = *h0H - 1 + *h0diff >= deg - g;
        }
        if (a && !ca.first) ca.first = n;
        if (b && !cb.first) cb.first = n;
        if (c && !cc.first) cc.first = n;
        if (dcond && !cd.first) cd.first = n;
        if (a && b && c && dcond) {
            success = n;
            ca.at_success = cb.at_success = cc.at_success = cd.at_success = true;
            at_n << "at n = " << n << ": deg L_n|_C = " << deg << ", 2g = " << 2 * g
                 << ", h^0(mH) = " << *h0H << ", h^0(L_n - mH) = " << *h0diff
                 << ", h^0(L_n|_C) = " << deg - g + 1;
        }
    }

    auto window = [&](const Track& t, const char* what) {
        std::ostringstream e;
        if (success) {
            e << what << " holds at n = " << *success << " (first satisfied at n = " << *t.first
              << ")";
        } else if (t.first) {
            e << what << " first satisfied at n = " << *t.first
              << ", but no single n <= " << opt.n_max << " satisfies all conditions";
        } else {
            e << what << " not satisfied at any admissible n <= " << opt.n_max;
        }
        return e.str();
    };

    {
        std::ostringstream e;
        if (gate.first)
            e << "L_n ample and globally generated from n = " << *gate.first << " on";
        else
            e << "no n <= " << opt.n_max << " with L_n ample and globally generated";
        hs.push_back({"positivity", "L_n is ample and globally generated",
                      success ? HypStatus::verified : HypStatus::unknown, e.str()});
    }
    hs.push_back({"cond-a-h1-vanishing", "h^1(L_n - mH) = 0",
                  success ? HypStatus::verified : HypStatus::unknown,
                  window(ca, "h^1(L_n - mH) = 0")});
    hs.push_back({"cond-b-degree", "deg L_n|_C >= 2g",
                  success ? HypStatus::verified : HypStatus::unknown,
                  window(cb, "deg L_n|_C >= 2g")});
    {
        std::ostringstream e;
        if (h0H)
            e << "h^0(mH) = " << *h0H << (*h0H >= 3 ? " >= 3" : " < 3");
        else
            e << "h^0(mH) not certified";
        hs.push_back({"cond-c-pencil", "h^0(mH) >= 3",
                      success ? HypStatus::verified
                              : (h0H && *h0H < 3 ? HypStatus::failed : HypStatus::unknown),
                      e.str()});
    }
    hs.push_back({"cond-d-section-count", "h^0(mH) - 1 + h^0(L_n - mH) >= h^0(L_n|_C) - 1",
                  success ? HypStatus::verified : HypStatus::unknown,
                  window(cd, "section count") + (success ? "; " + at_n.str() : "")});

    cert.n_value = success;
    cert.verdict = conclude(hs);
    return cert;
}

/// Numeric surfaces carry no computable cohomology, so the search cannot
/// certify anything: every window condition stays Unknown.
inline Certificate bound_thm21(const NumericSurfaceData& data, const BoundOptions& opt = {}) {
    if (opt.n_max < 1) throw input_error("bound: n_max must be >= 1");
    Certificate cert;
    cert.criterion = Criterion::thm21;
    cert.surface = SurfaceModel::numeric(data);
    cert.H_tag = "L";
    auto& hs = cert.hypotheses;
    const char* why = "not computable from numeric data";
    hs.push_back(detail::unknown_assertable("L-ample", "L is ample", opt.asserted.ample));
    hs.push_back(detail::unknown_assertable("H-ample", "H is ample", opt.asserted.ample));
    hs.push_back({"multiple-irreducible-member",
                  "|mH| contains an irreducible non-singular member",
                  opt.asserted.irreducible_member ? HypStatus::asserted : HypStatus::unknown,
                  opt.asserted.irreducible_member ? "asserted" : why});
    hs.push_back({"positivity", "L_n is ample and globally generated", HypStatus::unknown, why});
    hs.push_back({"cond-a-h1-vanishing", "h^1(L_n - mH) = 0", HypStatus::unknown, why});
    hs.push_back({"cond-b-degree", "deg L_n|_C >= 2g", HypStatus::unknown, why});
    hs.push_back({"cond-c-pencil", "h^0(mH) >= 3", HypStatus::unknown, why});
    hs.push_back({"cond-d-section-count",
                  "h^0(mH) - 1 + h^0(L_n - mH) >= h^0(L_n|_C) - 1", HypStatus::unknown, why});
    cert.verdict = conclude(hs);
    return cert;
}

// ---------------------------------------------------------------------------
// Dispatch

/// One resolved check request: surface, L, polarization H (coordinates
/// resolved against the surface when it has a lattice; numeric surfaces
/// carry their polarization in the descriptor and force H = L).
struct CheckRequest {
    SurfaceModel S = SurfaceModel::p2();
    std::optional<DivisorClass> L;
    std::optional<DivisorClass> H;
    std::string H_tag; // "L" | "antiK" | "" (explicit coordinates)
    CheckOptions opt;
};

namespace detail {

inline bool h_is_l(const CheckRequest& r) {
    if (r.H_tag == "L") return true;
    return r.H && r.L && *r.H == *r.L;
}

inline bool h_is_antik(const CheckRequest& r) {
    if (!r.S.has_lattice()) return false;
    if (r.H_tag == "antiK") return true;
    return r.H && *r.H == -r.S.K();
}

inline void require_lattice_inputs(const CheckRequest& r, const char* crit) {
    if (r.S.has_lattice() && !r.L)
        throw input_error(std::string(crit) + ": L is required for this surface");
}

} // namespace detail

/// Run one named criterion. Throws input_error when the criterion does
/// not apply to the surface/polarization combination (invalid input, not
/// an Inconclusive verdict).
inline Certificate run_criterion(Criterion crit, const CheckRequest& req) {
    const bool lat = req.S.has_lattice();
    const bool hl = detail::h_is_l(req);
    detail::require_lattice_inputs(req, to_string(crit));

    auto finish = [&](Certificate c) {
        if (!req.H_tag.empty()) c.H_tag = req.H_tag;
        return c;
    };

    switch (crit) {
    case Criterion::thm32:
        if (!lat) {
            if (!hl) throw input_error("thm32: a numeric surface supports only H = L");
            return finish(check_thm32(req.S.numeric_data(), req.opt));
        }
        if (!req.H && !hl)
            throw input_error("thm32: H is required (coordinates, or the tags L / antiK)");
        return finish(check_thm32(req.S, *req.L, req.H ? *req.H : *req.L, req.opt));
    case Criterion::cor33:
        if (!hl) throw input_error("cor33 certifies L-stability; pass --H L");
        if (!lat) return finish(check_cor33(req.S.numeric_data(), req.opt));
        return finish(check_cor33(req.S, *req.L, req.opt));
    case Criterion::prop34:
        if (!hl) throw input_error("prop34 certifies L-stability; pass --H L");
        if (!lat) return finish(check_prop34(req.S.numeric_data(), req.opt));
        return finish(check_prop34(req.S, *req.L, req.opt));
    case Criterion::cor35:
        if (req.S.family() != Family::del_pezzo)
            throw input_error("cor35 applies to delpezzo:r surfaces only, got " +
                              req.S.descriptor());
        if (!hl) throw input_error("cor35 certifies L-stability; pass --H L");
        return finish(check_delpezzo_L(req.S, *req.L, req.opt));
    case Criterion::cor36:
        if (req.S.family() != Family::hirzebruch)
            throw input_error("cor36 applies to hirzebruch:n surfaces only, got " +
                              req.S.descriptor());
        if (!hl) throw input_error("cor36 certifies L-stability; pass --H L");
        return finish(check_hirzebruch(req.S, *req.L, req.opt));
    case Criterion::cor37:
        if (lat)
            throw input_error("cor37 applies to numeric surface descriptions only, got " +
                              req.S.descriptor());
        if (!hl) throw input_error("cor37 certifies L-stability; pass --H L");
        return finish(check_enriques(req.S.numeric_data(), req.opt));
    case Criterion::thm37:
        if (req.S.family() != Family::del_pezzo)
            throw input_error("thm37 applies to delpezzo:r surfaces only, got " +
                              req.S.descriptor());
        if (!detail::h_is_antik(req))
            throw input_error("thm37 certifies stability with respect to -K; pass --H antiK");
        return finish(check_delpezzo_antiK(req.S, *req.L, req.opt));
    case Criterion::thm21: {
        if (!lat) return finish(bound_thm21(req.S.numeric_data(), BoundOptions{}));
        if (!req.H) throw input_error("thm21: H is required");
        const DivisorClass zero(std::vector<Int>(static_cast<size_t>(req.S.rank()), 0));
        BoundOptions b;
        b.n_max = 1;
        b.asserted = req.opt.asserted;
        return finish(bound_thm21(req.S, *req.L, zero, *req.H, b));
    }
    }
    throw invariant_error("run_criterion: unhandled criterion");
}

/// Criterion auto: cheapest and strongest hypotheses first. Returns the
/// first HStable certificate, else the last one attempted.
inline Certificate run_auto(const CheckRequest& req) {
    const bool lat = req.S.has_lattice();
    const bool hl = detail::h_is_l(req);
    detail::require_lattice_inputs(req, "auto");

    std::optional<Certificate> last;
    auto attempt = [&](Criterion crit) -> std::optional<Certificate> {
        Certificate c = run_criterion(crit, req);
        if (c.verdict == Verdict::h_stable) return c;
        last = std::move(c);
        return std::nullopt;
    };

    if (lat && req.S.family() == Family::hirzebruch && hl)
        if (auto c = attempt(Criterion::cor36)) return *c;
    if (lat && req.S.family() == Family::del_pezzo && hl)
        if (auto c = attempt(Criterion::cor35)) return *c;
    if (lat && req.S.family() == Family::del_pezzo && detail::h_is_antik(req))
        if (auto c = attempt(Criterion::thm37)) return *c;
    if (hl) {
        if (auto c = attempt(Criterion::cor33)) return *c;
        if (auto c = attempt(Criterion::prop34)) return *c;
    }
    if (auto c = attempt(Criterion::thm32)) return *c;
    if (lat && req.H) {
        try {
            if (auto c = attempt(Criterion::thm21)) return *c;
        } catch (const input_error&) {
            // automatic m unavailable: the fallback is skipped, not an error
        }
    }
    if (!last) throw invariant_error("auto: no criterion attempted");
    return *last;
}

} // namespace syzstab
