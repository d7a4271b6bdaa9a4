#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "syzstab/core.hpp"
#include "syzstab/lattice.hpp"

namespace syzstab {

enum class Family { p2, hirzebruch, del_pezzo, numeric };

/// The numbers a purely numeric certificate can use when no lattice model
/// is available (Enriques mode and user-supplied surfaces). Positivity is
/// asserted, never computed, in this mode.
struct NumericSurfaceData {
    Int L2 = 0;
    Int LK = 0;
    Int K2 = 0;
    Int chiO = 1;
    Int q = 0;

    /// Numerically trivial canonical class, as far as the supplied data
    /// can see it. The descriptor grammar carries no separate flag, so
    /// L.K = 0 and K^2 = 0 together stand in for it.
    bool k_numerically_trivial() const { return LK == 0 && K2 == 0; }

    friend bool operator==(const NumericSurfaceData&, const NumericSurfaceData&) = default;
};

/// A built-in surface: its Picard lattice with a fixed basis, canonical
/// class, chi(O), irregularity and extremal-ray generators of the curve
/// cone. Immutable after construction; all queries are pure.
///
/// Families:
///   p2            rank 1, basis (h),           K = -3h
///   hirzebruch n  rank 2, basis (C,F),         K = -2C-(n+2)F,  C^2 = -n
///   delpezzo r    rank 1+r, basis (h,e1..er),  K = -3h+e1+..+er, r <= 8
///   numeric       no lattice; carries NumericSurfaceData only
class SurfaceModel {
public:
    static constexpr int max_hirzebruch_n = 100000;

    static SurfaceModel p2() {
        SurfaceModel s(Family::p2, 0, {"h"},
                       IntersectionForm(std::vector<std::vector<Int>>{{1}}), DivisorClass({-3}));
        s.extremal_rays_.push_back(DivisorClass({1}));
        return s;
    }

    static SurfaceModel hirzebruch(int n) {
        if (n < 0 || n > max_hirzebruch_n)
            throw input_error("hirzebruch: n must be in 0.." + std::to_string(max_hirzebruch_n) +
                              ", got " + std::to_string(n));
        SurfaceModel s(Family::hirzebruch, n, {"C", "F"},
                       IntersectionForm(std::vector<std::vector<Int>>{{-n, 1}, {1, 0}}),
                       DivisorClass({-2, -(Int(n) + 2)}));
        s.extremal_rays_.push_back(DivisorClass({1, 0})); // section C, C^2 = -n
        s.extremal_rays_.push_back(DivisorClass({0, 1})); // fiber F
        return s;
    }

    static SurfaceModel del_pezzo(int r);

    // q != 0 is representable; criteria that need a regular surface fail
    // that hypothesis instead of refusing construction.
    static SurfaceModel numeric(NumericSurfaceData data) {
        SurfaceModel s(Family::numeric, 0, {}, IntersectionForm(std::vector<std::vector<Int>>{}),
                       DivisorClass(std::vector<Int>{}));
        s.chiO_ = data.chiO;
        s.q_ = data.q;
        s.numeric_ = data;
        return s;
    }

    Family family() const { return family_; }
    /// n for Hirzebruch, r for del Pezzo, 0 otherwise.
    int param() const { return param_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }
    int rank() const { return form_.rank(); }
    const IntersectionForm& form() const {
        require_lattice();
        return form_;
    }
    const DivisorClass& K() const {
        require_lattice();
        return K_;
    }
    Int chiO() const { return chiO_; }
    Int q() const { return q_; }
    const std::vector<DivisorClass>& extremal_rays() const { return extremal_rays_; }
    const NumericSurfaceData& numeric_data() const {
        if (!numeric_) throw input_error("surface carries no numeric data");
        return *numeric_;
    }
    bool has_lattice() const { return family_ != Family::numeric; }

    Int pair(const DivisorClass& a, const DivisorClass& b) const { return form().pair(a, b); }

    /// Canonical descriptor string, re-parseable by parse_surface.
    std::string descriptor() const {
        switch (family_) {
        case Family::p2: return "p2";
        case Family::hirzebruch: return "hirzebruch:" + std::to_string(param_);
        case Family::del_pezzo: return "delpezzo:" + std::to_string(param_);
        case Family::numeric: {
            const NumericSurfaceData& d = *numeric_;
            std::ostringstream os;
            os << "numeric:L2=" << d.L2 << ",LK=" << d.LK << ",K2=" << d.K2
               << ",chiO=" << d.chiO << ",q=" << d.q;
            return os.str();
        }
        }
        return {};
    }

private:
    SurfaceModel(Family f, int param, std::vector<std::string> labels, IntersectionForm form,
                 DivisorClass K)
        : family_(f), param_(param), basis_labels_(std::move(labels)), form_(std::move(form)),
          K_(std::move(K)) {}

    void require_lattice() const {
        if (family_ == Family::numeric)
            throw input_error("operation needs a lattice; numeric surfaces carry numbers only");
    }

    Family family_;
    int param_;
    std::vector<std::string> basis_labels_;
    IntersectionForm form_;
    DivisorClass K_;
    Int chiO_ = 1;
    Int q_ = 0;
    std::vector<DivisorClass> extremal_rays_;
    std::optional<NumericSurfaceData> numeric_;
};

/// Descriptors are canonical, so equality of models is equality of descriptors.
inline bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.descriptor() == b.descriptor();
}
inline bool operator!=(const SurfaceModel& a, const SurfaceModel& b) { return !(a == b); }

/// All classes C with C.C = -1 and C.K = -1 on delpezzo:r, r >= 1, by
/// exhaustive search over the box that is known to contain them for
/// r <= 8 (h-coefficient 0..6, e-coefficients -3..1). Sorted ascending
/// by (a, -c_1, .., -c_r) so that e1 < e2 < .. < h-e1-e2 < ...
inline std::vector<DivisorClass> minus_one_curves(const SurfaceModel& S) {
    if (S.family() != Family::del_pezzo || S.param() < 1)
        throw input_error("minus_one_curves: surface must be delpezzo:r with r >= 1");
    const int r = S.param();

    std::vector<std::vector<Int>> found;
    std::vector<Int> c(static_cast<std::size_t>(r) + 1, 0);
    // c[0] = coefficient of h; c[i] = coefficient of e_i (search -3..1)
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == r + 1) {
            Int self_int = c[0] * c[0];
            Int k_int = -3 * c[0];
            for (int i = 1; i <= r; ++i) {
                self_int -= c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
                k_int -= c[static_cast<std::size_t>(i)];
            }
            if (self_int == -1 && k_int == -1) found.push_back(c);
            return;
        }
        for (Int v = -3; v <= 1; ++v) {
            c[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1);
        }
        c[static_cast<std::size_t>(idx)] = 0;
    };
    for (Int a = 0; a <= 6; ++a) {
        c[0] = a;
        rec(rec, 1);
    }

    std::sort(found.begin(), found.end(), [](const std::vector<Int>& x, const std::vector<Int>& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        for (std::size_t i = 1; i < x.size(); ++i)
            if (x[i] != y[i]) return -x[i] < -y[i];
        return false;
    });

    std::vector<DivisorClass> out;
    out.reserve(found.size());
    for (auto& v : found) out.push_back(DivisorClass(std::move(v)));
    return out;
}

inline SurfaceModel SurfaceModel::del_pezzo(int r) {
    if (r < 0 || r > 8)
        throw input_error("delpezzo: r must be in 0..8, got " + std::to_string(r));
    std::vector<std::string> labels{"h"};
    for (int i = 1; i <= r; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(r) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(r) + 1, 0));
    m[0][0] = 1;
    for (int i = 1; i <= r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    std::vector<Int> k(static_cast<std::size_t>(r) + 1, 1);
    k[0] = -3;
    SurfaceModel s(Family::del_pezzo, r, std::move(labels), IntersectionForm(std::move(m)),
                   DivisorClass(std::move(k)));
    // Curve-cone generators: the (-1)-classes for r >= 1 (plus h-e1 when
    // r = 1, where they do not span); {h} for r = 0.
    if (r == 0) {
        s.extremal_rays_.push_back(DivisorClass({1}));
    } else {
        s.extremal_rays_ = minus_one_curves(s);
        if (r == 1) s.extremal_rays_.push_back(DivisorClass({1, -1}));
    }
    return s;
}

inline SurfaceModel make_surface(Family f, int param = 0) {
    switch (f) {
    case Family::p2: return SurfaceModel::p2();
    case Family::hirzebruch: return SurfaceModel::hirzebruch(param);
    case Family::del_pezzo: return SurfaceModel::del_pezzo(param);
    default: throw input_error("make_surface: numeric surfaces need NumericSurfaceData");
    }
}

/// Nef test on the built-in lattice families. Positivity cannot be
/// computed for numeric surfaces, only asserted.
inline bool is_nef(const SurfaceModel& S, const DivisorClass& L) {
    switch (S.family()) {
    case Family::p2:
        if (L.rank() != 1) throw input_error("is_nef: class rank must be 1 on p2");
        return L[0] >= 0;
    case Family::hirzebruch: {
        if (L.rank() != 2) throw input_error("is_nef: class rank must be 2 on hirzebruch");
        const Int a = L[0], b = L[1];
        return a >= 0 && b >= static_cast<Int>(S.param()) * a;
    }
    case Family::del_pezzo: {
        for (const DivisorClass& ray : S.extremal_rays())
            if (S.pair(L, ray) < 0) return false;
        return true;
    }
    default:
        throw input_error("is_nef: unsupported on numeric surfaces (positivity is asserted)");
    }
}

/// Ample test: strict positivity against the same cone generators.
inline bool is_ample(const SurfaceModel& S, const DivisorClass& L) {
    switch (S.family()) {
    case Family::p2:
        if (L.rank() != 1) throw input_error("is_ample: class rank must be 1 on p2");
        return L[0] > 0;
    case Family::hirzebruch: {
        if (L.rank() != 2) throw input_error("is_ample: class rank must be 2 on hirzebruch");
        const Int a = L[0], b = L[1];
        return a > 0 && b > static_cast<Int>(S.param()) * a;
    }
    case Family::del_pezzo: {
        for (const DivisorClass& ray : S.extremal_rays())
            if (S.pair(L, ray) <= 0) return false;
        return true;
    }
    default:
        throw input_error("is_ample: unsupported on numeric surfaces (positivity is asserted)");
    }
}

/// Global generation. On the toric families and delpezzo:r with r <= 7,
/// nef implies generated. On delpezzo:8 a nef class with L.(-K) = 1 can
/// have a base point (the anticanonical class itself does), so that case
/// stays unknown.
inline Tri is_globally_generated(const SurfaceModel& S, const DivisorClass& L) {
    switch (S.family()) {
    case Family::p2:
    case Family::hirzebruch:
        return is_nef(S, L) ? Tri::yes : Tri::no;
    case Family::del_pezzo: {
        if (!is_nef(S, L)) return Tri::no;
        if (S.param() <= 7) return Tri::yes;
        const Int deg = S.pair(L, -S.K());
        if (deg == 1) return Tri::unknown;
        return Tri::yes; // deg >= 2, or deg = 0 forcing L = 0
    }
    default:
        throw input_error("is_globally_generated: unsupported on numeric surfaces");
    }
}

enum class MemberStatus { verified, asserted, unknown };

/// Does |L| contain an irreducible (non-singular) curve? Decided by a
/// Bertini-style rule: a generated class whose sections map the surface
/// onto a surface (L ample, or L.L > 0) has irreducible general members.
/// Free pencils (L.L = 0) and everything weaker degrade to the user
/// assertion, else unknown. Certificates record the rule as heuristic.
inline MemberStatus has_irreducible_member(const SurfaceModel& S, const DivisorClass& L,
                                           bool user_asserted = false) {
    if (S.family() != Family::numeric) {
        if (is_globally_generated(S, L) == Tri::yes &&
            (is_ample(S, L) || S.pair(L, L) > 0))
            return MemberStatus::verified;
    }
    return user_asserted ? MemberStatus::asserted : MemberStatus::unknown;
}

/// Parse "p2" | "hirzebruch:n" | "delpezzo:r" |
/// "numeric:L2=..,LK=..,K2=..,chiO=..,q=..".
inline SurfaceModel parse_surface(std::string_view text) {
    auto parse_int = [](std::string_view tok, std::string_view what) -> Int {
        if (tok.empty()) throw input_error("surface descriptor: empty " + std::string(what));
        std::size_t pos = 0;
        Int value = 0;
        try {
            value = std::stoll(std::string(tok), &pos);
        } catch (const std::exception&) {
            throw input_error("surface descriptor: bad integer '" + std::string(tok) + "'");
        }
        if (pos != tok.size())
            throw input_error("surface descriptor: bad integer '" + std::string(tok) + "'");
        return value;
    };

    if (text == "p2") return SurfaceModel::p2();
    if (text.rfind("hirzebruch:", 0) == 0)
        return SurfaceModel::hirzebruch(static_cast<int>(parse_int(text.substr(11), "n")));
    if (text.rfind("delpezzo:", 0) == 0)
        return SurfaceModel::del_pezzo(static_cast<int>(parse_int(text.substr(9), "r")));
    if (text.rfind("numeric:", 0) == 0) {
        std::string_view body = text.substr(8);
        NumericSurfaceData data;
        bool seen_L2 = false, seen_LK = false, seen_K2 = false, seen_chiO = false, seen_q = false;
        while (!body.empty()) {
            const std::size_t comma = body.find(',');
            std::string_view item = body.substr(0, comma);
            body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos)
                throw input_error("surface descriptor: expected key=value, got '" +
                                  std::string(item) + "'");
            const std::string_view key = item.substr(0, eq);
            const Int value = parse_int(item.substr(eq + 1), key);
            if (key == "L2") data.L2 = value, seen_L2 = true;
            else if (key == "LK") data.LK = value, seen_LK = true;
            else if (key == "K2") data.K2 = value, seen_K2 = true;
            else if (key == "chiO") data.chiO = value, seen_chiO = true;
            else if (key == "q") data.q = value, seen_q = true;
            else throw input_error("surface descriptor: unknown key '" + std::string(key) + "'");
        }
        if (!(seen_L2 && seen_LK && seen_K2 && seen_chiO && seen_q))
            throw input_error("surface descriptor: numeric needs L2, LK, K2, chiO and q");
        return SurfaceModel::numeric(data);
    }
    throw input_error("unknown surface descriptor '" + std::string(text) + "'");
}

} // namespace syzstab
