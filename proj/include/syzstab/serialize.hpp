#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "syzstab/certify.hpp"
#include "syzstab/core.hpp"
#include "syzstab/lattice.hpp"
#include "syzstab/surfaces.hpp"

namespace syzstab {

using json = nlohmann::ordered_json;

/// Certificate wire format. Field names are fixed: criterion, surface,
/// L, H, hypotheses[] (id, statement, status, evidence), verdict, and n
/// when a bound search produced one. Integers are JSON numbers; L is a
/// coordinate array, or {"L2","LK"} on a numeric surface; H is a
/// coordinate array or one of the tags "L" / "antiK".
inline json to_json(const Certificate& c) {
    json j;
    j["criterion"] = to_string(c.criterion);
    j["surface"] = c.surface.descriptor();

    if (c.L) {
        json arr = json::array();
        for (int i = 0; i < c.L->rank(); ++i) arr.push_back((*c.L)[i]);
        j["L"] = std::move(arr);
    } else {
        const NumericSurfaceData& d = c.surface.numeric_data();
        j["L"] = json{{"L2", d.L2}, {"LK", d.LK}};
    }

    if (!c.H_tag.empty()) {
        j["H"] = c.H_tag;
    } else if (c.H) {
        json arr = json::array();
        for (int i = 0; i < c.H->rank(); ++i) arr.push_back((*c.H)[i]);
        j["H"] = std::move(arr);
    } else {
        j["H"] = "L";
    }

    json hyps = json::array();
    for (const auto& h : c.hypotheses)
        hyps.push_back(json{{"id", h.id},
                            {"statement", h.statement},
                            {"status", to_string(h.status)},
                            {"evidence", h.evidence}});
    j["hypotheses"] = std::move(hyps);
    j["verdict"] = to_string(c.verdict);
    if (c.n_value) j["n"] = *c.n_value;
    return j;
}

namespace detail {

inline DivisorClass divisor_from_json(const json& arr, const char* field) {
    if (!arr.is_array())
        throw input_error(std::string("certificate field ") + field +
                          " must be a coordinate array");
    std::vector<Int> coords;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw input_error(std::string("certificate field ") + field +
                              " must hold integers");
        coords.push_back(v.get<Int>());
    }
    return DivisorClass(std::move(coords));
}

inline const json& require_field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw input_error(std::string("certificate is missing field ") + name);
    return *it;
}

} // namespace detail

/// Inverse of to_json. Tags are re-resolved against the parsed surface,
/// so a round trip reproduces an equal Certificate value.
inline Certificate certificate_from_json(const json& j) {
    Certificate c;

    const std::string crit = detail::require_field(j, "criterion").get<std::string>();
    const auto parsed_crit = parse_criterion(crit);
    if (!parsed_crit) throw input_error("unknown criterion tag " + crit);
    c.criterion = *parsed_crit;

    c.surface = parse_surface(detail::require_field(j, "surface").get<std::string>());

    const json& lj = detail::require_field(j, "L");
    if (c.surface.has_lattice()) {
        c.L = detail::divisor_from_json(lj, "L");
        if (c.L->rank() != c.surface.rank())
            throw input_error("certificate field L has rank " + std::to_string(c.L->rank()) +
                              ", surface has rank " + std::to_string(c.surface.rank()));
    } else if (lj.is_object()) {
        const NumericSurfaceData& d = c.surface.numeric_data();
        if (detail::require_field(lj, "L2").get<Int>() != d.L2 ||
            detail::require_field(lj, "LK").get<Int>() != d.LK)
            throw input_error("certificate field L disagrees with the surface descriptor");
    } else {
        throw input_error("certificate field L must be {\"L2\",\"LK\"} on a numeric surface");
    }

    const json& hj = detail::require_field(j, "H");
    if (hj.is_string()) {
        c.H_tag = hj.get<std::string>();
        if (c.H_tag != "L" && c.H_tag != "antiK")
            throw input_error("certificate field H tag must be L or antiK, got " + c.H_tag);
        if (c.surface.has_lattice())
            c.H = c.H_tag == "L" ? *c.L : -c.surface.K();
        else if (c.H_tag != "L")
            throw input_error("a numeric surface supports only H = L");
    } else {
        c.H = detail::divisor_from_json(hj, "H");
    }

    const json& hyps = detail::require_field(j, "hypotheses");
    if (!hyps.is_array()) throw input_error("certificate field hypotheses must be an array");
    for (const auto& hv : hyps) {
        Hypothesis h;
        h.id = detail::require_field(hv, "id").get<std::string>();
        h.statement = detail::require_field(hv, "statement").get<std::string>();
        const std::string st = detail::require_field(hv, "status").get<std::string>();
        const auto parsed = parse_hyp_status(st);
        if (!parsed) throw input_error("unknown hypothesis status " + st);
        h.status = *parsed;
        h.evidence = detail::require_field(hv, "evidence").get<std::string>();
        c.hypotheses.push_back(std::move(h));
    }

    const std::string verdict = detail::require_field(j, "verdict").get<std::string>();
    if (verdict == "HStable")
        c.verdict = Verdict::h_stable;
    else if (verdict == "Inconclusive")
        c.verdict = Verdict::inconclusive;
    else
        throw input_error("unknown verdict " + verdict);

    if (auto it = j.find("n"); it != j.end()) c.n_value = it->get<Int>();
    return c;
}

inline Certificate certificate_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("certificate is not valid JSON");
    return certificate_from_json(j);
}

/// Plain-text rendering: one block, deterministic, no timestamps.
inline std::string to_text(const Certificate& c) {
    std::ostringstream os;
    os << "criterion: " << to_string(c.criterion) << "\n";
    os << "surface:   " << c.surface.descriptor() << "\n";
    if (c.L)
        os << "L:         (" << c.L->str() << ")\n";
    else {
        const NumericSurfaceData& d = c.surface.numeric_data();
        os << "L:         L^2 = " << d.L2 << ", L.K = " << d.LK << "\n";
    }
    if (!c.H_tag.empty())
        os << "H:         " << c.H_tag
           << (c.H ? " = (" + c.H->str() + ")" : std::string()) << "\n";
    else if (c.H)
        os << "H:         (" << c.H->str() << ")\n";
    os << "verdict:   " << to_string(c.verdict) << "\n";
    if (c.n_value) os << "n:         " << *c.n_value << "\n";
    os << "hypotheses:\n";
    for (const auto& h : c.hypotheses) {
        os << "  [" << to_string(h.status) << "] " << h.id << ": " << h.statement << "\n";
        os << "      " << h.evidence << "\n";
    }
    return os.str();
}

} // namespace syzstab
