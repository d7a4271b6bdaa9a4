#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "syzstab/certify.hpp"
#include "syzstab/core.hpp"
#include "syzstab/serialize.hpp"
#include "syzstab/surfaces.hpp"
#include "syzstab/sweep.hpp"

namespace syzstab::cli {

namespace detail {

inline Int parse_int_token(std::string_view s, const char* what) {
    Int v{};
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw input_error(std::string(what) + ": not an integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<Int> parse_coords(std::string_view s, const char* what) {
    if (s.empty()) throw input_error(std::string(what) + ": empty coordinate vector");
    std::vector<Int> coords;
    size_t pos = 0;
    while (true) {
        const size_t comma = s.find(',', pos);
        const std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - pos);
        coords.push_back(parse_int_token(tok, what));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return coords;
}

inline DivisorClass parse_divisor(const SurfaceModel& S, std::string_view s, const char* what) {
    auto coords = parse_coords(s, what);
    if (static_cast<int>(coords.size()) != S.rank())
        throw input_error(std::string(what) + ": expected " + std::to_string(S.rank()) +
                          " coordinate(s) for " + S.descriptor() + ", got " +
                          std::to_string(coords.size()));
    return DivisorClass(std::move(coords));
}

inline std::pair<Int, Int> parse_range(std::string_view s, const char* what) {
    const size_t dots = s.find("..");
    if (dots == std::string_view::npos)
        throw input_error(std::string(what) + ": range must look like lo..hi, got '" +
                          std::string(s) + "'");
    const Int lo = parse_int_token(s.substr(0, dots), what);
    const Int hi = parse_int_token(s.substr(dots + 2), what);
    return {lo, hi};
}

inline Assertions parse_asserts(std::string_view s) {
    Assertions a;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = s.find(',', pos);
        const std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - pos);
        if (tok == "ample")
            a.ample = true;
        else if (tok == "generated")
            a.generated = true;
        else if (tok == "irreducible-member")
            a.irreducible_member = true;
        else if (tok == "bn-general")
            a.bn_general = true;
        else if (tok == "nonhyperelliptic")
            a.nonhyperelliptic = true;
        else if (!tok.empty())
            throw input_error("--assert: unknown token '" + std::string(tok) +
                              "' (valid: ample, generated, irreducible-member, bn-general, "
                              "nonhyperelliptic)");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return a;
}

/// H on the command line: a tag or explicit coordinates.
struct PolarizationArg {
    std::optional<DivisorClass> coords;
    std::string tag; // "L" | "antiK" | ""
};

inline PolarizationArg resolve_H(const SurfaceModel& S, const std::optional<DivisorClass>& L,
                                 std::string_view h) {
    PolarizationArg out;
    if (h == "L") {
        out.tag = "L";
        if (S.has_lattice()) out.coords = *L;
        return out;
    }
    if (h == "antiK") {
        if (!S.has_lattice())
            throw input_error("--H antiK needs a lattice surface; numeric surfaces support "
                              "only --H L");
        out.tag = "antiK";
        out.coords = -S.K();
        return out;
    }
    if (!S.has_lattice())
        throw input_error("--H: numeric surfaces support only --H L");
    out.coords = parse_divisor(S, h, "--H");
    return out;
}

inline void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw input_error("cannot open output file " + out_path);
    f << payload;
}

inline std::string render_certificate(const Certificate& cert, const std::string& format) {
    if (format == "json") return to_json(cert).dump(2) + "\n";
    if (format == "text") return to_text(cert);
    throw input_error("--format: expected json or text, got '" + format + "'");
}

inline std::optional<Criterion> parse_check_criterion(const std::string& tok) {
    if (tok == "auto") return std::nullopt;
    const auto c = parse_criterion(tok);
    if (!c || *c == Criterion::thm21)
        throw input_error("--criterion: expected "
                          "auto|thm32|cor33|prop34|cor35|cor36|cor37|thm37, got '" +
                          tok + "'");
    return c;
}

inline std::string info_text(const SurfaceModel& S) {
    std::ostringstream os;
    os << "surface: " << S.descriptor() << "\n";
    if (!S.has_lattice()) {
        const NumericSurfaceData& d = S.numeric_data();
        os << "L^2:     " << d.L2 << "\n";
        os << "L.K:     " << d.LK << "\n";
        os << "K^2:     " << d.K2 << "\n";
        os << "chi(O):  " << d.chiO << "\n";
        os << "q:       " << d.q << "\n";
        return os.str();
    }
    os << "basis:   ";
    for (size_t i = 0; i < S.basis_labels().size(); ++i)
        os << (i ? ", " : "") << S.basis_labels()[i];
    os << "\n";
    os << "intersection matrix:\n";
    for (int i = 0; i < S.rank(); ++i) {
        os << " ";
        for (int k = 0; k < S.rank(); ++k) os << " " << S.form().rows()[i][k];
        os << "\n";
    }
    os << "K:       (" << S.K().str() << ")\n";
    os << "K^2:     " << S.pair(S.K(), S.K()) << "\n";
    os << "chi(O):  " << S.chiO() << "\n";
    os << "q:       " << S.q() << "\n";
    os << "extremal rays (" << S.extremal_rays().size() << "):\n";
    for (const auto& R : S.extremal_rays()) os << "  (" << R.str() << ")\n";
    return os.str();
}

inline std::string info_json(const SurfaceModel& S) {
    json j;
    j["surface"] = S.descriptor();
    if (!S.has_lattice()) {
        const NumericSurfaceData& d = S.numeric_data();
        j["L2"] = d.L2;
        j["LK"] = d.LK;
        j["K2"] = d.K2;
        j["chiO"] = d.chiO;
        j["q"] = d.q;
        return j.dump(2) + "\n";
    }
    j["basis"] = S.basis_labels();
    j["matrix"] = S.form().rows();
    json k = json::array();
    for (int i = 0; i < S.rank(); ++i) k.push_back(S.K()[i]);
    j["K"] = std::move(k);
    j["K2"] = S.pair(S.K(), S.K());
    j["chiO"] = S.chiO();
    j["q"] = S.q();
    json rays = json::array();
    for (const auto& R : S.extremal_rays()) {
        json r = json::array();
        for (int i = 0; i < R.rank(); ++i) r.push_back(R[i]);
        rays.push_back(std::move(r));
    }
    j["extremal_rays"] = std::move(rays);
    return j.dump(2) + "\n";
}

} // namespace detail

/// In-process entry point; args exclude the program name. Returns the
/// process exit code: 0 for any produced verdict (Inconclusive
/// included), 2 for invalid input.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact stability certificates for syzygy bundles on surfaces"};
    app.require_subcommand(1);

    std::string surface, L_arg, H_arg, D_arg, criterion = "auto", assert_arg, format,
                out_path, m_arg = "auto", cliff_arg, a_arg, b_arg, range_arg;
    Int nmax = 1000;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--surface", surface, "surface descriptor")->required();
        cmd->add_option("--format", format, "output format");
        cmd->add_option("--out", out_path, "write output to this path");
    };
    const auto add_hypothesis_flags = [&](CLI::App* cmd) {
        cmd->add_option("--assert", assert_arg,
                        "comma list: ample,generated,irreducible-member,bn-general,"
                        "nonhyperelliptic");
        cmd->add_option("--cliff-bound", cliff_arg, "lower bound for cliff(C)");
    };

    CLI::App* check = app.add_subcommand("check", "run one stability criterion");
    add_common(check);
    add_hypothesis_flags(check);
    check->add_option("--L", L_arg, "line bundle coordinates");
    check->add_option("--H", H_arg, "polarization: coordinates, L, or antiK");
    check->add_option("--criterion", criterion, "auto or a specific criterion");

    CLI::App* bound = app.add_subcommand("bound", "search the smallest certifying n");
    add_common(bound);
    add_hypothesis_flags(bound);
    bound->add_option("--L", L_arg, "line bundle coordinates");
    bound->add_option("--H", H_arg, "polarization: coordinates, L, or antiK");
    bound->add_option("--D", D_arg, "twist coordinates (default 0)");
    bound->add_option("--nmax", nmax, "search window upper end");
    bound->add_option("--m-mult", m_arg, "multiplier for H, or auto");

    CLI::App* sweep = app.add_subcommand("sweep", "CSV over a coordinate box");
    add_common(sweep);
    add_hypothesis_flags(sweep);
    sweep->add_option("--H", H_arg, "polarization tag: L or antiK");
    sweep->add_option("--criterion", criterion, "auto or a specific criterion");
    sweep->add_option("--a", a_arg, "range lo..hi for the first coordinate");
    sweep->add_option("--b", b_arg, "range lo..hi for the second coordinate");
    sweep->add_option("--range", range_arg, "range lo..hi for all remaining coordinates");

    CLI::App* info = app.add_subcommand("info", "print the surface model");
    add_common(info);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const SurfaceModel S = parse_surface(surface);
        CheckOptions opt;
        opt.asserted = detail::parse_asserts(assert_arg);
        if (!cliff_arg.empty()) {
            const Int c = detail::parse_int_token(cliff_arg, "--cliff-bound");
            if (c < 0) throw input_error("--cliff-bound: must be >= 0");
            opt.cliff_bound = c;
        }

        std::optional<DivisorClass> L;
        if (S.has_lattice()) {
            if (check->parsed() || bound->parsed()) {
                if (L_arg.empty()) throw input_error("--L is required for " + S.descriptor());
                L = detail::parse_divisor(S, L_arg, "--L");
            }
        } else if (!L_arg.empty()) {
            throw input_error("--L: numeric surfaces carry L in the descriptor");
        }

        if (check->parsed()) {
            if (format.empty()) format = "json";
            const auto crit = detail::parse_check_criterion(criterion);
            const auto H = detail::resolve_H(S, L, H_arg.empty() ? "L" : H_arg);
            CheckRequest req{S, L, H.coords, H.tag, opt};
            const Certificate cert = crit ? run_criterion(*crit, req) : run_auto(req);
            detail::emit(detail::render_certificate(cert, format), out_path, out);
            return 0;
        }

        if (bound->parsed()) {
            if (format.empty()) format = "json";
            BoundOptions b;
            b.n_max = nmax;
            b.asserted = opt.asserted;
            if (m_arg != "auto") {
                b.m = detail::parse_int_token(m_arg, "--m-mult");
                if (*b.m < 1) throw input_error("--m-mult: must be >= 1");
            }
            Certificate cert;
            if (!S.has_lattice()) {
                if (!H_arg.empty() && H_arg != "L")
                    throw input_error("--H: numeric surfaces support only --H L");
                if (!D_arg.empty())
                    throw input_error("--D: numeric surfaces have no lattice coordinates");
                cert = bound_thm21(S.numeric_data(), b);
            } else {
                if (H_arg.empty()) throw input_error("--H is required for bound");
                const auto H = detail::resolve_H(S, L, H_arg);
                DivisorClass D(std::vector<Int>(static_cast<size_t>(S.rank()), 0));
                if (!D_arg.empty()) D = detail::parse_divisor(S, D_arg, "--D");
                cert = bound_thm21(S, *L, D, *H.coords, b);
                cert.H_tag = H.tag;
            }
            detail::emit(detail::render_certificate(cert, format), out_path, out);
            return 0;
        }

        if (sweep->parsed()) {
            if (format.empty()) format = "csv";
            if (format != "csv")
                throw input_error("--format: sweep emits csv only, got '" + format + "'");
            if (!S.has_lattice())
                throw input_error("sweep needs lattice coordinates; numeric surfaces have none");
            SweepSpec spec;
            spec.S = S;
            spec.H_tag = H_arg.empty() ? "L" : H_arg;
            spec.criterion = detail::parse_check_criterion(criterion);
            spec.opt = opt;
            std::vector<std::optional<std::pair<Int, Int>>> per(
                static_cast<size_t>(S.rank()));
            if (!a_arg.empty()) {
                if (S.rank() < 1) throw input_error("--a: surface has no coordinates");
                per[0] = detail::parse_range(a_arg, "--a");
            }
            if (!b_arg.empty()) {
                if (S.rank() < 2)
                    throw input_error("--b: " + S.descriptor() + " has one coordinate");
                per[1] = detail::parse_range(b_arg, "--b");
            }
            std::optional<std::pair<Int, Int>> broadcast;
            if (!range_arg.empty()) broadcast = detail::parse_range(range_arg, "--range");
            for (size_t i = 0; i < per.size(); ++i) {
                if (!per[i]) per[i] = broadcast;
                if (!per[i])
                    throw input_error("sweep: coordinate " + std::to_string(i) +
                                      " has no range; pass " +
                                      (i == 0 ? "--a" : i == 1 ? "--b" : "--range"));
                spec.ranges.push_back(*per[i]);
            }
            detail::emit(run_sweep_csv(spec), out_path, out);
            return 0;
        }

        // info
        if (format.empty()) format = "text";
        if (format == "text")
            detail::emit(detail::info_text(S), out_path, out);
        else if (format == "json")
            detail::emit(detail::info_json(S), out_path, out);
        else
            throw input_error("--format: expected text or json, got '" + format + "'");
        return 0;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace syzstab::cli
