#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syzstab/certify.hpp"
#include "syzstab/cohomology.hpp"
#include "syzstab/core.hpp"
#include "syzstab/lattice.hpp"
#include "syzstab/surfaces.hpp"

namespace syzstab {

/// Rectangular coefficient sweep. One inclusive range per lattice
/// coordinate; rows are emitted in ascending lexicographic coordinate
/// order, so output is deterministic however rows are evaluated.
struct SweepSpec {
    SurfaceModel S = SurfaceModel::p2();
    std::vector<std::pair<Int, Int>> ranges;
    std::string H_tag = "L"; // "L" or "antiK"
    std::optional<Criterion> criterion; // absent = auto
    CheckOptions opt;
};

inline constexpr const char* sweep_csv_header =
    "coords,ample,generated,neg_LK,h0,rank,slope,criterion,verdict";

namespace detail {

inline std::string sweep_row(const SweepSpec& spec, const DivisorClass& L) {
    const SurfaceModel& S = spec.S;
    std::ostringstream row;
    row << '"' << L.str() << '"';
    row << ',' << (is_ample(S, L) ? "true" : "false");
    row << ',' << to_string(is_globally_generated(S, L));
    row << ',' << -S.pair(L, S.K());

    const DivisorClass H = spec.H_tag == "antiK" ? -S.K() : L;
    const std::optional<Int> h0 = h0_certified(S, L);
    if (h0)
        row << ',' << *h0 << ',' << *h0 - 1;
    else
        row << ",unknown,unknown";
    const auto stats = syzygy_slope(S, L, H);
    if (stats)
        row << ',' << stats->slope.str();
    else
        row << ",unknown";

    CheckRequest req;
    req.S = S;
    req.L = L;
    req.H = H;
    req.H_tag = spec.H_tag;
    req.opt = spec.opt;
    const Certificate cert =
        spec.criterion ? run_criterion(*spec.criterion, req) : run_auto(req);
    if (cert.verdict == Verdict::h_stable)
        row << ',' << to_string(cert.criterion) << ",HStable";
    else
        row << ",none,Inconclusive";
    return row.str();
}

} // namespace detail

/// The full CSV table, header line included, one row per lattice point
/// of the box. Throws input_error on an empty range or a range count
/// that does not match the surface rank.
inline std::string run_sweep_csv(const SweepSpec& spec) {
    if (!spec.S.has_lattice())
        throw input_error("sweep needs lattice coordinates; numeric surfaces have none");
    const int rank = spec.S.rank();
    if (static_cast<int>(spec.ranges.size()) != rank)
        throw input_error("sweep needs " + std::to_string(rank) + " coordinate range(s), got " +
                          std::to_string(spec.ranges.size()));
    for (const auto& [lo, hi] : spec.ranges)
        if (lo > hi)
            throw input_error("empty sweep range " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    if (spec.H_tag != "L" && spec.H_tag != "antiK")
        throw input_error("sweep H must be the tag L or antiK, got " + spec.H_tag);

    std::vector<DivisorClass> box;
    std::vector<Int> coords(static_cast<size_t>(rank));
    const auto fill = [&](auto&& self, int i) -> void {
        if (i == rank) {
            box.emplace_back(coords);
            return;
        }
        for (Int v = spec.ranges[static_cast<size_t>(i)].first;
             v <= spec.ranges[static_cast<size_t>(i)].second; ++v) {
            coords[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    fill(fill, 0);

    std::ostringstream out;
    out << sweep_csv_header << "\n";
    for (const auto& L : box) out << detail::sweep_row(spec, L) << "\n";
    return out.str();
}

} // namespace syzstab
