#pragma once

#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "syzstab/core.hpp"

namespace syzstab {

/// An integer divisor class in the fixed basis of a surface's Picard
/// lattice. Value-semantic and immutable after construction.
///
/// Coefficients are capped at |c| <= coeff_limit so that every pairing
/// fits comfortably in 64 bits; larger input is rejected rather than
/// silently wrapped.
class DivisorClass {
public:
    static constexpr Int coeff_limit = 1'000'000;

    explicit DivisorClass(std::vector<Int> coords) : coords_(std::move(coords)) {
        for (Int c : coords_) {
            if (c > coeff_limit || c < -coeff_limit)
                throw input_error("DivisorClass: coefficient " + std::to_string(c) +
                                  " exceeds limit " + std::to_string(coeff_limit));
        }
    }
    DivisorClass(std::initializer_list<Int> coords) : DivisorClass(std::vector<Int>(coords)) {}

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<Int>& coords() const { return coords_; }
    Int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (Int c : coords_)
            if (c != 0) return false;
        return true;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        check_same_rank(a, b);
        std::vector<Int> c(a.coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return DivisorClass(std::move(c));
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        check_same_rank(a, b);
        std::vector<Int> c(a.coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
        return DivisorClass(std::move(c));
    }
    DivisorClass operator-() const {
        std::vector<Int> c(coords_);
        for (Int& x : c) x = -x;
        return DivisorClass(std::move(c));
    }
    friend DivisorClass operator*(Int s, const DivisorClass& a) {
        std::vector<Int> c(a.coords_);
        for (Int& x : c) x *= s;
        return DivisorClass(std::move(c));
    }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

    /// Comma-separated coordinates, e.g. "1,-2,0".
    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ',';
            os << coords_[i];
        }
        return os.str();
    }

private:
    static void check_same_rank(const DivisorClass& a, const DivisorClass& b) {
        if (a.rank() != b.rank())
            throw input_error("DivisorClass: rank mismatch (" + std::to_string(a.rank()) +
                              " vs " + std::to_string(b.rank()) + ")");
    }

    std::vector<Int> coords_;
};

/// The symmetric integer intersection pairing of a Picard lattice,
/// stored as a dense rank x rank matrix.
class IntersectionForm {
public:
    explicit IntersectionForm(std::vector<std::vector<Int>> rows) {
        rank_ = static_cast<int>(rows.size());
        entries_.reserve(static_cast<std::size_t>(rank_) * rank_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != rank_)
                throw input_error("IntersectionForm: matrix is not square");
            for (Int v : row) entries_.push_back(v);
        }
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < i; ++j)
                if (at(i, j) != at(j, i))
                    throw input_error("IntersectionForm: matrix is not symmetric");
    }

    int rank() const { return rank_; }
    Int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * rank_ + j]; }

    std::vector<std::vector<Int>> rows() const {
        std::vector<std::vector<Int>> r(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) r[static_cast<std::size_t>(i)].push_back(at(i, j));
        return r;
    }

    /// a^T M b, computed in 128-bit and range-checked back to 64.
    Int pair(const DivisorClass& a, const DivisorClass& b) const {
        if (a.rank() != rank_ || b.rank() != rank_)
            throw input_error("intersect: class rank does not match form rank " +
                              std::to_string(rank_));
        __int128 acc = 0;
        for (int i = 0; i < rank_; ++i) {
            if (a[i] == 0) continue;
            __int128 row = 0;
            for (int j = 0; j < rank_; ++j) row += static_cast<__int128>(at(i, j)) * b[j];
            acc += static_cast<__int128>(a[i]) * row;
        }
        if (acc > std::numeric_limits<Int>::max() || acc < std::numeric_limits<Int>::min())
            throw input_error("intersect: pairing overflows 64-bit range");
        return static_cast<Int>(acc);
    }

    friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
        return a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }

private:
    int rank_ = 0;
    std::vector<Int> entries_;
};

inline Int intersect(const DivisorClass& a, const DivisorClass& b, const IntersectionForm& form) {
    return form.pair(a, b);
}

inline Int self_intersect(const DivisorClass& a, const IntersectionForm& form) {
    return form.pair(a, a);
}

} // namespace syzstab
