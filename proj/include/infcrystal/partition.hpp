/**
 * @file partition.hpp
 * @brief Integer partitions, stored in decreasing order.
 */
#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace infcrystal {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }

    /// Accepts the increasing convention 0 <= l_1 <= ... <= l_m (zeros dropped).
    static Partition from_increasing(std::vector<int> inc) {
        std::vector<int> p;
        for (auto it = inc.rbegin(); it != inc.rend(); ++it)
            if (*it != 0) p.push_back(*it);
        return Partition(std::move(p));
    }
    std::vector<int> to_increasing() const { return {parts.rbegin(), parts.rend()}; }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts.empty()) {
            c.assign(parts[0], 0);
            for (int p : parts)
                for (int j = 0; j < p; ++j) ++c[j];
        }
        return Partition(std::move(c));
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (std::size_t i = 0; i < inner.parts.size(); ++i)
            if (inner.parts[i] > parts[i]) return false;
        return true;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    void validate() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw input_error("partition parts must be positive");
            if (i && parts[i] > parts[i - 1]) throw input_error("partition parts must be weakly decreasing");
        }
    }
};

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s + ")";
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

enum class StripKind { Horizontal, Vertical, Neither, Both };

/// Classifies outer/inner: horizontal = no two added boxes in a column,
/// vertical = no two in a row.
inline StripKind strips(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) throw input_error("strips: inner shape is not contained in outer shape");
    bool horizontal = true, vertical = true;
    for (int i = 0; i < outer.length(); ++i) {
        if (outer[i + 1] > inner[i]) horizontal = false;
        if (outer[i] - inner[i] > 1) vertical = false;
    }
    if (horizontal && vertical) return StripKind::Both;
    if (horizontal) return StripKind::Horizontal;
    if (vertical) return StripKind::Vertical;
    return StripKind::Neither;
}

inline bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    auto k = strips(inner, outer);
    return k == StripKind::Horizontal || k == StripKind::Both;
}

inline bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    auto k = strips(inner, outer);
    return k == StripKind::Vertical || k == StripKind::Both;
}

}  // namespace infcrystal
