/**
 * @file word_crystal.hpp
 * @brief Kashiwara operators on words (tensor powers of B(1)) and the
 * rank-stabilization machinery used by every infinite-rank computation.
 *
 * A word x_1 x_2 ... x_l is the vertex x_1 (x) x_2 (x) ... (x) x_l with the
 * tensor rule
 *
 *     f(u (x) v) = f(u) (x) v   if phi(u) > eps(v),   u (x) f(v) otherwise
 *     e(u (x) v) = u (x) e(v)   if phi(u) < eps(v),   e(u) (x) v otherwise
 *
 * evaluated with the signature rule: each letter contributes eps minus signs
 * followed by phi plus signs, adjacent "+-" pairs cancel, f acts on the
 * leftmost surviving "+", e on the rightmost surviving "-".
 */
#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partition.hpp"

namespace infcrystal {

namespace detail {

struct Signature {
    int eps = 0;                   // surviving minus signs
    int phi = 0;                   // surviving plus signs
    std::ptrdiff_t e_pos = -1;     // letter carrying the rightmost surviving "-"
    std::ptrdiff_t f_pos = -1;     // letter carrying the leftmost surviving "+"
};

inline Signature signature(const Word& w, Color i, LieType t) {
    Signature s;
    // Unmatched plus signs, as a stack of letter positions (one entry per sign).
    std::vector<std::ptrdiff_t> plus;
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto [eps, phi] = local_string_unchecked(w[k], i, t);
        for (int m = 0; m < eps; ++m) {
            if (!plus.empty()) {
                plus.pop_back();
            } else {
                ++s.eps;
                s.e_pos = static_cast<std::ptrdiff_t>(k);
            }
        }
        for (int m = 0; m < phi; ++m) plus.push_back(static_cast<std::ptrdiff_t>(k));
    }
    s.phi = static_cast<int>(plus.size());
    if (!plus.empty()) s.f_pos = plus.front();
    return s;
}

}  // namespace detail

/// Lowering operator; nullopt encodes the zero action.
inline std::optional<Word> f_op(const Word& w, Color i, LieType t) {
    auto s = detail::signature(w, i, t);
    if (s.f_pos < 0) return std::nullopt;
    Word out = w;
    out[s.f_pos] = *letter_f(w[s.f_pos], i, t);
    return out;
}

/// Raising operator; nullopt encodes the zero action.
inline std::optional<Word> e_op(const Word& w, Color i, LieType t) {
    auto s = detail::signature(w, i, t);
    if (s.e_pos < 0) return std::nullopt;
    Word out = w;
    out[s.e_pos] = *letter_e(w[s.e_pos], i, t);
    return out;
}

inline int eps(const Word& w, Color i, LieType t) { return detail::signature(w, i, t).eps; }
inline int phi(const Word& w, Color i, LieType t) { return detail::signature(w, i, t).phi; }

/// Colors of I_n = {i in I | i < n}. Type D has no colors at rank 1, since
/// color 0 involves the letters 2 and 2-bar.
inline std::vector<Color> colors_below(int n, LieType t) {
    std::vector<Color> cs;
    if (t == LieType::D && n < 2) return cs;
    for (Color i = first_color(t); i < n; ++i) cs.push_back(i);
    return cs;
}

inline bool is_highest(const Word& w, int n, LieType t) {
    for (Color i : colors_below(n, t))
        if (detail::signature(w, i, t).e_pos >= 0) return false;
    return true;
}

struct RaiseResult {
    Word highest;
    std::vector<Color> path;  // colors of the raising operators, in application order
};

enum class ColorChoice { SmallestFirst, LargestFirst };

inline constexpr std::size_t default_raise_budget = 1'000'000;

/// Applies raising operators with colors in I_n until none applies. The
/// endpoint does not depend on the color choice; the recorded path does.
inline RaiseResult raise_to_highest(const Word& w, int n, LieType t,
                                    ColorChoice choice = ColorChoice::SmallestFirst,
                                    std::size_t budget = default_raise_budget) {
    require_legal(w, t);
    if (max_index(w) > n && !w.empty())
        throw input_error("raise_to_highest: rank " + std::to_string(n) + " below a letter index of the word");
    auto colors = colors_below(n, t);
    if (choice == ColorChoice::LargestFirst) std::reverse(colors.begin(), colors.end());
    RaiseResult r{w, {}};
    for (;;) {
        bool moved = false;
        for (Color i : colors) {
            auto s = detail::signature(r.highest, i, t);
            if (s.e_pos < 0) continue;
            r.highest[s.e_pos] = *letter_e(r.highest[s.e_pos], i, t);
            r.path.push_back(i);
            moved = true;
            break;
        }
        if (!moved) return r;
        if (r.path.size() > budget) throw budget_exhausted("raise_to_highest exceeded its step budget");
    }
}

/// Inverse of a raising path: applies f along the reversed path.
inline std::optional<Word> lower_along(Word w, const std::vector<Color>& path, LieType t) {
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto next = f_op(w, *it, t);
        if (!next) return std::nullopt;
        w = std::move(*next);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Rank stabilization

/// phi_n(lambda): lambda_k sits on coordinate n-k+1.
inline Weight dominant_weight(int n, const Partition& lambda) {
    if (lambda.length() > n) throw input_error("rank too small for partition " + to_string(lambda));
    Weight w;
    for (int k = 0; k < lambda.length(); ++k) w.add(n - k, lambda.parts[k]);
    return w;
}

/// Reads lambda off a weight of the form phi_n(lambda) with |lambda| = l, or
/// nullopt when the weight has any other form.
inline std::optional<Partition> partition_from_top_weight(const Weight& wt, int n, int l) {
    std::vector<int> parts;
    int total = 0;
    int k = n;
    for (; k >= 1; --k) {
        long v = wt[k];
        if (v <= 0) break;
        if (!parts.empty() && v > parts.back()) return std::nullopt;
        parts.push_back(static_cast<int>(v));
        total += static_cast<int>(v);
    }
    if (total != l) return std::nullopt;
    for (auto [idx, v] : wt.coords)
        if (idx > n || idx <= k) return std::nullopt;
    return Partition(std::move(parts));
}

struct RankPolicy {
    int escalations = 8;  // retries with rank += length before giving up
};

/// Default stabilized rank: (max letter index) + length, never below 1.
inline int initial_rank(const Word& w) { return std::max(1, max_index(w) + static_cast<int>(w.size())); }

struct StableComponent {
    int rank = 0;
    Partition shape;
    RaiseResult raised;
};

/// Shape of the component at a fixed rank, or nullopt if the highest weight
/// there is not of the form phi_n(lambda) with |lambda| = length.
inline std::optional<StableComponent> component_at_rank(const Word& w, int n, LieType t) {
    auto r = raise_to_highest(w, n, t);
    auto lam = partition_from_top_weight(weight(r.highest), n, static_cast<int>(w.size()));
    if (!lam) return std::nullopt;
    return StableComponent{n, std::move(*lam), std::move(r)};
}

/// Raises at the stabilized rank n* (escalating by the word length until the
/// highest weight has the infinite-rank form).
inline StableComponent stable_component(const Word& w, LieType t, RankPolicy policy = {}) {
    require_legal(w, t);
    if (w.empty()) return StableComponent{1, Partition{}, RaiseResult{{}, {}}};
    int n = initial_rank(w);
    for (int attempt = 0; attempt <= policy.escalations; ++attempt, n += static_cast<int>(w.size())) {
        if (auto c = component_at_rank(w, n, t)) return std::move(*c);
    }
    throw rank_instability("component shape did not stabilize for word '" + to_string(w) + "'");
}

inline Partition component_shape(const Word& w, LieType t) { return stable_component(w, t).shape; }

// ---------------------------------------------------------------------------
// Component enumeration

struct ComponentGraph {
    std::vector<Word> vertices;                          // BFS order from the highest vertex
    std::vector<std::tuple<std::size_t, std::size_t, Color>> edges;  // (from, to, color) for f edges
};

inline constexpr std::size_t default_component_budget = 5'000'000;

/// Breadth-first closure under f_i, i in I_n; colors are tried in increasing order.
inline ComponentGraph enumerate_component_graph(const Word& hw, int n, LieType t,
                                                std::size_t budget = default_component_budget,
                                                bool record_edges = true) {
    require_legal(hw, t);
    ComponentGraph g;
    std::unordered_map<Word, std::size_t, WordHash> seen;
    auto colors = colors_below(n, t);
    seen.emplace(hw, 0);
    g.vertices.push_back(hw);
    for (std::size_t head = 0; head < g.vertices.size(); ++head) {
        for (Color i : colors) {
            auto next = f_op(g.vertices[head], i, t);
            if (!next) continue;
            auto [it, inserted] = seen.emplace(*next, g.vertices.size());
            if (inserted) {
                if (g.vertices.size() >= budget) throw budget_exhausted("component enumeration exceeded its budget");
                g.vertices.push_back(std::move(*next));
            }
            if (record_edges) g.edges.emplace_back(head, it->second, i);
        }
    }
    return g;
}

inline std::vector<Word> enumerate_component(const Word& hw, int n, LieType t,
                                             std::size_t budget = default_component_budget) {
    return enumerate_component_graph(hw, n, t, budget, false).vertices;
}

}  // namespace infcrystal
