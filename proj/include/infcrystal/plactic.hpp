/**
 * @file plactic.hpp
 * @brief The plactic monoids of types A, B, C, D as length-preserving
 * rewrite systems on words, with congruence closure.
 *
 * Every relation is a pair of 3-letter windows. Relations are applied in
 * both directions; the reverse direction of a window u is found by scanning
 * the candidate windows v over indices <= max index of u + 1 (no relation
 * moves an index by more than one) and keeping those with v -> u.
 */
#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"

namespace infcrystal {

using Window = std::array<Letter, 3>;

struct RewriteStep {
    std::size_t position = 0;  // index of the first letter of the window
    Window before{};
    Window after{};
    std::string rule;  // relation family, e.g. "knuth-bax", "b-00x"
    bool forward = true;  // false when the relation was applied right to left
};

namespace detail {

struct RuleHit {
    const char* rule;
    Window out;
};

inline bool lt(Letter a, Letter b, LieType t) { return compare_letters(a, b, t) == Order::Less; }
inline bool le(Letter a, Letter b, LieType t) { return letter_leq(a, b, t); }

inline Letter shift_index(Letter x, int d) {
    return x.is_barred() ? Letter::barred(x.index() + d) : Letter::unbarred(x.index() + d);
}

/// Left-to-right application of every relation of the type to one window.
inline std::vector<RuleHit> forward_rules(const Window& w, LieType t) {
    std::vector<RuleHit> hits;
    const Letter a = w[0], b = w[1], x = w[2];
    const Letter one = Letter::unbarred(1), one_bar = Letter::barred(1), zero = Letter::zero();

    if (t == LieType::A) {
        if (lt(a, x, t) && le(x, b, t)) hits.push_back({"knuth-bax", {b, a, x}});
        if (le(x, a, t) && lt(a, b, t)) hits.push_back({"knuth-axb", {a, x, b}});
        return hits;
    }

    if (t == LieType::B) {
        if (lt(a, x, t) && lt(x, b, t) && b != a.bar()) hits.push_back({"knuth-bax", {b, a, x}});
        if (lt(x, a, t) && lt(a, b, t) && b != x.bar()) hits.push_back({"knuth-axb", {a, x, b}});
        if (b == x && lt(a, x, t) && x != a.bar() && !x.is_zero()) hits.push_back({"b-axx", {x, a, x}});
        if (a == x && lt(x, b, t) && b != x.bar() && !x.is_zero()) hits.push_back({"b-xbx", {x, x, b}});
    } else {
        if (lt(a, x, t) && le(x, b, t) && b != a.bar()) hits.push_back({"knuth-bax", {b, a, x}});
        if (le(x, a, t) && lt(a, b, t) && b != x.bar()) hits.push_back({"knuth-axb", {a, x, b}});
    }

    // b-bar b x = (b+1) (b+1)-bar x
    if (a == b.bar() && !b.is_zero() && le(b.bar(), x, t) && le(x, b, t))
        hits.push_back({"bar-pair-left", {shift_index(b, 1), shift_index(b, 1).bar(), x}});
    // a b b-bar = a (b-1)-bar (b-1)
    // (type D: the window 1 2 2-bar is governed by its own relation below)
    if (x == b.bar() && lt(b.bar(), a, t) && lt(a, b, t) && b.index() >= 2 &&
        !(t == LieType::B && a == zero && b == one) && !(t == LieType::D && a == one && b.index() == 2))
        hits.push_back({"bar-pair-right", {a, shift_index(b, -1).bar(), shift_index(b, -1)}});

    if (t == LieType::B) {
        if (a == zero && b == zero && le(x, one_bar, t)) hits.push_back({"b-00x", {zero, x, zero}});
        if (a == zero && x == zero && b.is_unbarred()) hits.push_back({"b-0b0", {b, zero, zero}});
        if (a == zero && b == one && x == one_bar) hits.push_back({"b-011", {one, one_bar, zero}});
    }

    if (t == LieType::D) {
        const Letter two = Letter::unbarred(2), two_bar = Letter::barred(2);
        if (a == one && x == one_bar && b.value >= 2) hits.push_back({"d-1b1", {b, one, one_bar}});
        if (a == one_bar && x == one && b.value >= 2) hits.push_back({"d-1b1", {b, one_bar, one}});
        if (a == one && b == one_bar && x.value <= -2) hits.push_back({"d-11x", {one, x, one_bar}});
        if (a == one_bar && b == one && x.value <= -2) hits.push_back({"d-11x", {one_bar, x, one}});
        if (a == one_bar && b == one && x == one) hits.push_back({"d-111", {two, two_bar, one}});
        if (a == one && b == one_bar && x == one_bar) hits.push_back({"d-111", {two, two_bar, one_bar}});
        if (a == one && b == two && x == two_bar) hits.push_back({"d-122", {one, one, one_bar}});
        if (a == one_bar && b == two && x == two_bar) hits.push_back({"d-122", {one_bar, one_bar, one}});
    }
    return hits;
}

inline std::vector<Letter> letters_up_to(int m, LieType t) {
    std::vector<Letter> out;
    for (int i = m; i >= 1; --i) out.push_back(Letter::barred(i));
    if (t == LieType::B) out.push_back(Letter::zero());
    if (t != LieType::A)
        for (int i = 1; i <= m; ++i) out.push_back(Letter::unbarred(i));
    return out;
}

struct WindowHash {
    std::size_t operator()(const Window& w) const noexcept {
        return (static_cast<std::size_t>(w[0].value + 512) * 1031u + static_cast<std::size_t>(w[1].value + 512)) *
                   1031u +
               static_cast<std::size_t>(w[2].value + 512);
    }
};

struct Neighbor {
    Window out;
    const char* rule;
    bool forward;
};

/// All windows related to w by one relation, in either direction. Memoized
/// per type; safe for concurrent callers.
inline const std::vector<Neighbor>& window_neighbors(const Window& w, LieType t) {
    static std::mutex mtx;
    static std::unordered_map<Window, std::vector<Neighbor>, WindowHash> cache[4];
    std::lock_guard lock(mtx);
    auto& c = cache[static_cast<int>(t)];
    if (auto it = c.find(w); it != c.end()) return it->second;
    std::vector<Neighbor> out;
    for (auto& h : forward_rules(w, t)) out.push_back({h.out, h.rule, true});
    int m = std::max({w[0].index(), w[1].index(), w[2].index()}) + 1;
    auto alpha = letters_up_to(m, t);
    for (Letter p : alpha)
        for (Letter q : alpha)
            for (Letter r : alpha) {
                Window v{p, q, r};
                for (auto& h : forward_rules(v, t))
                    if (h.out == w) out.push_back({v, h.rule, false});
            }
    return c.emplace(w, std::move(out)).first->second;
}

}  // namespace detail

/// Every single application of a relation of the type, at every window and in
/// both directions, ordered by position then by resulting word.
inline std::vector<std::pair<RewriteStep, Word>> rewrites(const Word& w, LieType t) {
    require_legal(w, t);
    std::vector<std::pair<RewriteStep, Word>> out;
    for (std::size_t k = 0; k + 3 <= w.size(); ++k) {
        Window win{w[k], w[k + 1], w[k + 2]};
        for (const auto& nb : detail::window_neighbors(win, t)) {
            Word v = w;
            std::copy(nb.out.begin(), nb.out.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
            out.push_back({RewriteStep{k, win, nb.out, nb.rule, nb.forward}, std::move(v)});
        }
    }
    return out;
}

inline constexpr std::size_t default_class_budget = 200'000;

/// Closure of {w} under rewrites, returned sorted.
inline std::vector<Word> plactic_class(const Word& w, LieType t, std::size_t budget = default_class_budget) {
    require_legal(w, t);
    std::unordered_set<Word, WordHash> seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
        Word u = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k + 3 <= u.size(); ++k) {
            Window win{u[k], u[k + 1], u[k + 2]};
            for (const auto& nb : detail::window_neighbors(win, t)) {
                Word v = u;
                std::copy(nb.out.begin(), nb.out.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
                if (seen.insert(v).second) {
                    if (seen.size() > budget)
                        throw budget_exhausted("plactic class of '" + to_string(w) + "' exceeded its budget");
                    queue.push_back(std::move(v));
                }
            }
        }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline bool congruent(const Word& w1, const Word& w2, LieType t, std::size_t budget = default_class_budget) {
    require_legal(w1, t);
    require_legal(w2, t);
    if (w1.size() != w2.size()) return false;
    if (w1 == w2) return true;
    auto cls = plactic_class(w1, t, budget);
    return std::binary_search(cls.begin(), cls.end(), w2);
}

}  // namespace infcrystal
