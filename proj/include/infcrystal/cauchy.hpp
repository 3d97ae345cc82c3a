/**
 * @file cauchy.hpp
 * @brief The quotient monomial algebra on the x-variables, congruence of
 * x-monomials by bidirectional closure, and checks of the Cauchy-type
 * identities: term by term through RS for types B, C, D and as a truncated
 * commutative power series for type A.
 *
 * Relations on x-monomials:
 *   x_{i-bar} x_i = x_{i+1} x_{(i+1)-bar}   (i >= 1)
 *   x_{i'} x_i = x_i x_{i'}                 (i' != -i)
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partition.hpp"
#include "rs.hpp"
#include "schur_lr.hpp"
#include "tableau.hpp"
#include "word_crystal.hpp"

namespace infcrystal {

struct XMonomial {
    LieType type = LieType::C;
    Word word;
};

/// Multiset of y-indices, stored as index -> multiplicity.
using YMonomial = std::map<int, int>;

inline XMonomial x_of_word(const Word& w, LieType t) {
    require_legal(w, t);
    return XMonomial{t, w};
}

/// tau_p copies of p for the p-th row (p from 1).
inline YMonomial y_of_rows(const Biword& b) {
    YMonomial y;
    for (std::size_t p = 0; p < b.rows.size(); ++p)
        if (!b.rows[p].empty()) y[static_cast<int>(p) + 1] += static_cast<int>(b.rows[p].size());
    return y;
}

inline YMonomial content(const RecordingTableau& q) {
    YMonomial y;
    for (const auto& r : q.rows)
        for (int v : r) ++y[v];
    return y;
}

struct AlgebraCaps {
    int margin = 2;
    std::size_t budget = 2'000'000;  // total closure size over both sides
};

/// The relation closure of one side could not be completed within the caps.
struct indeterminate : budget_exhausted {
    using budget_exhausted::budget_exhausted;
};

namespace detail {

inline bool x_commute(Letter a, Letter b) { return a.value != -b.value || a.is_zero(); }

/// Words related to w by one relation application, with every index <= cap.
/// Sets blocked when a move was suppressed by the cap.
inline std::vector<Word> x_moves(const Word& w, int cap, bool& blocked) {
    std::vector<Word> out;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        Letter a = w[k], b = w[k + 1];
        if (a == b) continue;
        if (x_commute(a, b)) {
            Word v = w;
            std::swap(v[k], v[k + 1]);
            out.push_back(std::move(v));
            continue;
        }
        if (a.is_barred() && b == a.bar()) {
            int i = b.index();
            if (i + 1 > cap) {
                blocked = true;
                continue;
            }
            Word v = w;
            v[k] = Letter::unbarred(i + 1);
            v[k + 1] = Letter::barred(i + 1);
            out.push_back(std::move(v));
        } else if (a.is_unbarred() && a.index() >= 2 && b == a.bar()) {
            Word v = w;
            v[k] = Letter::barred(a.index() - 1);
            v[k + 1] = Letter::unbarred(a.index() - 1);
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// Image in the bicyclic monoid <p, q | p q = 1> under x_{1-bar} -> p,
/// x_1 -> q and every other variable -> 1, as the normal form q^a p^b.
/// The relations hold there, so different images certify inequality.
inline std::pair<int, int> bicyclic_image(const Word& w) {
    int a = 0, b = 0;
    for (Letter x : w) {
        if (x.value == -1) ++b;
        else if (x.value == 1) {
            if (b > 0) --b;
            else ++a;
        }
    }
    return {a, b};
}

struct Closure {
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> frontier;
    bool blocked = false;
};

}  // namespace detail

inline int algebra_cap(const Word& w1, const Word& w2, const AlgebraCaps& caps) {
    int deg = static_cast<int>(std::max(w1.size(), w2.size()));
    return std::max(max_index(w1), max_index(w2)) + deg * deg / 4 + caps.margin;
}

/// True iff the two monomials are equal in the quotient algebra. False when
/// the closures are exhausted without meeting, or when weight or bicyclic
/// image differ. Throws indeterminate when the closures stay disjoint but
/// were cut short by the index cap or the budget.
inline bool algebra_equal(const XMonomial& m1, const XMonomial& m2, AlgebraCaps caps = {}) {
    if (m1.type != m2.type) throw input_error("algebra_equal: monomials of different types");
    require_legal(m1.word, m1.type);
    require_legal(m2.word, m2.type);
    if (m1.word.size() != m2.word.size()) return false;
    if (m1.word == m2.word) return true;
    if (!(weight(m1.word) == weight(m2.word))) return false;
    const int cap = algebra_cap(m1.word, m2.word, caps);
    detail::Closure side[2];
    side[0].seen.insert(m1.word);
    side[0].frontier.push_back(m1.word);
    side[1].seen.insert(m2.word);
    side[1].frontier.push_back(m2.word);
    while (!side[0].frontier.empty() || !side[1].frontier.empty()) {
        int s = side[0].frontier.empty()                             ? 1
                : side[1].frontier.empty()                           ? 0
                : side[0].frontier.size() <= side[1].frontier.size() ? 0
                                                                     : 1;
        auto& me = side[s];
        auto& other = side[1 - s];
        std::vector<Word> next;
        for (const auto& w : me.frontier)
            for (auto& v : detail::x_moves(w, cap, me.blocked)) {
                if (other.seen.count(v)) return true;
                if (me.seen.insert(v).second) next.push_back(std::move(v));
            }
        me.frontier = std::move(next);
        if (side[0].seen.size() + side[1].seen.size() > caps.budget) break;
    }
    if (!side[0].blocked && !side[1].blocked && side[0].frontier.empty() && side[1].frontier.empty()) return false;
    if (detail::bicyclic_image(m1.word) != detail::bicyclic_image(m2.word)) return false;
    throw indeterminate("algebra_equal: closures disjoint within index cap " + std::to_string(cap) +
                        " and the step budget, no invariant separates them");
}

/// Every monomial equal to m whose indices stay under the cap, sorted.
inline std::vector<Word> algebra_class(const XMonomial& m, AlgebraCaps caps = {}) {
    require_legal(m.word, m.type);
    const int cap = algebra_cap(m.word, m.word, caps);
    std::unordered_set<Word, WordHash> seen{m.word};
    std::vector<Word> frontier{m.word};
    bool blocked = false;
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (auto& v : detail::x_moves(w, cap, blocked))
                if (seen.insert(v).second) next.push_back(std::move(v));
        if (seen.size() > caps.budget) throw indeterminate("algebra_class: closure budget exhausted");
        frontier = std::move(next);
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](Letter x, Letter y) { return x.value > y.value; });
    });
    return out;
}

/// "x2 x-2 x-2": the closure element that is lexicographically least when
/// letters are ordered n > ... > 1 > 0 > 1-bar > ... (largest letters first).
inline std::string canonical_string(const XMonomial& m, AlgebraCaps caps = {}) {
    if (m.word.empty()) return "1";
    auto cls = algebra_class(m, caps);
    std::string s;
    for (Letter x : cls.front()) {
        if (!s.empty()) s += ' ';
        s += "x" + std::to_string(x.value);
    }
    return s;
}

/// x^{w_x} = x^{w(P)} in the algebra and y^{w_y} = y^{w(Q)}, for (P, Q) = rs(b).
inline bool cauchy_biword_check(const Biword& b, AlgebraCaps caps = {}) {
    auto pq = rs(b);
    bool x_ok = algebra_equal(x_of_word(b.concatenation(), b.type), x_of_word(reading(pq.P), b.type), caps);
    return x_ok && y_of_rows(b) == content(pq.Q);
}

// ---------------------------------------------------------------------------
// Type A as a commutative power series

namespace detail {

/// Monomials in x_1..x_M, y_1..y_k as one exponent vector (x first).
inline void expand_kernel(int M, int k, int D, std::size_t cell, Monomial& m, int deg, Polynomial& out) {
    if (cell == static_cast<std::size_t>(M * k)) {
        add_term(out, m, 1);
        return;
    }
    int i = static_cast<int>(cell) / k, j = static_cast<int>(cell) % k;
    for (int a = 0; deg + a <= D; ++a) {
        m[i] += a;
        m[M + j] += a;
        expand_kernel(M, k, D, cell + 1, m, deg + a, out);
        m[i] -= a;
        m[M + j] -= a;
    }
}

}  // namespace detail

struct CauchyASides {
    Polynomial kernel;
    Polynomial schur_sum;
};

/// Both sides of the type A identity over x_1..x_M, y_1..y_k, up to degree D.
inline CauchyASides cauchy_truncated_A_sides(int M, int k, int D) {
    if (M < 0 || k < 0 || D < 0) throw input_error("cauchy_truncated_A: negative argument");
    CauchyASides s;
    Monomial m(static_cast<std::size_t>(M + k), 0);
    detail::expand_kernel(M, k, D, 0, m, 0, s.kernel);
    for (int d = 0; d <= D; ++d)
        for (const auto& lambda : partitions_of(d)) {
            if (lambda.length() > M || lambda.length() > k) continue;
            Polynomial sx;
            if (d == 0) {
                add_term(sx, Monomial(static_cast<std::size_t>(M + k), 0), 1);
            } else {
                for (const auto& w : enumerate_component(highest_reading(M, lambda, LieType::A), M, LieType::A)) {
                    Monomial x(static_cast<std::size_t>(M + k), 0);
                    for (Letter l : w) ++x[static_cast<std::size_t>(l.index() - 1)];
                    add_term(sx, x, 1);
                }
            }
            Polynomial sy;
            for (const auto& [ym, c] : schur_poly(lambda, k)) {
                Monomial y(static_cast<std::size_t>(M + k), 0);
                for (int j = 0; j < k; ++j) y[static_cast<std::size_t>(M + j)] = ym[static_cast<std::size_t>(j)];
                add_term(sy, y, c);
            }
            for (const auto& [mono, c] : multiply(sx, sy)) add_term(s.schur_sum, mono, c);
        }
    return s;
}

inline bool cauchy_truncated_A(int M, int k, int D) {
    auto s = cauchy_truncated_A_sides(M, k, D);
    return s.kernel == s.schur_sum;
}

}  // namespace infcrystal
