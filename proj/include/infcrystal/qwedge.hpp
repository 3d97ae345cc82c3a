/**
 * @file qwedge.hpp
 * @brief Straightening of q-wedges v_{x_1} ^ ... ^ v_{x_p} onto the column
 * basis {v_C}, types B, C and D.
 *
 * An adjacent pair (x, y) is legal when it may occur in a column. Otherwise
 * one of the rewriting rules applies:
 *   x = y != 0                 -> 0
 *   x > y, x != y-bar          -> -q^k  (y, x)          k = 2 (B), 1 (C, D)
 *   (i, i-bar), i unbarred     -> type-specific expansion over (k-bar, k)
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "letters.hpp"
#include "tableau.hpp"

namespace infcrystal {

using WedgeExpr = std::map<Word, LaurentPoly>;

enum class StraightenStrategy { LeftmostFirst, RightmostFirst };

inline constexpr std::size_t default_straighten_budget = 100'000;

inline void add_term(WedgeExpr& e, const Word& key, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto& v = e[key];
    v += c;
    if (v.is_zero()) e.erase(key);
}

inline WedgeExpr wedge(const Word& cells) { return WedgeExpr{{cells, LaurentPoly(1)}}; }

inline WedgeExpr operator+(WedgeExpr a, const WedgeExpr& b) {
    for (const auto& [k, c] : b) add_term(a, k, c);
    return a;
}

inline WedgeExpr operator*(const LaurentPoly& c, const WedgeExpr& e) {
    WedgeExpr out;
    for (const auto& [k, v] : e) add_term(out, k, c * v);
    return out;
}

namespace detail {

/// Expansion of v_i ^ v_{i-bar} (i unbarred) as pairs (k-bar, k) with
/// coefficients.
inline std::vector<std::pair<std::pair<Letter, Letter>, LaurentPoly>> bar_pair_expansion(int i, LieType t) {
    using LP = LaurentPoly;
    std::vector<std::pair<std::pair<Letter, Letter>, LP>> out;
    auto pair_of = [](int k) { return std::make_pair(Letter::barred(k), Letter::unbarred(k)); };
    auto sign = [](int e) { return e % 2 == 0 ? 1L : -1L; };
    switch (t) {
        case LieType::B:
            out.push_back({pair_of(i), LP::monomial(-1, 4)});
            for (int k = 1; k <= i - 1; ++k)
                out.push_back({pair_of(k), (LP(1) - LP::q(4)) * LP::monomial(sign(i - k), 2 * (i - k))});
            out.push_back({{Letter::zero(), Letter::zero()}, LP::monomial(sign(i), 2 * i - 1)});
            break;
        case LieType::C:
            out.push_back({pair_of(i), LP::monomial(-1, 2)});
            for (int k = 1; k <= i - 1; ++k)
                out.push_back({pair_of(k), (LP(1) - LP::q(2)) * LP::monomial(sign(i - k), i - k)});
            break;
        case LieType::D: {
            out.push_back({pair_of(i), LP::monomial(-1, 2)});
            for (int k = 2; k <= i - 1; ++k)
                out.push_back({pair_of(k), (LP(1) - LP::q(2)) * LP::monomial(sign(i - k), i - k)});
            LP c = LP::monomial(sign(i - 1), i - 1);  // (-q)^{i-1}
            out.push_back({{Letter::unbarred(1), Letter::barred(1)}, c});
            out.push_back({{Letter::barred(1), Letter::unbarred(1)}, c});
            break;
        }
        case LieType::A: break;
    }
    return out;
}

/// Position of the violating adjacent pair chosen by the strategy, or -1.
inline std::ptrdiff_t find_violation(const Word& w, LieType t, StraightenStrategy s) {
    std::ptrdiff_t found = -1;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (column_adjacent_ok(w[k], w[k + 1], t)) continue;
        found = static_cast<std::ptrdiff_t>(k);
        if (s == StraightenStrategy::LeftmostFirst) break;
    }
    return found;
}

/// One rewriting step of the basis wedge w at position k.
inline WedgeExpr rewrite_at(const Word& w, std::size_t k, LieType t) {
    Letter x = w[k], y = w[k + 1];
    WedgeExpr out;
    if (x == y) return out;
    if (x != y.bar()) {
        Word v = w;
        std::swap(v[k], v[k + 1]);
        add_term(out, v, LaurentPoly::monomial(-1, t == LieType::B ? 2 : 1));
        return out;
    }
    for (const auto& [pr, c] : bar_pair_expansion(x.index(), t)) {
        Word v = w;
        v[k] = pr.first;
        v[k + 1] = pr.second;
        add_term(out, v, c);
    }
    return out;
}

}  // namespace detail

inline bool is_straight(const WedgeExpr& e, LieType t) {
    for (const auto& [k, c] : e)
        if (!is_column_word(k, t)) return false;
    return true;
}

/// Rewrites e until every key is the cell sequence of a column.
inline WedgeExpr straighten(const WedgeExpr& e, LieType t,
                            StraightenStrategy strategy = StraightenStrategy::LeftmostFirst,
                            std::size_t budget = default_straighten_budget) {
    if (t == LieType::A) throw input_error("straighten: q-wedge relations are defined for types b, c and d");
    std::size_t len = e.empty() ? 0 : e.begin()->first.size();
    for (const auto& [k, c] : e) {
        require_legal(k, t);
        if (k.size() != len) throw input_error("straighten: wedge terms of different lengths");
    }
    WedgeExpr done, todo = e;
    std::size_t steps = 0;
    while (!todo.empty()) {
        auto node = todo.extract(todo.begin());
        const Word& w = node.key();
        auto pos = detail::find_violation(w, t, strategy);
        if (pos < 0) {
            add_term(done, w, node.mapped());
            continue;
        }
        if (++steps > budget) throw budget_exhausted("straighten exceeded its step budget");
        for (const auto& [v, c] : detail::rewrite_at(w, static_cast<std::size_t>(pos), t))
            add_term(todo, v, node.mapped() * c);
    }
    return done;
}

inline bool wedge_equal(const WedgeExpr& a, const WedgeExpr& b, LieType t,
                        std::size_t budget = default_straighten_budget) {
    return straighten(a, t, StraightenStrategy::LeftmostFirst, budget) ==
           straighten(b, t, StraightenStrategy::LeftmostFirst, budget);
}

/// "(-1)q^4 * [-1 1] + (-1)q * [0 0]"; terms by key order, monomials by exponent.
inline std::string to_string(const WedgeExpr& e) {
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : e)
        for (auto [exp, coeff] : c.terms()) {
            if (!s.empty()) s += " + ";
            s += "(" + std::to_string(coeff) + ")";
            if (exp == 1) s += "q";
            else if (exp != 0) s += "q^" + std::to_string(exp);
            s += " * [" + to_string(k) + "]";
        }
    return s;
}

/// Parses the output of to_string, or a bare word "[x y]" / "x y" as a single wedge.
inline WedgeExpr parse_wedge(const std::string& text) {
    auto lb = text.find('[');
    if (lb == std::string::npos) return wedge(parse_word(text));
    WedgeExpr e;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto open = text.find('[', pos);
        if (open == std::string::npos) break;
        auto close = text.find(']', open);
        if (close == std::string::npos) throw input_error("wedge: unbalanced '['");
        std::string head = text.substr(pos, open - pos);
        Word key = parse_word(text.substr(open + 1, close - open - 1));
        long coeff = 1;
        int exp = 0;
        auto lp = head.find('('), rp = head.find(')');
        if (lp != std::string::npos && rp != std::string::npos && rp > lp) {
            try {
                coeff = std::stol(head.substr(lp + 1, rp - lp - 1));
            } catch (const std::exception&) {
                throw input_error("wedge: malformed coefficient in '" + head + "'");
            }
            auto qp = head.find('q', rp);
            if (qp != std::string::npos) {
                exp = 1;
                if (qp + 1 < head.size() && head[qp + 1] == '^') {
                    try {
                        exp = std::stoi(head.substr(qp + 2));
                    } catch (const std::exception&) {
                        throw input_error("wedge: malformed exponent in '" + head + "'");
                    }
                }
            }
        }
        add_term(e, key, LaurentPoly::monomial(coeff, exp));
        pos = close + 1;
    }
    return e;
}

}  // namespace infcrystal
