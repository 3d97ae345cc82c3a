/**
 * @file schur_lr.hpp
 * @brief Tensor product decompositions by highest-vertex counting, the
 * classical Littlewood-Richardson rule, standard tableau counts, Schur
 * polynomials and plactic Schur products.
 */
#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partition.hpp"
#include "rs.hpp"
#include "tableau.hpp"
#include "word_crystal.hpp"

namespace infcrystal {

using DecompositionMultiset = std::map<Partition, long>;

inline std::string to_string(const DecompositionMultiset& d) {
    std::string s = "{";
    bool first = true;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        if (!first) s += ", ";
        first = false;
        s += to_string(it->first) + ":" + std::to_string(it->second);
    }
    return s + "}";
}

/// Components of B(lambda) (x) B(mu) of infinite-rank type: the vertices
/// u (x) v with u the highest lambda reading and eps_i(v) <= phi_i(u), whose
/// weight has the form phi_n(nu) with |nu| = |lambda| + |mu|.
inline DecompositionMultiset tensor_decompose(const Partition& lambda, const Partition& mu, LieType t,
                                              std::size_t budget = default_component_budget) {
    const int total = lambda.size() + mu.size();
    const int n = std::max(1, total + lambda.length() + mu.length());
    Word u = highest_reading(n, lambda, t);
    auto colors = colors_below(n, t);
    std::vector<int> phi_u;
    for (Color i : colors) phi_u.push_back(phi(u, i, t));
    Weight wu = weight(u);
    DecompositionMultiset out;
    for (const auto& v : enumerate_component(highest_reading(n, mu, t), n, t, budget)) {
        bool ok = true;
        for (std::size_t k = 0; k < colors.size() && ok; ++k) ok = eps(v, colors[k], t) <= phi_u[k];
        if (!ok) continue;
        if (auto nu = partition_from_top_weight(wu + weight(v), n, total)) ++out[*nu];
    }
    return out;
}

/// Number of skew tableaux of shape nu / lambda and content mu whose reverse
/// reading word (rows top to bottom, each right to left) is a lattice word.
inline long lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lambda) || nu.size() != lambda.size() + mu.size()) return 0;
    // Cells of the skew shape in reverse reading order.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < nu.length(); ++i)
        for (int j = nu[i] - 1; j >= lambda[i]; --j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(nu.length()));
    for (int i = 0; i < nu.length(); ++i) fill[i].assign(static_cast<std::size_t>(nu[i]), 0);
    std::vector<int> used(static_cast<std::size_t>(mu.length()) + 1, 0);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 1; v <= mu.length(); ++v) {
            if (used[v] >= mu[static_cast<std::size_t>(v - 1)]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
            if (j + 1 < nu[i] && fill[i][j + 1] < v) continue;  // row weakly increasing
            if (i > 0 && j < nu[i - 1] && j >= lambda[i - 1] && fill[i - 1][j] >= v) continue;
            fill[i][j] = v;
            ++used[v];
            rec(k + 1);
            --used[v];
            fill[i][j] = 0;
        }
    };
    rec(0);
    return count;
}

/// Standard Young tableaux of shape lambda, by removing corners.
inline long count_syt(const Partition& lambda) {
    static std::map<Partition, long> memo;
    static std::mutex mtx;
    if (lambda.size() <= 1) return 1;
    {
        std::lock_guard lock(mtx);
        if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    }
    long total = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda[i] > lambda[i + 1]) {
            auto p = lambda.parts;
            if (--p[i] == 0) p.pop_back();
            total += count_syt(Partition(std::move(p)));
        }
    }
    std::lock_guard lock(mtx);
    memo.emplace(lambda, total);
    return total;
}

/// Hook length formula.
inline long hook_length_count(const Partition& lambda) {
    auto conj = lambda.conjugate();
    long num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return num / den;
}

// ---------------------------------------------------------------------------
// Commutative polynomials

using Monomial = std::vector<int>;  // exponent vector
using Polynomial = std::map<Monomial, long>;

inline void add_term(Polynomial& p, const Monomial& m, long c) {
    if (c == 0) return;
    long& v = p[m];
    v += c;
    if (v == 0) p.erase(m);
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            add_term(out, m, ca * cb);
        }
    return out;
}

inline std::string to_string(const Polynomial& p, char var = 'y') {
    if (p.empty()) return "0";
    std::string s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long a = c < 0 ? -c : c;
        bool constant = true;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            constant = false;
        }
        if (constant) s += std::to_string(a);
        else s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    }
    return s;
}

/// Semistandard tableaux of shape lambda with entries in 1..k, as fillings.
inline std::vector<RecordingTableau> semistandard_tableaux(const Partition& lambda, int k) {
    std::vector<RecordingTableau> out;
    RecordingTableau t;
    t.rows.resize(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i) t.rows[i].assign(static_cast<std::size_t>(lambda[i]), 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[c];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
        for (int v = lo; v <= k; ++v) {
            t.rows[i][j] = v;
            rec(c + 1);
        }
        t.rows[i][j] = 0;
    };
    rec(0);
    return out;
}

/// s_lambda(y_1, ..., y_k) as a sum over semistandard tableaux.
inline Polynomial schur_poly(const Partition& lambda, int k) {
    Polynomial p;
    for (const auto& t : semistandard_tableaux(lambda, k)) {
        Monomial m(static_cast<std::size_t>(k), 0);
        for (const auto& r : t.rows)
            for (int v : r) ++m[static_cast<std::size_t>(v - 1)];
        add_term(p, m, 1);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Plactic Schur products

struct ProductMultiplicity {
    long count = 0;
    long count_next = 0;  // same count with letter support cap + 1
    int cap = 0;
    bool stable() const { return count == count_next; }
};

namespace detail {

inline long product_count(const Tableau& T, const Partition& lambda, const Partition& mu, int cap) {
    LieType t = T.type;
    Weight target = weight(reading(T));
    auto left = lambda.length() <= cap ? enumerate_component(highest_reading(cap, lambda, t), cap, t)
                                       : std::vector<Word>{};
    auto right = mu.length() <= cap ? enumerate_component(highest_reading(cap, mu, t), cap, t) : std::vector<Word>{};
    std::map<std::map<int, long>, std::vector<const Word*>> by_weight;
    for (const auto& v : right) by_weight[weight(v).coords].push_back(&v);
    long count = 0;
    for (const auto& u : left) {
        auto it = by_weight.find((target - weight(u)).coords);
        if (it == by_weight.end()) continue;
        for (const Word* v : it->second) {
            Word w = u;
            w.insert(w.end(), v->begin(), v->end());
            if (p_symbol(w, t) == T) ++count;
        }
    }
    return count;
}

}  // namespace detail

/// Pairs (T', T'') from the rank-cap components of lambda and mu whose
/// product has P-symbol T. The default cap is max index of T + |lambda| + |mu|.
inline ProductMultiplicity plactic_product_multiplicity(const Tableau& T, const Partition& lambda,
                                                        const Partition& mu, int cap = 0) {
    if (T.size() != lambda.size() + mu.size())
        throw input_error("plactic_product_multiplicity: |T| differs from |lambda| + |mu|");
    if (!is_tableau(T)) throw input_error("plactic_product_multiplicity: T is not a tableau");
    if (cap <= 0) cap = std::max(1, max_index(reading(T)) + lambda.size() + mu.size());
    ProductMultiplicity m;
    m.cap = cap;
    m.count = detail::product_count(T, lambda, mu, cap);
    m.count_next = detail::product_count(T, lambda, mu, cap + 1);
    return m;
}

}  // namespace infcrystal
