/**
 * @file tableau.hpp
 * @brief Kashiwara-Nakashima tableaux of the infinite types, columns, rows and
 * the crystal-membership oracles that decide their validity.
 *
 * Validity is never decided by local filling rules: a filling of Y(lambda) is
 * a tableau iff its reading lies in the crystal component of the highest
 * tableau T_{n,lambda} (row k filled with the letter (n-k+1)-bar).
 */
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partition.hpp"
#include "word_crystal.hpp"

namespace infcrystal {

struct Tableau {
    LieType type = LieType::C;
    std::vector<Word> rows;  // rows[k] is row k+1, left to right

    Partition shape() const {
        std::vector<int> p;
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }
    int size() const {
        int n = 0;
        for (const auto& r : rows) n += static_cast<int>(r.size());
        return n;
    }
    std::vector<Letter> column(std::size_t j) const {
        std::vector<Letter> c;
        for (const auto& r : rows)
            if (j < r.size()) c.push_back(r[j]);
        return c;
    }
    friend bool operator==(const Tableau&, const Tableau&) = default;
};

inline Tableau column_tableau(LieType t, const Word& cells) {
    Tableau T{t, {}};
    for (Letter x : cells) T.rows.push_back({x});
    return T;
}

inline Tableau row_tableau(LieType t, const Word& cells) {
    Tableau T{t, {}};
    if (!cells.empty()) T.rows.push_back(cells);
    return T;
}

/// Column reading: columns from right to left, each read top to bottom. A
/// row reads right to left, a column top to bottom.
inline Word reading(const Tableau& T) {
    Word w;
    if (T.rows.empty()) return w;
    for (std::size_t j = T.rows[0].size(); j-- > 0;)
        for (const auto& r : T.rows) {
            if (j >= r.size()) break;
            w.push_back(r[j]);
        }
    return w;
}

/// Inverse of reading for a known shape.
inline Tableau from_reading(LieType t, const Word& w, const Partition& shape) {
    if (static_cast<int>(w.size()) != shape.size())
        throw input_error("from_reading: word length does not match the shape");
    Tableau T{t, {}};
    for (int len : shape.parts) T.rows.emplace_back(static_cast<std::size_t>(len));
    auto conj = shape.conjugate();
    std::size_t pos = 0;
    for (int j = shape.empty() ? -1 : shape.parts[0] - 1; j >= 0; --j)
        for (int i = 0; i < conj.parts[static_cast<std::size_t>(j)]; ++i) T.rows[i][j] = w[pos++];
    return T;
}

/// T_{n,lambda}: row k holds only the letter (n-k+1)-bar.
inline Tableau highest_tableau(int n, const Partition& lambda, LieType t) {
    if (lambda.length() > n) throw input_error("highest_tableau: rank " + std::to_string(n) +
                                               " is smaller than the number of rows of " + to_string(lambda));
    Tableau T{t, {}};
    for (int k = 0; k < lambda.length(); ++k) T.rows.emplace_back(lambda.parts[k], Letter::barred(n - k));
    return T;
}

inline Word highest_reading(int n, const Partition& lambda, LieType t) {
    return reading(highest_tableau(n, lambda, t));
}

// ---------------------------------------------------------------------------
// Columns

/// Adjacent cells (top x, bottom y) allowed inside a column: strictly
/// increasing, except runs of 0 (type B) and alternating 1 / 1-bar (type D).
inline bool column_adjacent_ok(Letter x, Letter y, LieType t) {
    if (t == LieType::B && x.is_zero() && y.is_zero()) return true;
    auto o = compare_letters(x, y, t);
    if (o == Order::Less) return true;
    return o == Order::Incomparable;  // D: {1, 1-bar} in either order
}

/// Shape predicate for columns (blocks of barred, zero and unbarred letters).
inline bool is_column_word(const Word& cells, LieType t) {
    for (Letter x : cells)
        if (!is_legal(x, t)) return false;
    for (std::size_t k = 1; k < cells.size(); ++k)
        if (!column_adjacent_ok(cells[k - 1], cells[k], t)) return false;
    return true;
}

/// True iff the column reading lies in the rank-n component of the highest
/// column (n-bar, ..., (n-h+1)-bar).
inline bool is_admissible_column(const Word& cells, int n, LieType t) {
    if (!is_column_word(cells, t)) return false;
    if (max_index(cells) > n) throw input_error("is_admissible_column: letter index exceeds the rank");
    Partition column_shape(std::vector<int>(cells.size(), 1));
    if (column_shape.length() > n) return false;
    if (cells.empty()) return true;
    auto r = raise_to_highest(cells, n, t);
    return r.highest == highest_reading(n, column_shape, t);
}

// ---------------------------------------------------------------------------
// Membership oracles

/// Checks that the filling's reading raises (at the stabilized rank) to the
/// reading of the highest tableau of the same shape.
inline bool is_tableau(const Tableau& T) {
    for (std::size_t k = 1; k < T.rows.size(); ++k)
        if (T.rows[k].size() > T.rows[k - 1].size()) return false;
    for (const auto& r : T.rows) {
        if (r.empty()) return false;
        for (Letter x : r)
            if (!is_legal(x, T.type)) return false;
    }
    Word w = reading(T);
    if (w.empty()) return true;
    for (std::size_t j = 0; j < T.rows[0].size(); ++j)
        if (!is_column_word(T.column(j), T.type)) return false;
    auto comp = stable_component(w, T.type);
    if (comp.shape != T.shape()) return false;
    return comp.raised.highest == highest_reading(comp.rank, comp.shape, T.type);
}

/// True iff w is the (decreasing) reading of a vertex of the row crystal B(k).
inline bool is_row(const Word& w, LieType t) {
    for (Letter x : w)
        if (!is_legal(x, t)) return false;
    if (w.empty()) return true;
    auto comp = stable_component(w, t);
    Partition row{static_cast<int>(w.size())};
    if (comp.shape != row) return false;
    return comp.raised.highest == highest_reading(comp.rank, row, t);
}

inline std::string to_string(const Tableau& T) {
    std::string s = "[";
    for (std::size_t k = 0; k < T.rows.size(); ++k) {
        if (k) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < T.rows[k].size(); ++j) {
            if (j) s += ',';
            s += to_string(T.rows[k][j]);
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace infcrystal
