/**
 * @file rs.hpp
 * @brief Infinite-rank insertion (P) and recording (Q) symbols, the RS
 * bijections on biwords and on column sequences, and the recording-side
 * type A crystal giving the bi-crystal structure.
 *
 * P is read off the crystal: a word sits at the same place in its component
 * as its P-symbol does in the component of the highest tableau. Q records
 * how the component shape grows along the rows of a biword.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partition.hpp"
#include "tableau.hpp"
#include "word_crystal.hpp"

namespace infcrystal {

/// Vertex of B(tau_1) (x) ... (x) B(tau_k); rows[p] is the (decreasing)
/// reading of the p-th row. Interior rows may be empty, the last may not.
struct Biword {
    LieType type = LieType::C;
    std::vector<Word> rows;

    Word concatenation() const {
        Word w;
        for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
        return w;
    }
    friend bool operator==(const Biword&, const Biword&) = default;
};

/// Vertex of B(1^{tau_1}) (x) ... (x) B(1^{tau_k}); columns[p] lists the
/// cells top to bottom.
struct ColumnSeq {
    LieType type = LieType::C;
    std::vector<Word> columns;

    Word concatenation() const {
        Word w;
        for (const auto& c : columns) w.insert(w.end(), c.begin(), c.end());
        return w;
    }
    friend bool operator==(const ColumnSeq&, const ColumnSeq&) = default;
};

/// Filling of a Young diagram by positive integers.
struct RecordingTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        std::vector<int> p;
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }
    int size() const { return shape().size(); }
    int max_entry() const {
        int m = 0;
        for (const auto& r : rows)
            for (int v : r) m = std::max(m, v);
        return m;
    }
    friend bool operator==(const RecordingTableau&, const RecordingTableau&) = default;
};

inline bool is_semistandard(const RecordingTableau& t) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].empty()) return false;
        if (i && t.rows[i].size() > t.rows[i - 1].size()) return false;
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (t.rows[i][j] < 1) return false;
            if (j && t.rows[i][j] < t.rows[i][j - 1]) return false;
            if (i && t.rows[i][j] <= t.rows[i - 1][j]) return false;
        }
    }
    return true;
}

inline RecordingTableau transpose(const RecordingTableau& t) {
    RecordingTableau out;
    if (t.rows.empty()) return out;
    out.rows.resize(t.rows[0].size());
    for (const auto& r : t.rows)
        for (std::size_t j = 0; j < r.size(); ++j) out.rows[j].push_back(r[j]);
    return out;
}

inline std::string to_string(const RecordingTableau& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(t.rows[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// P-symbol

/// P-symbol computed at a fixed rank n; nullopt when n is too small for the
/// component of w to have its infinite-rank shape.
inline std::optional<Tableau> p_symbol_at_rank(const Word& w, int n, LieType t) {
    if (w.empty()) return Tableau{t, {}};
    auto comp = component_at_rank(w, n, t);
    if (!comp) return std::nullopt;
    Word top = highest_reading(n, comp->shape, t);
    if (weight(top) != weight(comp->raised.highest))
        throw property_violation("p_symbol: highest weight of '" + to_string(w) + "' is not that of the highest tableau");
    auto low = lower_along(top, comp->raised.path, t);
    if (!low) throw property_violation("p_symbol: raising path of '" + to_string(w) + "' does not lower the highest tableau");
    return from_reading(t, *low, comp->shape);
}

inline Tableau p_symbol(const Word& w, LieType t, RankPolicy policy = {}) {
    require_legal(w, t);
    if (w.empty()) return Tableau{t, {}};
    auto comp = stable_component(w, t, policy);
    return *p_symbol_at_rank(w, comp.rank, t);
}

// ---------------------------------------------------------------------------
// Recording tableaux

namespace detail {

/// Fills the boxes of outer / inner with value v.
inline void fill_strip(RecordingTableau& q, const Partition& inner, const Partition& outer, int v) {
    q.rows.resize(static_cast<std::size_t>(outer.length()));
    for (int i = 0; i < outer.length(); ++i)
        for (int j = inner[i]; j < outer[i]; ++j) q.rows[i].push_back(v);
}

inline void validate_rows(const Biword& b) {
    if (!b.rows.empty() && b.rows.back().empty()) throw input_error("biword: the last row is empty");
    for (const auto& r : b.rows)
        if (!is_row(r, b.type)) throw input_error("biword: '" + to_string(r) + "' is not a row of type " +
                                                  std::string(1, type_char(b.type)));
}

inline void validate_columns(const ColumnSeq& c) {
    if (!c.columns.empty() && c.columns.back().empty()) throw input_error("column sequence: the last column is empty");
    for (const auto& col : c.columns) {
        if (col.empty()) continue;
        if (!is_column_word(col, c.type) || !is_tableau(column_tableau(c.type, col)))
            throw input_error("column sequence: '" + to_string(col) + "' is not a column of type " +
                              std::string(1, type_char(c.type)));
    }
}

/// Shapes of the P-symbols of the growing prefixes of a segmented word.
inline std::vector<Partition> prefix_shapes(const std::vector<Word>& segments, LieType t) {
    std::vector<Partition> shapes{Partition{}};
    Word prefix;
    for (const auto& s : segments) {
        prefix.insert(prefix.end(), s.begin(), s.end());
        shapes.push_back(component_shape(prefix, t));
    }
    return shapes;
}

}  // namespace detail

/// Q-symbol: strip p of the growing P-shapes is filled with p. Every strip
/// must be horizontal.
inline RecordingTableau q_symbol(const Biword& b) {
    detail::validate_rows(b);
    auto shapes = detail::prefix_shapes(b.rows, b.type);
    RecordingTableau q;
    for (std::size_t p = 1; p < shapes.size(); ++p) {
        if (!shapes[p].contains(shapes[p - 1]) || !is_horizontal_strip(shapes[p - 1], shapes[p]))
            throw property_violation("q_symbol: " + to_string(shapes[p]) + " / " + to_string(shapes[p - 1]) +
                                     " is not a horizontal strip");
        detail::fill_strip(q, shapes[p - 1], shapes[p], static_cast<int>(p));
    }
    return q;
}

struct RSPair {
    Tableau P;
    RecordingTableau Q;
    friend bool operator==(const RSPair&, const RSPair&) = default;
};

inline RSPair rs(const Biword& b) {
    auto q = q_symbol(b);
    return {p_symbol(b.concatenation(), b.type), std::move(q)};
}

/// Highest vertex of the component of the biwords with Q-symbol t at rank n:
/// row p holds (n-i+1)-bar for each box of strip p lying in row i.
inline Biword hw_for_recording(const RecordingTableau& t, int n, LieType type) {
    if (!is_semistandard(t)) throw input_error("hw_for_recording: recording tableau is not semistandard");
    if (static_cast<int>(t.rows.size()) > n) throw input_error("hw_for_recording: rank too small");
    Biword b{type, std::vector<Word>(static_cast<std::size_t>(t.max_entry()))};
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (int v : t.rows[i]) b.rows[static_cast<std::size_t>(v - 1)].push_back(Letter::barred(n - static_cast<int>(i)));
    for (auto& r : b.rows) std::sort(r.begin(), r.end(), [](Letter x, Letter y) { return x.value > y.value; });
    return b;
}

namespace detail {

/// Lowers the segmented highest vertex `hw` along the raising path of
/// reading(P) at rank n, keeping the segment lengths.
inline std::vector<Word> lower_segments(const std::vector<Word>& hw, const Tableau& P, int n) {
    Word top;
    for (const auto& s : hw) top.insert(top.end(), s.begin(), s.end());
    if (!is_highest(top, n, P.type)) throw property_violation("recording highest vertex is not highest");
    auto r = raise_to_highest(reading(P), n, P.type);
    if (weight(r.highest) != weight(top))
        throw property_violation("insertion and recording highest weights disagree");
    auto low = lower_along(top, r.path, P.type);
    if (!low) throw property_violation("raising path of P does not lower the recording highest vertex");
    std::vector<Word> out;
    std::size_t pos = 0;
    for (const auto& s : hw) {
        out.emplace_back(low->begin() + static_cast<std::ptrdiff_t>(pos),
                         low->begin() + static_cast<std::ptrdiff_t>(pos + s.size()));
        pos += s.size();
    }
    return out;
}

inline int inverse_rank(const Tableau& P) {
    Word w = reading(P);
    if (w.empty()) return 1;
    return stable_component(w, P.type).rank;
}

}  // namespace detail

inline Biword rs_inverse(const Tableau& P, const RecordingTableau& Q) {
    if (!is_semistandard(Q)) throw input_error("rs_inverse: Q is not semistandard");
    if (P.shape() != Q.shape()) throw input_error("rs_inverse: P and Q have different shapes");
    if (!is_tableau(P)) throw input_error("rs_inverse: P is not a tableau");
    if (Q.rows.empty()) return Biword{P.type, {}};
    int n = detail::inverse_rank(P);
    auto hw = hw_for_recording(Q, n, P.type);
    return Biword{P.type, detail::lower_segments(hw.rows, P, n)};
}

// ---------------------------------------------------------------------------
// Column sequences

/// P-hat and Q-hat: the strips of the growing shapes must be vertical; Q-hat
/// is stored on the conjugate shape, where those strips become horizontal.
inline RSPair rs_hat(const ColumnSeq& c) {
    detail::validate_columns(c);
    auto shapes = detail::prefix_shapes(c.columns, c.type);
    RecordingTableau q;
    for (std::size_t p = 1; p < shapes.size(); ++p) {
        if (!shapes[p].contains(shapes[p - 1]) || !is_vertical_strip(shapes[p - 1], shapes[p]))
            throw property_violation("rs_hat: " + to_string(shapes[p]) + " / " + to_string(shapes[p - 1]) +
                                     " is not a vertical strip");
        detail::fill_strip(q, shapes[p - 1].conjugate(), shapes[p].conjugate(), static_cast<int>(p));
    }
    return {p_symbol(c.concatenation(), c.type), std::move(q)};
}

/// Highest column sequence with conjugate recording tableau t at rank n:
/// column p holds (n-i+1)-bar for each row i of the original shape meeting
/// strip p, increasing from top to bottom.
inline ColumnSeq hw_for_recording_hat(const RecordingTableau& t, int n, LieType type) {
    if (!is_semistandard(t)) throw input_error("hw_for_recording_hat: recording tableau is not semistandard");
    if (!t.rows.empty() && static_cast<int>(t.rows[0].size()) > n)
        throw input_error("hw_for_recording_hat: rank too small");
    ColumnSeq c{type, std::vector<Word>(static_cast<std::size_t>(t.max_entry()))};
    // Row j of t is column j of the original shape; its box in position i lies
    // in original row i.
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            c.columns[static_cast<std::size_t>(r[i] - 1)].push_back(Letter::barred(n - static_cast<int>(i)));
    for (auto& col : c.columns) std::sort(col.begin(), col.end());
    return c;
}

inline ColumnSeq rs_hat_inverse(const Tableau& P, const RecordingTableau& Qhat) {
    if (!is_semistandard(Qhat)) throw input_error("rs_hat_inverse: Q is not semistandard");
    if (P.shape().conjugate() != Qhat.shape())
        throw input_error("rs_hat_inverse: Q is not on the conjugate shape of P");
    if (!is_tableau(P)) throw input_error("rs_hat_inverse: P is not a tableau");
    if (Qhat.rows.empty()) return ColumnSeq{P.type, {}};
    int n = detail::inverse_rank(P);
    auto hw = hw_for_recording_hat(Qhat, n, P.type);
    return ColumnSeq{P.type, detail::lower_segments(hw.columns, P, n)};
}

// ---------------------------------------------------------------------------
// Recording-side crystal

namespace detail {

/// Type A signature rule on the reading of t for the edge j -> j+1 (the
/// letter j carries "+", the letter j+1 carries "-").
inline std::optional<RecordingTableau> y_op(const RecordingTableau& t, int j, bool lower) {
    if (j < 1) throw input_error("recording crystal colors start at 1");
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // reading order
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t k = t.rows[i].size(); k-- > 0;) cells.emplace_back(i, k);
    std::vector<std::size_t> plus;
    std::optional<std::size_t> last_minus;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        int v = t.rows[cells[c].first][cells[c].second];
        if (v == j + 1) {
            if (!plus.empty()) plus.pop_back();
            else last_minus = c;
        } else if (v == j) {
            plus.push_back(c);
        }
    }
    RecordingTableau out = t;
    if (lower) {
        if (plus.empty()) return std::nullopt;
        auto [i, k] = cells[plus.front()];
        out.rows[i][k] = j + 1;
    } else {
        if (!last_minus) return std::nullopt;
        auto [i, k] = cells[*last_minus];
        out.rows[i][k] = j;
    }
    return out;
}

}  // namespace detail

inline std::optional<RecordingTableau> y_f_op(const RecordingTableau& t, int j) { return detail::y_op(t, j, true); }
inline std::optional<RecordingTableau> y_e_op(const RecordingTableau& t, int j) { return detail::y_op(t, j, false); }

/// RS^{-1}(P, f_j(Q)) (lower) or RS^{-1}(P, e_j(Q)) for an already computed pair.
inline std::optional<Biword> bicrystal_op(const RSPair& pq, int j, bool lower) {
    auto q = lower ? y_f_op(pq.Q, j) : y_e_op(pq.Q, j);
    if (!q) return std::nullopt;
    return rs_inverse(pq.P, *q);
}

/// K_j(b) = RS^{-1}(P(b), f_j(Q(b))).
inline std::optional<Biword> bicrystal_K(const Biword& b, int j) { return bicrystal_op(rs(b), j, true); }

/// E_j(b) = RS^{-1}(P(b), e_j(Q(b))).
inline std::optional<Biword> bicrystal_E(const Biword& b, int j) { return bicrystal_op(rs(b), j, false); }

/// Kashiwara operator of the letter side acting on the concatenated rows.
inline std::optional<Biword> x_f_op(const Biword& b, Color i) {
    auto w = f_op(b.concatenation(), i, b.type);
    if (!w) return std::nullopt;
    Biword out{b.type, {}};
    std::size_t pos = 0;
    for (const auto& r : b.rows) {
        out.rows.emplace_back(w->begin() + static_cast<std::ptrdiff_t>(pos),
                              w->begin() + static_cast<std::ptrdiff_t>(pos + r.size()));
        pos += r.size();
    }
    return out;
}

}  // namespace infcrystal
