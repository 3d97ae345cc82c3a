/**
 * @file acceptance.hpp
 * @brief The acceptance suite: worked examples and exhaustive property runs
 * over the desk-scale corpora, one result line per criterion.
 */
#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cauchy.hpp"
#include "errors.hpp"
#include "letters.hpp"
#include "partition.hpp"
#include "plactic.hpp"
#include "qwedge.hpp"
#include "rs.hpp"
#include "schur_lr.hpp"
#include "tableau.hpp"
#include "word_crystal.hpp"

namespace infcrystal {

inline constexpr LieType bcd_types[] = {LieType::B, LieType::C, LieType::D};

// ---------------------------------------------------------------------------
// Corpora

/// Letters of the type with index <= m, in increasing order.
inline std::vector<Letter> alphabet(LieType t, int m) {
    std::vector<Letter> out;
    for (int i = m; i >= 1; --i) out.push_back(Letter::barred(i));
    if (t == LieType::B) out.push_back(Letter::zero());
    if (t != LieType::A)
        for (int i = 1; i <= m; ++i) out.push_back(Letter::unbarred(i));
    return out;
}

inline std::vector<Word> words_of_length(LieType t, int m, int len) {
    std::vector<Word> out{{}};
    auto alpha = alphabet(t, m);
    for (int k = 0; k < len; ++k) {
        std::vector<Word> next;
        next.reserve(out.size() * alpha.size());
        for (const auto& w : out)
            for (Letter x : alpha) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

namespace detail {

/// Sequences of at most max_parts segments, total length <= max_boxes, last
/// segment nonempty, each segment drawn from pieces[length].
inline void segment_sequences(const std::vector<std::vector<Word>>& pieces, int max_boxes, int max_parts,
                              std::vector<Word>& cur, const std::function<void(const std::vector<Word>&)>& emit) {
    if (!cur.empty() && !cur.back().empty()) emit(cur);
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int len = 0; len <= max_boxes; ++len) {
        if (len == 0 && max_boxes == 0) continue;
        for (const auto& p : pieces[static_cast<std::size_t>(len)]) {
            cur.push_back(p);
            segment_sequences(pieces, max_boxes - len, max_parts, cur, emit);
            cur.pop_back();
        }
    }
}

}  // namespace detail

/// Biwords with at most max_rows rows, total length <= max_boxes, letter
/// indices <= max_index. Interior rows may be empty.
inline std::vector<Biword> biword_corpus(LieType t, int max_boxes = 4, int max_index = 3, int max_rows = 4) {
    std::vector<std::vector<Word>> rows(static_cast<std::size_t>(max_boxes) + 1);
    rows[0].push_back({});
    for (int len = 1; len <= max_boxes; ++len)
        for (auto& w : words_of_length(t, max_index, len))
            if (is_row(w, t)) rows[static_cast<std::size_t>(len)].push_back(std::move(w));
    std::vector<Biword> out;
    std::vector<Word> cur;
    detail::segment_sequences(rows, max_boxes, max_rows, cur,
                              [&](const std::vector<Word>& r) { out.push_back(Biword{t, r}); });
    return out;
}

/// Column sequences with the same bounds, columns listed top to bottom.
inline std::vector<ColumnSeq> column_corpus(LieType t, int max_boxes = 4, int max_index = 3, int max_columns = 4) {
    std::vector<std::vector<Word>> cols(static_cast<std::size_t>(max_boxes) + 1);
    cols[0].push_back({});
    for (int len = 1; len <= max_boxes; ++len)
        for (auto& w : words_of_length(t, max_index, len))
            if (is_column_word(w, t) && is_tableau(column_tableau(t, w)))
                cols[static_cast<std::size_t>(len)].push_back(std::move(w));
    std::vector<ColumnSeq> out;
    std::vector<Word> cur;
    detail::segment_sequences(cols, max_boxes, max_columns, cur,
                              [&](const std::vector<Word>& c) { out.push_back(ColumnSeq{t, c}); });
    return out;
}

// ---------------------------------------------------------------------------
// Criteria

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ok = false;           // the property holds
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;

    bool pass() const { return ok && seconds <= limit_seconds; }
    std::string line() const {
        std::ostringstream s;
        s << (pass() ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << std::fixed;
        s.precision(2);
        s << seconds << " s, limit " << limit_seconds << " s)";
        if (!detail.empty()) s << ": " << detail;
        return s.str();
    }
};

namespace detail {

struct Tally {
    long checked = 0;
    long failed = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what();
    }
    std::string summary() const {
        std::string s = std::to_string(checked) + " checks, " + std::to_string(failed) + " failures";
        if (failed) s += "; first: " + first_failure;
        return s;
    }
};

inline std::string rows_string(const std::vector<Word>& rows) {
    std::string s;
    for (const auto& r : rows) s += "(" + to_string(r) + ")";
    return s;
}

template <class F>
CriterionResult timed(int id, std::string name, double limit, F body) {
    CriterionResult r{id, std::move(name), false, 0, limit, ""};
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace detail

inline CriterionResult criterion_rs_example() {
    return detail::timed(1, "RS example (1)(1-bar)(1)(1-bar) in types C and D", 1.0, [](CriterionResult& r) {
        Word one = parse_word("1"), one_bar = parse_word("-1");
        auto c = rs(Biword{LieType::C, {one, one_bar, one, one_bar}});
        auto d = rs(Biword{LieType::D, {one, one_bar, one, one_bar}});
        Tableau pc{LieType::C, {parse_word("-2 1"), parse_word("-1 2")}};
        RecordingTableau qc{{{1, 2}, {3, 4}}};
        Tableau pd = column_tableau(LieType::D, parse_word("1 -1 1 -1"));
        RecordingTableau qd{{{1}, {2}, {3}, {4}}};
        r.ok = c.P == pc && c.Q == qc && d.P == pd && d.Q == qd;
        r.detail = "C: P=" + to_string(c.P) + " Q=" + to_string(c.Q) + "; D: P=" + to_string(d.P) +
                   " Q=" + to_string(d.Q);
    });
}

inline CriterionResult criterion_admissible_example() {
    return detail::timed(2, "B-column (3-bar,1-bar,0,1,2) admissible at rank 5, not at rank 4", 1.0,
                         [](CriterionResult& r) {
                             Word col = parse_word("-3 -1 0 1 2");
                             bool at5 = is_admissible_column(col, 5, LieType::B);
                             bool at4 = is_admissible_column(col, 4, LieType::B);
                             r.ok = at5 && !at4;
                             r.detail = std::string("rank 5: ") + (at5 ? "admissible" : "not admissible") +
                                        ", rank 4: " + (at4 ? "admissible" : "not admissible");
                         });
}

inline CriterionResult criterion_rs_bijection() {
    return detail::timed(3, "RS and RS-hat bijections on the desk corpus", 120.0, [](CriterionResult& r) {
        detail::Tally tally;
        std::string sizes;
        for (LieType t : all_types) {
            auto biwords = biword_corpus(t);
            std::set<std::pair<std::vector<Word>, std::vector<std::vector<int>>>> images;
            for (const auto& b : biwords) {
                auto [P, Q] = rs(b);
                bool ok = P.shape() == Q.shape() && is_semistandard(Q) && is_tableau(P) &&
                          rs_inverse(P, Q) == b;
                images.insert({P.rows, Q.rows});
                tally.check(ok, [&] { return std::string(1, type_char(t)) + " rs " + detail::rows_string(b.rows); });
            }
            tally.check(images.size() == biwords.size(),
                        [&] { return std::string(1, type_char(t)) + " rs is not injective"; });
            auto columns = column_corpus(t);
            for (const auto& c : columns) {
                auto [P, Q] = rs_hat(c);
                bool ok = P.shape().conjugate() == Q.shape() && is_semistandard(Q) && is_tableau(P) &&
                          rs_hat_inverse(P, Q) == c;
                tally.check(ok,
                            [&] { return std::string(1, type_char(t)) + " rs_hat " + detail::rows_string(c.columns); });
            }
            sizes += std::string(sizes.empty() ? "" : ", ") + type_char(t) + ": " + std::to_string(biwords.size()) +
                     " biwords, " + std::to_string(columns.size()) + " column sequences";
        }
        r.ok = tally.failed == 0;
        r.detail = sizes + "; " + tally.summary();
    });
}

inline CriterionResult criterion_lr() {
    return detail::timed(4, "tensor products match Littlewood-Richardson for |lambda|+|mu| <= 5", 120.0,
                         [](CriterionResult& r) {
                             detail::Tally tally;
                             for (int total = 0; total <= 5; ++total)
                                 for (int a = 0; a <= total; ++a)
                                     for (const auto& lam : partitions_of(a))
                                         for (const auto& mu : partitions_of(total - a)) {
                                             DecompositionMultiset expected;
                                             for (const auto& nu : partitions_of(total))
                                                 if (long c = lr_oracle(lam, mu, nu)) expected[nu] = c;
                                             for (LieType t : all_types) {
                                                 auto got = tensor_decompose(lam, mu, t);
                                                 tally.check(got == expected, [&] {
                                                     return std::string(1, type_char(t)) + " " + to_string(lam) +
                                                            " x " + to_string(mu) + " = " + to_string(got);
                                                 });
                                             }
                                         }
                             for (LieType t : all_types) {
                                 DecompositionMultiset sq{{Partition{2}, 1}, {Partition{1, 1}, 1}};
                                 tally.check(tensor_decompose(Partition{1}, Partition{1}, t) == sq,
                                             [&] { return std::string(1, type_char(t)) + " (1) x (1)"; });
                             }
                             r.ok = tally.failed == 0;
                             r.detail = tally.summary();
                         });
}

inline CriterionResult criterion_word_crystal() {
    return detail::timed(5, "components of B(1)^l have multiplicities f^nu for l <= 4", 120.0,
                         [](CriterionResult& r) {
                             detail::Tally tally;
                             for (LieType t : all_types)
                                 for (int l = 1; l <= 4; ++l)
                                     for (int n : {l + 2, l + 3}) {
                                         std::map<Partition, long> mult;
                                         for (const auto& w : words_of_length(t, n, l)) {
                                             if (!is_highest(w, n, t)) continue;
                                             if (auto nu = partition_from_top_weight(weight(w), n, l)) ++mult[*nu];
                                         }
                                         for (const auto& nu : partitions_of(l))
                                             tally.check(mult[nu] == count_syt(nu), [&] {
                                                 return std::string(1, type_char(t)) + " rank " + std::to_string(n) +
                                                        " shape " + to_string(nu) + ": " + std::to_string(mult[nu]);
                                             });
                                     }
                             r.ok = tally.failed == 0;
                             r.detail = tally.summary();
                         });
}

inline CriterionResult criterion_plactic() {
    return detail::timed(
        6, "plactic classes have size f^shape and congruence matches P-symbols (length <= 5)", 180.0,
        [](CriterionResult& r) {
            detail::Tally tally;
            for (LieType t : all_types)
                for (int len = 1; len <= 5; ++len) {
                    auto words = words_of_length(t, 3, len);
                    std::map<Word, Tableau> psym;
                    std::map<Tableau, std::vector<Word>, std::function<bool(const Tableau&, const Tableau&)>> by_p(
                        [](const Tableau& a, const Tableau& b) { return a.rows < b.rows; });
                    for (const auto& w : words) {
                        auto P = p_symbol(w, t);
                        psym.emplace(w, P);
                        by_p[P].push_back(w);
                    }
                    std::set<Word> done;
                    for (const auto& w : words) {
                        if (done.count(w)) continue;
                        const Tableau& P = psym.at(w);
                        auto cls = plactic_class(w, t);
                        tally.check(static_cast<long>(cls.size()) == count_syt(P.shape()), [&] {
                            return std::string(1, type_char(t)) + " class of '" + to_string(w) + "' has " +
                                   std::to_string(cls.size()) + " words";
                        });
                        std::vector<Word> in_corpus;
                        for (const auto& v : cls)
                            if (max_index(v) <= 3) in_corpus.push_back(v);
                        auto same_p = by_p.at(P);
                        std::sort(same_p.begin(), same_p.end());
                        tally.check(in_corpus == same_p, [&] {
                            return std::string(1, type_char(t)) + " congruence of '" + to_string(w) +
                                   "' differs from P-symbol equality";
                        });
                        done.insert(in_corpus.begin(), in_corpus.end());
                    }
                }
            r.ok = tally.failed == 0;
            r.detail = tally.summary();
        });
}

inline CriterionResult criterion_bicrystal() {
    return detail::timed(7, "letter and recording crystal operators commute on the corpus", 120.0,
                         [](CriterionResult& r) {
                             detail::Tally tally;
                             for (LieType t : all_types)
                                 for (const auto& b : biword_corpus(t)) {
                                     auto pq = rs(b);
                                     std::optional<Biword> kb[5][2];
                                     for (int j = 1; j <= 4; ++j)
                                         for (int lower = 0; lower < 2; ++lower)
                                             kb[j][lower] = bicrystal_op(pq, j, lower == 1);
                                     for (Color i = first_color(t); i <= 3; ++i) {
                                         auto fb = x_f_op(b, i);
                                         std::optional<RSPair> pqf;
                                         if (fb) pqf = rs(*fb);
                                         for (int j = 1; j <= 4; ++j)
                                             for (int lower = 0; lower < 2; ++lower) {
                                                 const auto& k = kb[j][lower];
                                                 auto lhs = k ? x_f_op(*k, i) : std::nullopt;
                                                 auto rhs = pqf ? bicrystal_op(*pqf, j, lower == 1) : std::nullopt;
                                                 tally.check(lhs == rhs, [&] {
                                                     return std::string(1, type_char(t)) + " " +
                                                            detail::rows_string(b.rows) + " i=" + std::to_string(i) +
                                                            (lower ? " K_" : " E_") + std::to_string(j);
                                                 });
                                             }
                                     }
                                 }
                             r.ok = tally.failed == 0;
                             r.detail = tally.summary();
                         });
}

inline CriterionResult criterion_cauchy() {
    return detail::timed(8, "Cauchy identities: type A series and B/C/D biword mechanism", 120.0,
                         [](CriterionResult& r) {
                             bool a1 = cauchy_truncated_A(2, 2, 3), a2 = cauchy_truncated_A(3, 3, 4);
                             std::string s = std::string("A(2,2,3) ") + (a1 ? "holds" : "fails") + ", A(3,3,4) " +
                                             (a2 ? "holds" : "fails");
                             bool ok = a1 && a2;
                             for (LieType t : bcd_types) {
                                 long total = 0, failed = 0, indet = 0;
                                 std::string first;
                                 for (const auto& b : biword_corpus(t)) {
                                     ++total;
                                     try {
                                         if (!cauchy_biword_check(b)) {
                                             if (failed++ == 0) first = detail::rows_string(b.rows);
                                         }
                                     } catch (const indeterminate&) {
                                         ++indet;
                                     }
                                 }
                                 ok = ok && failed == 0 && indet == 0;
                                 s += std::string("; ") + type_char(t) + ": " + std::to_string(failed) + "/" +
                                      std::to_string(total) + " fail, " + std::to_string(indet) + " indeterminate";
                                 if (failed) s += " (first " + first + ")";
                             }
                             r.ok = ok;
                             r.detail = s;
                         });
}

inline CriterionResult criterion_qwedge() {
    return detail::timed(9, "q-wedge identities, termination and strategy independence", 60.0,
                         [](CriterionResult& r) {
                             detail::Tally tally;
                             auto one = parse_word("1 -1");
                             tally.check(straighten(wedge(parse_word("-1 -1")), LieType::C).empty(),
                                         [] { return std::string("v_{1-bar} ^ v_{1-bar} != 0"); });
                             tally.check(straighten(wedge(one), LieType::C) ==
                                             WedgeExpr{{parse_word("-1 1"), LaurentPoly::monomial(-1, 2)}},
                                         [] { return std::string("type C v_1 ^ v_{1-bar}"); });
                             tally.check(straighten(wedge(one), LieType::B) ==
                                             WedgeExpr{{parse_word("-1 1"), LaurentPoly::monomial(-1, 4)},
                                                       {parse_word("0 0"), LaurentPoly::monomial(-1, 1)}},
                                         [] { return std::string("type B v_1 ^ v_{1-bar}"); });
                             for (LieType t : bcd_types)
                                 for (int len = 1; len <= 3; ++len)
                                     for (const auto& w : words_of_length(t, 3, len)) {
                                         auto left = straighten(wedge(w), t, StraightenStrategy::LeftmostFirst);
                                         auto right = straighten(wedge(w), t, StraightenStrategy::RightmostFirst);
                                         tally.check(left == right && is_straight(left, t), [&] {
                                             return std::string(1, type_char(t)) + " [" + to_string(w) + "]: " +
                                                    to_string(left) + " vs " + to_string(right);
                                         });
                                     }
                             r.ok = tally.failed == 0;
                             r.detail = tally.summary();
                         });
}

inline CriterionResult criterion_rank_stability(unsigned seed = 20240611u, int samples = 500) {
    return detail::timed(10, "P-symbol and shape stable at ranks n*, n*+1, n*+2", 60.0,
                         [seed, samples](CriterionResult& r) {
                             detail::Tally tally;
                             std::mt19937 rng(seed);
                             for (LieType t : all_types) {
                                 std::uniform_int_distribution<int> length(1, 6);
                                 auto alpha = alphabet(t, 5);
                                 std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
                                 for (int s = 0; s < samples; ++s) {
                                     Word w(static_cast<std::size_t>(length(rng)));
                                     for (auto& x : w) x = alpha[pick(rng)];
                                     auto base = stable_component(w, t);
                                     auto P = p_symbol_at_rank(w, base.rank, t);
                                     for (int k = 1; k <= 2; ++k) {
                                         auto comp = component_at_rank(w, base.rank + k, t);
                                         auto Pk = p_symbol_at_rank(w, base.rank + k, t);
                                         tally.check(comp && comp->shape == base.shape && Pk && P && *Pk == *P, [&] {
                                             return std::string(1, type_char(t)) + " '" + to_string(w) + "' at rank " +
                                                    std::to_string(base.rank + k);
                                         });
                                     }
                                 }
                             }
                             r.ok = tally.failed == 0;
                             r.detail = "seed " + std::to_string(seed) + ", " + tally.summary();
                         });
}

using CriterionFn = CriterionResult (*)();

inline CriterionResult criterion_rank_stability_default() { return criterion_rank_stability(); }

inline const std::vector<std::pair<std::string, CriterionFn>>& acceptance_suites() {
    static const std::vector<std::pair<std::string, CriterionFn>> suites{
        {"rs-example", criterion_rs_example},   {"admissible", criterion_admissible_example},
        {"rs-bijection", criterion_rs_bijection}, {"lr", criterion_lr},
        {"word-crystal", criterion_word_crystal}, {"plactic", criterion_plactic},
        {"bicrystal", criterion_bicrystal},     {"cauchy", criterion_cauchy},
        {"qwedge", criterion_qwedge},           {"rank-stability", criterion_rank_stability_default},
    };
    return suites;
}

}  // namespace infcrystal
