#include <catch_amalgamated.hpp>

#include <infcrystal/acceptance.hpp>
#include <infcrystal/rs.hpp>

using namespace infcrystal;

namespace {

Word W(const char* s) { return parse_word(s); }

using Rows = std::vector<std::vector<int>>;

// Classical Schensted row insertion by letter value.
Rows schensted(const std::vector<int>& w) {
    Rows T;
    for (int x : w)
        for (std::size_t r = 0;; ++r) {
            if (r == T.size()) {
                T.push_back({x});
                break;
            }
            auto it = std::upper_bound(T[r].begin(), T[r].end(), x);
            if (it == T[r].end()) {
                T[r].push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    return T;
}

// Type A P-symbol oracle: row insertion of the reversed word.
Rows type_a_p(const Word& w) {
    std::vector<int> v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v.push_back(it->value);
    return schensted(v);
}

Rows values(const Tableau& T) {
    Rows out;
    for (const auto& r : T.rows) {
        out.emplace_back();
        for (Letter x : r) out.back().push_back(x.value);
    }
    return out;
}

Biword single_letters(LieType t, const char* s) {
    Biword b{t, {}};
    for (Letter x : parse_word(s)) b.rows.push_back({x});
    return b;
}

}  // namespace

TEST_CASE("P-symbols of the worked example", "[rs]") {
    CHECK(p_symbol(W("1 -1 1 -1"), LieType::C) == Tableau{LieType::C, {W("-2 1"), W("-1 2")}});
    CHECK(p_symbol(W("1 -1 1 -1"), LieType::D) == column_tableau(LieType::D, W("1 -1 1 -1")));
    for (LieType t : all_types) CHECK(p_symbol(W("-2"), t) == row_tableau(t, W("-2")));
    CHECK(p_symbol(W("0"), LieType::B) == row_tableau(LieType::B, W("0")));
}

TEST_CASE("type A P-symbols agree with row insertion", "[rs]") {
    for (int len = 1; len <= 5; ++len)
        for (const auto& w : words_of_length(LieType::A, 3, len)) {
            INFO(to_string(w));
            CHECK(values(p_symbol(w, LieType::A)) == type_a_p(w));
        }
}

TEST_CASE("Q-symbols", "[rs]") {
    CHECK(q_symbol(single_letters(LieType::C, "1 -1 1 -1")) == RecordingTableau{{{1, 2}, {3, 4}}});
    CHECK(q_symbol(single_letters(LieType::D, "1 -1 1 -1")) == RecordingTableau{{{1}, {2}, {3}, {4}}});
    CHECK(q_symbol(Biword{LieType::C, {W("2 1 -1")}}) == RecordingTableau{{{1, 1, 1}}});
    CHECK(q_symbol(Biword{LieType::C, {}}) == RecordingTableau{});
    CHECK_THROWS_AS(q_symbol(Biword{LieType::C, {W("1"), Word{}}}), input_error);
    CHECK_THROWS_AS(q_symbol(Biword{LieType::C, {W("1 2")}}), input_error);
}

TEST_CASE("type A Q-symbols agree with the insertion shapes", "[rs]") {
    for (const auto& b : biword_corpus(LieType::A, 4, 3, 3)) {
        Word prefix;
        Rows q;
        for (std::size_t p = 0; p < b.rows.size(); ++p) {
            prefix.insert(prefix.end(), b.rows[p].begin(), b.rows[p].end());
            auto shape = type_a_p(prefix);
            q.resize(shape.size());
            for (std::size_t i = 0; i < shape.size(); ++i)
                while (q[i].size() < shape[i].size()) q[i].push_back(static_cast<int>(p) + 1);
        }
        INFO(to_string(b.concatenation()));
        CHECK(q_symbol(b).rows == q);
    }
}

TEST_CASE("highest biwords for recording tableaux", "[rs]") {
    CHECK(hw_for_recording(RecordingTableau{{{1}}}, 4, LieType::C).rows == std::vector<Word>{W("-4")});
    CHECK(hw_for_recording(RecordingTableau{{{1}, {2}}}, 2, LieType::C).rows == std::vector<Word>{W("-2"), W("-1")});
    for (LieType t : all_types) {
        auto b = hw_for_recording(RecordingTableau{{{1, 2}, {3, 4}}}, 4, t);
        CHECK(is_highest(b.concatenation(), 4, t));
        CHECK(q_symbol(b) == RecordingTableau{{{1, 2}, {3, 4}}});
    }
}

TEST_CASE("inverse RS", "[rs]") {
    Tableau P{LieType::C, {W("-2 1"), W("-1 2")}};
    CHECK(rs_inverse(P, RecordingTableau{{{1, 2}, {3, 4}}}) == single_letters(LieType::C, "1 -1 1 -1"));
    CHECK(rs_inverse(row_tableau(LieType::B, W("0")), RecordingTableau{{{1}}}).rows == std::vector<Word>{W("0")});
    CHECK_THROWS_AS(rs_inverse(P, RecordingTableau{{{1, 2, 3}, {4}}}), input_error);
    CHECK_THROWS_AS(rs_inverse(P, RecordingTableau{{{2, 1}, {3, 4}}}), input_error);
    for (LieType t : all_types)
        for (const auto& b : biword_corpus(t, 3, 2, 3)) {
            auto [P2, Q2] = rs(b);
            INFO(type_char(t) << " " << to_string(b.concatenation()));
            CHECK(P2.shape() == Q2.shape());
            CHECK(rs_inverse(P2, Q2) == b);
        }
}

TEST_CASE("antisymmetric RS", "[rs]") {
    ColumnSeq c{LieType::D, {W("1"), W("-1"), W("1"), W("-1")}};
    auto [P, Q] = rs_hat(c);
    CHECK(P == column_tableau(LieType::D, W("1 -1 1 -1")));
    CHECK(Q == RecordingTableau{{{1, 2, 3, 4}}});
    auto single = rs_hat(ColumnSeq{LieType::C, {W("-2 1")}});
    CHECK(single.P == column_tableau(LieType::C, W("-2 1")));
    CHECK(single.Q == RecordingTableau{{{1, 1}}});
    CHECK(rs_hat_inverse(P, Q) == c);
    for (LieType t : all_types)
        for (const auto& cs : column_corpus(t, 3, 2, 3)) {
            auto [P2, Q2] = rs_hat(cs);
            CHECK(P2.shape().conjugate() == Q2.shape());
            CHECK(rs_hat_inverse(P2, Q2) == cs);
        }
}

TEST_CASE("recording crystal", "[rs]") {
    CHECK(y_f_op(RecordingTableau{{{1, 1}}}, 1) == RecordingTableau{{{1, 2}}});
    CHECK_FALSE(y_f_op(RecordingTableau{{{1}, {2}}}, 1).has_value());
    CHECK_FALSE(y_f_op(RecordingTableau{{{2, 2}}}, 1).has_value());
    CHECK(y_e_op(RecordingTableau{{{1, 2}}}, 1) == RecordingTableau{{{1, 1}}});
    auto b = single_letters(LieType::C, "1 -1 1 -1");
    auto k = bicrystal_K(b, 4);
    REQUIRE(k.has_value());
    CHECK(rs(*k).Q == RecordingTableau{{{1, 2}, {3, 5}}});
    CHECK(rs(*k).P == rs(b).P);
    CHECK_FALSE(bicrystal_K(b, 7).has_value());
    CHECK_THROWS_AS(y_f_op(RecordingTableau{{{1}}}, 0), input_error);
}

TEST_CASE("letter-side operators keep the recording tableau", "[rs]") {
    for (LieType t : all_types)
        for (const auto& b : biword_corpus(t, 3, 2, 3))
            for (Color i = first_color(t); i <= 2; ++i) {
                auto f = x_f_op(b, i);
                if (!f) continue;
                auto before = rs(b), after = rs(*f);
                CHECK(after.Q == before.Q);
                auto fp = f_op(reading(before.P), i, t);
                REQUIRE(fp.has_value());
                CHECK(reading(after.P) == *fp);
            }
}
