#include <catch_amalgamated.hpp>

#include <infcrystal/letters.hpp>
#include <infcrystal/word_crystal.hpp>

#include <functional>
#include <map>

using namespace infcrystal;

namespace {

Word W(const char* s) { return parse_word(s); }

// Two-factor tensor evaluation, splitting off the first letter and recursing
// on the rest. Independent of the signature implementation.
struct TensorData {
    int eps, phi;
};

TensorData tensor_data(const Word& w, Color i, LieType t) {
    if (w.empty()) return {0, 0};
    auto [e1, p1] = local_string(w[0], i, t);
    Word rest(w.begin() + 1, w.end());
    auto [e2, p2] = tensor_data(rest, i, t);
    return {std::max(e1, e1 + e2 - p1), std::max(p2, p1 + p2 - e2)};
}

std::optional<Word> tensor_f(const Word& w, Color i, LieType t) {
    if (w.empty()) return std::nullopt;
    Word rest(w.begin() + 1, w.end());
    auto [e1, p1] = local_string(w[0], i, t);
    auto d2 = tensor_data(rest, i, t);
    if (p1 > d2.eps) {
        Word out = w;
        out[0] = *letter_f(w[0], i, t);
        return out;
    }
    auto r = tensor_f(rest, i, t);
    if (!r) return std::nullopt;
    Word out{w[0]};
    out.insert(out.end(), r->begin(), r->end());
    return out;
}

std::optional<Word> tensor_e(const Word& w, Color i, LieType t) {
    if (w.empty()) return std::nullopt;
    Word rest(w.begin() + 1, w.end());
    auto [e1, p1] = local_string(w[0], i, t);
    auto d2 = tensor_data(rest, i, t);
    if (p1 < d2.eps) {
        auto r = tensor_e(rest, i, t);
        if (!r) return std::nullopt;
        Word out{w[0]};
        out.insert(out.end(), r->begin(), r->end());
        return out;
    }
    if (e1 == 0) return std::nullopt;
    Word out = w;
    out[0] = *letter_e(w[0], i, t);
    return out;
}

std::vector<Letter> alphabet(LieType t, int m) {
    std::vector<Letter> out;
    for (int i = m; i >= 1; --i) out.push_back(Letter::barred(i));
    if (t == LieType::B) out.push_back(Letter::zero());
    if (t != LieType::A)
        for (int i = 1; i <= m; ++i) out.push_back(Letter::unbarred(i));
    return out;
}

std::vector<Word> all_words(LieType t, int m, int len) {
    std::vector<Word> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (Letter x : alphabet(t, m)) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("letter order", "[letters]") {
    CHECK(compare_letters(Letter::barred(2), Letter::barred(1), LieType::C) == Order::Less);
    CHECK(compare_letters(Letter::unbarred(1), Letter::barred(1), LieType::D) == Order::Incomparable);
    CHECK(compare_letters(Letter::zero(), Letter::zero(), LieType::B) == Order::Equal);
    CHECK(compare_letters(Letter::barred(2), Letter::unbarred(1), LieType::D) == Order::Less);
    CHECK(compare_letters(Letter::barred(1), Letter::unbarred(2), LieType::D) == Order::Less);
    CHECK(compare_letters(Letter::barred(1), Letter::zero(), LieType::B) == Order::Less);
    CHECK(compare_letters(Letter::zero(), Letter::unbarred(1), LieType::B) == Order::Less);
    CHECK_THROWS_AS(compare_letters(Letter::zero(), Letter::unbarred(1), LieType::C), input_error);
    CHECK_THROWS_AS(compare_letters(Letter::unbarred(1), Letter::barred(1), LieType::A), input_error);
}

TEST_CASE("theta shifts indices", "[letters]") {
    CHECK(theta(W("-1 2")) == W("-2 3"));
    CHECK(theta(W("")).empty());
    CHECK(theta(W("-3")) == W("-4"));
    CHECK_THROWS_AS(theta(W("0")), input_error);
}

TEST_CASE("single-letter strings", "[letters]") {
    CHECK(local_string(Letter::zero(), 0, LieType::B) == LocalString{1, 1});
    CHECK(local_string(Letter::unbarred(1), 0, LieType::B) == LocalString{2, 0});
    CHECK(local_string(Letter::barred(1), 0, LieType::B) == LocalString{0, 2});
    CHECK(local_string(Letter::barred(1), 1, LieType::C) == LocalString{1, 0});
    CHECK(local_string(Letter::barred(2), 0, LieType::D) == LocalString{0, 1});
    CHECK(local_string(Letter::barred(1), 0, LieType::D) == LocalString{0, 1});
    CHECK(local_string(Letter::barred(1), 1, LieType::D) == LocalString{1, 0});
    CHECK(local_string(Letter::unbarred(1), 1, LieType::D) == LocalString{0, 1});
    CHECK_THROWS_AS(local_string(Letter::barred(1), 0, LieType::A), input_error);
}

TEST_CASE("Kashiwara operators on words", "[words]") {
    CHECK(f_op(W("-1"), 0, LieType::C) == W("1"));
    CHECK(f_op(W("-1 -2"), 1, LieType::C) == W("-1 -1"));
    CHECK_FALSE(e_op(W("-4 -3"), 3, LieType::C).has_value());
    CHECK(eps(W("1"), 0, LieType::B) == 2);
    CHECK(phi(W("0"), 0, LieType::B) == 1);
    CHECK(weight(W("-2 1")) == weight(W("-2")) + weight(W("1")));
    CHECK(weight(W("-2 1"))[2] == 1);
    CHECK(weight(W("-2 1"))[1] == -1);
    CHECK(weight(W("0 0")).coords.empty());
    CHECK(weight(W("")).coords.empty());
}

TEST_CASE("signature rule agrees with the two-factor tensor rule", "[words]") {
    for (LieType t : all_types) {
        for (int len = 1; len <= 4; ++len) {
            for (const auto& w : all_words(t, 3, len)) {
                for (Color i = first_color(t); i <= 3; ++i) {
                    auto f = f_op(w, i, t);
                    auto e = e_op(w, i, t);
                    REQUIRE(f == tensor_f(w, i, t));
                    REQUIRE(e == tensor_e(w, i, t));
                    auto d = tensor_data(w, i, t);
                    REQUIRE(eps(w, i, t) == d.eps);
                    REQUIRE(phi(w, i, t) == d.phi);
                    if (f) {
                        REQUIRE(e_op(*f, i, t) == w);
                        REQUIRE(weight(*f) == weight(w) - simple_root(i, t));
                    }
                    if (e) REQUIRE(f_op(*e, i, t) == w);
                    int k = 0;
                    for (auto v = e; v; v = e_op(*v, i, t)) ++k;
                    REQUIRE(k == eps(w, i, t));
                    k = 0;
                    for (auto v = f; v; v = f_op(*v, i, t)) ++k;
                    REQUIRE(k == phi(w, i, t));
                }
            }
        }
    }
}

TEST_CASE("weight formula through fundamental weights", "[words]") {
    // pi_n(omega_i) restricted to coordinates 1..n, computed from the Cartan
    // data: <h_j, omega_i> = delta_ij, with the simple coroots of each type.
    auto check = [](LieType t, int n, const Word& w) {
        Weight wt = weight(w);
        for (Color j : colors_below(n, t)) {
            long pairing = 0;
            if (j >= 1) {
                pairing = wt[j + 1] - wt[j];
            } else {
                switch (t) {
                    case LieType::B: pairing = 2 * wt[1]; break;
                    case LieType::C: pairing = wt[1]; break;
                    case LieType::D: pairing = wt[1] + wt[2]; break;
                    case LieType::A: break;
                }
            }
            REQUIRE(pairing == phi(w, j, t) - eps(w, j, t));
        }
    };
    for (LieType t : all_types)
        for (int len = 0; len <= 3; ++len)
            for (const auto& w : all_words(t, 3, len)) check(t, 4, w);
}

TEST_CASE("raising to the highest vertex", "[words]") {
    auto r = raise_to_highest(W("-2 -1"), 4, LieType::C);
    CHECK(r.highest == W("-4 -3"));
    CHECK(r.path.size() == 4);
    auto r2 = raise_to_highest(W("-4 -3"), 4, LieType::C);
    CHECK(r2.highest == W("-4 -3"));
    CHECK(r2.path.empty());
    auto r3 = raise_to_highest(W("-1"), 3, LieType::C);
    CHECK(r3.highest == W("-3"));
    CHECK(r3.path == std::vector<Color>{1, 2});
    CHECK(lower_along(r.highest, r.path, LieType::C) == W("-2 -1"));
    CHECK_THROWS_AS(raise_to_highest(W("-5"), 4, LieType::C), input_error);
}

TEST_CASE("raising endpoint ignores the color choice", "[words]") {
    for (LieType t : all_types)
        for (int len = 1; len <= 4; ++len)
            for (const auto& w : all_words(t, 2, len)) {
                int n = initial_rank(w);
                auto a = raise_to_highest(w, n, t, ColorChoice::SmallestFirst);
                auto b = raise_to_highest(w, n, t, ColorChoice::LargestFirst);
                REQUIRE(a.highest == b.highest);
                REQUIRE(is_highest(a.highest, n, t));
                REQUIRE(lower_along(a.highest, a.path, t) == w);
                REQUIRE(lower_along(b.highest, b.path, t) == w);
            }
}

TEST_CASE("component shapes", "[words]") {
    CHECK(component_shape(W("-2 -1"), LieType::C) == Partition{1, 1});
    for (LieType t : all_types) CHECK(component_shape(W("-1 -1"), t) == Partition{2});
    CHECK(component_shape(W(""), LieType::C).empty());
    CHECK(component_shape(W("1 -1"), LieType::C) == Partition{2});
    CHECK(component_shape(W("-1 1"), LieType::C) == Partition{1, 1});
}

TEST_CASE("component shape is stable beyond the default rank", "[words]") {
    for (LieType t : all_types)
        for (int len = 1; len <= 4; ++len)
            for (const auto& w : all_words(t, 2, len)) {
                auto c = stable_component(w, t);
                for (int extra : {1, 2}) {
                    auto d = component_at_rank(w, c.rank + extra, t);
                    REQUIRE(d.has_value());
                    REQUIRE(d->shape == c.shape);
                }
            }
}

TEST_CASE("component enumeration", "[words]") {
    auto c = enumerate_component(W("-1"), 1, LieType::C);
    CHECK(c == std::vector<Word>{W("-1"), W("1")});
    CHECK(enumerate_component(W("-1"), 1, LieType::A) == std::vector<Word>{W("-1")});
    CHECK(enumerate_component(W("-2 -1"), 2, LieType::C).size() == 5);
    CHECK(enumerate_component(W("-1"), 1, LieType::D) == std::vector<Word>{W("-1")});
    CHECK(enumerate_component(W("-2"), 2, LieType::B).size() == 5);
    CHECK(enumerate_component(W("-3"), 3, LieType::D).size() == 6);
    CHECK_THROWS_AS(enumerate_component(W("-3 -3"), 3, LieType::C, 5), budget_exhausted);
}
