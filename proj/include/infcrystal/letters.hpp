/**
 * @file letters.hpp
 * @brief Alphabets of the infinite types A, B, C, D: letters, their (partial)
 * orders, weights and the single-letter crystal B(1).
 *
 * A letter is stored as a signed integer: -i is the barred letter i-bar,
 * +i the unbarred letter i, and 0 the zero letter (type B only).
 */
#pragma once

#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace infcrystal {

enum class LieType { A, B, C, D };

inline constexpr LieType all_types[] = {LieType::A, LieType::B, LieType::C, LieType::D};

inline char type_char(LieType t) {
    switch (t) {
        case LieType::A: return 'a';
        case LieType::B: return 'b';
        case LieType::C: return 'c';
        case LieType::D: return 'd';
    }
    return '?';
}

inline LieType parse_type(std::string_view s) {
    if (s == "a" || s == "A") return LieType::A;
    if (s == "b" || s == "B") return LieType::B;
    if (s == "c" || s == "C") return LieType::C;
    if (s == "d" || s == "D") return LieType::D;
    throw input_error("unknown Lie type '" + std::string(s) + "' (expected a, b, c or d)");
}

struct Letter {
    int value = 0;

    static constexpr Letter barred(int i) { return Letter{-i}; }
    static constexpr Letter unbarred(int i) { return Letter{i}; }
    static constexpr Letter zero() { return Letter{0}; }

    constexpr bool is_barred() const { return value < 0; }
    constexpr bool is_unbarred() const { return value > 0; }
    constexpr bool is_zero() const { return value == 0; }
    constexpr int index() const { return value < 0 ? -value : value; }
    /// The opposite letter; zero is its own bar.
    constexpr Letter bar() const { return Letter{-value}; }

    // Storage order only (by signed value). Use compare_letters for the
    // alphabet order of a given type.
    friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;
using Color = int;

inline bool is_legal(Letter x, LieType t) {
    switch (t) {
        case LieType::A: return x.is_barred();
        case LieType::B: return true;
        case LieType::C:
        case LieType::D: return !x.is_zero();
    }
    return false;
}

inline void require_legal(Letter x, LieType t) {
    if (!is_legal(x, t)) {
        throw input_error("letter " + std::to_string(x.value) + " is not in the alphabet of type " +
                          std::string(1, type_char(t)));
    }
}

inline void require_legal(const Word& w, LieType t) {
    for (Letter x : w) require_legal(x, t);
}

inline bool is_legal_color(Color i, LieType t) { return t == LieType::A ? i >= 1 : i >= 0; }

/// Smallest color of the type: 1 for A, 0 otherwise.
inline Color first_color(LieType t) { return t == LieType::A ? 1 : 0; }

enum class Order { Less, Equal, Greater, Incomparable };

/// Alphabet order. Signed value order everywhere, except that 1 and 1-bar are
/// incomparable in type D.
inline Order compare_letters(Letter a, Letter b, LieType t) {
    require_legal(a, t);
    require_legal(b, t);
    if (a == b) return Order::Equal;
    if (t == LieType::D && a.index() == 1 && b.index() == 1) return Order::Incomparable;
    return a.value < b.value ? Order::Less : Order::Greater;
}

inline bool letter_less(Letter a, Letter b, LieType t) { return compare_letters(a, b, t) == Order::Less; }
inline bool letter_leq(Letter a, Letter b, LieType t) {
    auto o = compare_letters(a, b, t);
    return o == Order::Less || o == Order::Equal;
}

/// Shifts every index up by one, keeping the kind. Undefined on the zero letter.
inline Word theta(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (x.is_zero()) throw input_error("theta is undefined on the letter 0");
        out.push_back(x.is_barred() ? Letter::barred(x.index() + 1) : Letter::unbarred(x.index() + 1));
    }
    return out;
}

inline int max_index(const Word& w) {
    int m = 0;
    for (Letter x : w) m = std::max(m, x.index());
    return m;
}

// ---------------------------------------------------------------------------
// Weights

/// Finitely supported integer vector over indices 1, 2, ...; zero entries are
/// never stored.
struct Weight {
    std::map<int, long> coords;

    long operator[](int i) const {
        auto it = coords.find(i);
        return it == coords.end() ? 0 : it->second;
    }
    void add(int i, long v) {
        if (v == 0) return;
        long& c = coords[i];
        c += v;
        if (c == 0) coords.erase(i);
    }
    Weight& operator+=(const Weight& o) {
        for (auto [i, v] : o.coords) add(i, v);
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (auto [i, v] : o.coords) add(i, -v);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight letter_weight(Letter x) {
    Weight w;
    if (x.is_barred()) w.add(x.index(), 1);
    if (x.is_unbarred()) w.add(x.index(), -1);
    return w;
}

/// Coordinate i is (#letters i-bar) - (#letters i).
inline Weight weight(const Word& w) {
    Weight out;
    for (Letter x : w) out += letter_weight(x);
    return out;
}

/// Simple root alpha_i, signed so that wt(f_i b) = wt(b) - alpha_i.
inline Weight simple_root(Color i, LieType t) {
    if (!is_legal_color(i, t)) throw input_error("illegal color " + std::to_string(i));
    Weight a;
    if (i >= 1) {
        a.add(i + 1, 1);
        a.add(i, -1);
        return a;
    }
    switch (t) {
        case LieType::B: a.add(1, 1); break;
        case LieType::C: a.add(1, 2); break;
        case LieType::D:
            a.add(1, 1);
            a.add(2, 1);
            break;
        case LieType::A: break;
    }
    return a;
}

// ---------------------------------------------------------------------------
// The crystal B(1) of the vector representation

struct LocalString {
    int eps = 0;
    int phi = 0;
    friend bool operator==(const LocalString&, const LocalString&) = default;
};

/// Lowering operator on a single letter, nullopt for the zero action.
inline std::optional<Letter> letter_f(Letter x, Color i, LieType t) {
    if (i >= 1) {
        if (x.value == -(i + 1)) return Letter::barred(i);
        if (x.value == i && t != LieType::A) return Letter::unbarred(i + 1);
        return std::nullopt;
    }
    switch (t) {
        case LieType::B:
            if (x.value == -1) return Letter::zero();
            if (x.value == 0) return Letter::unbarred(1);
            break;
        case LieType::C:
            if (x.value == -1) return Letter::unbarred(1);
            break;
        case LieType::D:
            if (x.value == -2) return Letter::unbarred(1);
            if (x.value == -1) return Letter::unbarred(2);
            break;
        case LieType::A: break;
    }
    return std::nullopt;
}

inline std::optional<Letter> letter_e(Letter x, Color i, LieType t) {
    if (i >= 1) {
        if (x.value == -i) return Letter::barred(i + 1);
        if (x.value == i + 1 && t != LieType::A) return Letter::unbarred(i);
        return std::nullopt;
    }
    switch (t) {
        case LieType::B:
            if (x.value == 1) return Letter::zero();
            if (x.value == 0) return Letter::barred(1);
            break;
        case LieType::C:
            if (x.value == 1) return Letter::barred(1);
            break;
        case LieType::D:
            if (x.value == 1) return Letter::barred(2);
            if (x.value == 2) return Letter::barred(1);
            break;
        case LieType::A: break;
    }
    return std::nullopt;
}

inline LocalString local_string_unchecked(Letter x, Color i, LieType t) {
    LocalString s;
    for (auto y = letter_e(x, i, t); y; y = letter_e(*y, i, t)) ++s.eps;
    for (auto y = letter_f(x, i, t); y; y = letter_f(*y, i, t)) ++s.phi;
    return s;
}

/// (eps_i, phi_i) of a single letter: lengths of the i-string above and below it.
inline LocalString local_string(Letter x, Color i, LieType t) {
    require_legal(x, t);
    if (!is_legal_color(i, t)) throw input_error("illegal color " + std::to_string(i) + " for type " +
                                                 std::string(1, type_char(t)));
    return local_string_unchecked(x, i, t);
}

// ---------------------------------------------------------------------------
// Text syntax: "-i" barred, "i" unbarred, "0" zero; words are whitespace or
// comma separated.

inline std::string to_string(Letter x) { return std::to_string(x.value); }

inline std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += to_string(w[k]);
    }
    return s;
}

inline Letter parse_letter(std::string_view tok) {
    if (tok.empty()) throw input_error("empty letter token");
    std::size_t pos = 0;
    bool neg = false;
    if (tok[0] == '-' || tok[0] == '+') {
        neg = tok[0] == '-';
        pos = 1;
    }
    if (pos == tok.size()) throw input_error("malformed letter '" + std::string(tok) + "'");
    long v = 0;
    for (; pos < tok.size(); ++pos) {
        char c = tok[pos];
        if (c < '0' || c > '9') throw input_error("malformed letter '" + std::string(tok) + "'");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw input_error("letter index too large: '" + std::string(tok) + "'");
    }
    return Letter{static_cast<int>(neg ? -v : v)};
}

inline Word parse_word(std::string_view s) {
    Word w;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) w.push_back(parse_letter(tok));
        tok.clear();
    };
    for (char c : s) {
        if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') flush();
        else tok += c;
    }
    flush();
    return w;
}

inline Word parse_word(std::string_view s, LieType t) {
    Word w = parse_word(s);
    require_legal(w, t);
    return w;
}

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Letter x : w) {
            h ^= static_cast<std::size_t>(x.value + 0x9e37);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace infcrystal
