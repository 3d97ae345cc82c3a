/**
 * @file laurent.hpp
 * @brief Integer Laurent polynomials in q.
 */
#pragma once

#include <map>
#include <string>

namespace infcrystal {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { add(0, c); }  // NOLINT: implicit integer constant

    static LaurentPoly monomial(long c, int e) {
        LaurentPoly p;
        p.add(e, c);
        return p;
    }
    static LaurentPoly q(int e = 1) { return monomial(1, e); }

    const std::map<int, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(int e, long c) {
        if (c == 0) return;
        long& v = terms_[e];
        v += c;
        if (v == 0) terms_.erase(e);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, long> terms_;  // exponent -> nonzero coefficient
};

/// Terms by increasing exponent: "1 - q^2", "-q^-1 + 3q".
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto [e, c] : p.terms()) {
        long a = c < 0 ? -c : c;
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace infcrystal
