#include <catch_amalgamated.hpp>

#include <infcrystal/acceptance.hpp>
#include <infcrystal/schur_lr.hpp>

using namespace infcrystal;

namespace {

// Pieri rule: c^nu_{lambda,(k)} = 1 iff nu / lambda is a horizontal k-strip.
long pieri(const Partition& lam, int k, const Partition& nu) {
    if (!nu.contains(lam) || nu.size() != lam.size() + k) return 0;
    for (int i = 1; i < nu.length(); ++i)
        if (nu[i] > lam[i - 1]) return 0;
    return 1;
}

// Product of Schur polynomials by brute force over fillings.
Polynomial product(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

}  // namespace

TEST_CASE("tensor products of small shapes", "[schur_lr]") {
    DecompositionMultiset square{{Partition{2}, 1}, {Partition{1, 1}, 1}};
    for (LieType t : all_types) {
        CHECK(tensor_decompose(Partition{1}, Partition{1}, t) == square);
        CHECK(tensor_decompose(Partition{2, 1}, Partition{}, t) == DecompositionMultiset{{Partition{2, 1}, 1}});
        CHECK(tensor_decompose(Partition{1}, Partition{1, 1}, t) ==
              DecompositionMultiset{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 1}});
    }
}

TEST_CASE("tensor products are symmetric and follow Pieri", "[schur_lr]") {
    for (LieType t : all_types)
        for (int a = 1; a <= 3; ++a)
            for (const auto& lam : partitions_of(a))
                for (int k = 1; k <= 2; ++k) {
                    auto d = tensor_decompose(lam, Partition{k}, t);
                    CHECK(d == tensor_decompose(Partition{k}, lam, t));
                    for (const auto& nu : partitions_of(a + k)) {
                        auto it = d.find(nu);
                        CHECK((it == d.end() ? 0 : it->second) == pieri(lam, k, nu));
                    }
                }
}

TEST_CASE("Littlewood-Richardson oracle", "[schur_lr]") {
    CHECK(lr_oracle(Partition{1}, Partition{2}, Partition{2, 1}) == 1);
    CHECK(lr_oracle(Partition{3, 1}, Partition{}, Partition{3, 1}) == 1);
    CHECK(lr_oracle(Partition{2}, Partition{1, 1}, Partition{2, 2}) == 0);
    CHECK(lr_oracle(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(lr_oracle(Partition{1}, Partition{1}, Partition{3}) == 0);
}

TEST_CASE("LR coefficients multiply Schur polynomials", "[schur_lr]") {
    const int k = 3;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    Polynomial sum;
                    for (const auto& nu : partitions_of(a + b))
                        for (const auto& [m, c] : schur_poly(nu, k)) add_term(sum, m, c * lr_oracle(lam, mu, nu));
                    CHECK(product(schur_poly(lam, k), schur_poly(mu, k)) == sum);
                }
}

TEST_CASE("standard tableaux", "[schur_lr]") {
    CHECK(count_syt(Partition{2, 1}) == 2);
    CHECK(count_syt(Partition{5}) == 1);
    CHECK(count_syt(Partition{1, 1, 1}) == 1);
    CHECK(count_syt(Partition{}) == 1);
    for (int n = 1; n <= 7; ++n) {
        long total = 0;
        for (const auto& lam : partitions_of(n)) {
            CHECK(count_syt(lam) == hook_length_count(lam));
            total += count_syt(lam) * count_syt(lam);
        }
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(total == fact);
    }
}

TEST_CASE("Schur polynomials", "[schur_lr]") {
    CHECK(to_string(schur_poly(Partition{1}, 2)) == "y1 + y2");
    Polynomial two{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}};
    CHECK(schur_poly(Partition{2}, 2) == two);
    CHECK(schur_poly(Partition{1, 1}, 1).empty());
    CHECK(semistandard_tableaux(Partition{2, 1}, 3).size() == 8);
    for (const auto& t : semistandard_tableaux(Partition{2, 2}, 3)) CHECK(is_semistandard(t));
}

TEST_CASE("plactic Schur products", "[schur_lr]") {
    auto m = plactic_product_multiplicity(row_tableau(LieType::C, parse_word("-1 -1")), Partition{1}, Partition{1});
    CHECK(m.count == 1);
    CHECK(m.stable());
    auto c = plactic_product_multiplicity(column_tableau(LieType::C, parse_word("-2 -1")), Partition{1},
                                          Partition{1});
    CHECK(c.count == 1);
    CHECK(c.stable());
    auto T = Tableau{LieType::C, {parse_word("-2 1"), parse_word("-1 2")}};
    CHECK(plactic_product_multiplicity(T, Partition{2, 2}, Partition{}).count == 1);
    CHECK(plactic_product_multiplicity(T, Partition{4}, Partition{}).count == 0);
    for (LieType t : {LieType::A, LieType::B, LieType::D}) {
        Tableau U = p_symbol(parse_word(t == LieType::A ? "-1 -2 -1" : "1 -1 2"), t);
        auto lam = U.shape();
        for (int a = 0; a <= lam.size(); ++a)
            for (const auto& l1 : partitions_of(a))
                for (const auto& l2 : partitions_of(lam.size() - a)) {
                    auto r = plactic_product_multiplicity(U, l1, l2);
                    CHECK(r.stable());
                    CHECK(r.count == lr_oracle(l1, l2, lam));
                }
    }
    CHECK_THROWS_AS(plactic_product_multiplicity(T, Partition{1}, Partition{}), input_error);
}
