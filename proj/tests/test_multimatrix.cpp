#include <doctest.h>

#include <random>

#include "pchg/multimatrix.hpp"

using namespace pchg;

namespace {

MultiMatrix random_matrix(std::mt19937& rng, int dim, int order) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    MultiMatrix a(dim, order);
    for (std::size_t flat = 0; flat < a.size(); ++flat)
        a[flat] = Rational(num(rng), den(rng));
    return a;
}

MultiMatrix random_color_matrix(std::mt19937& rng, int n, int k) {
    MultiMatrix p(std::vector<int>{n, k});
    std::uniform_int_distribution<int> color(0, k - 1);
    for (int v = 0; v < n; ++v) p.at({v, color(rng)}) = Rational(1);
    return p;
}

} // namespace

TEST_CASE("identity tensor") {
    MultiMatrix id = identity_tensor(3, 2);
    CHECK(id.at({0, 0, 0}) == Rational(1));
    CHECK(id.at({1, 1, 1}) == Rational(1));
    Rational total(0);
    for (std::size_t flat = 0; flat < id.size(); ++flat) total += id[flat];
    CHECK(total == Rational(2));

    MultiMatrix id2 = identity_tensor(2, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id2.at({i, j}) == (i == j ? Rational(1) : Rational(0)));

    // I ∘ x is the componentwise (d-1)-th power.
    auto powers = apply_vector(identity_tensor(3, 2), {Rational(2), Rational(3)});
    CHECK(powers == std::vector<Rational>{Rational(4), Rational(9)});
}

TEST_CASE("product of 2-dimensional matrices is the dot product") {
    MultiMatrix a(2, 2), b(2, 2);
    a.at({0, 0}) = Rational(1);
    a.at({0, 1}) = Rational(2);
    a.at({1, 0}) = Rational(3);
    a.at({1, 1}) = Rational(4);
    b.at({0, 0}) = Rational(5);
    b.at({0, 1}) = Rational(6);
    b.at({1, 0}) = Rational(7);
    b.at({1, 1}) = Rational(8);
    MultiMatrix c = mm_product(a, b);
    CHECK(c.at({0, 0}) == Rational(19));
    CHECK(c.at({0, 1}) == Rational(22));
    CHECK(c.at({1, 0}) == Rational(43));
    CHECK(c.at({1, 1}) == Rational(50));
}

TEST_CASE("scalar law and associativity on random instances") {
    std::mt19937 rng(2022);
    for (int trial = 0; trial < 100; ++trial) {
        MultiMatrix a = random_matrix(rng, 3, 2);
        MultiMatrix b = random_matrix(rng, 2, 2);
        MultiMatrix c = random_matrix(rng, 2, 2);

        // A ∘ (2B) = 2^{d-1} (A ∘ B) for d = 3.
        CHECK(mm_product(a, scalar_multiply(Rational(2), b)) ==
              scalar_multiply(Rational(4), mm_product(a, b)));

        CHECK(mm_product(mm_product(a, b), c) == mm_product(a, mm_product(b, c)));
    }
    for (int trial = 0; trial < 100; ++trial) {
        MultiMatrix a = random_matrix(rng, 3, 3);
        MultiMatrix b = random_matrix(rng, 2, 3);
        MultiMatrix c = random_matrix(rng, 2, 3);
        CHECK(mm_product(mm_product(a, b), c) == mm_product(a, mm_product(b, c)));
    }
}

TEST_CASE("identity commutes with color matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 4;
        int k = 1 + trial % n;
        MultiMatrix p = random_color_matrix(rng, n, k);
        for (int d = 2; d <= 4; ++d)
            CHECK(mm_product(identity_tensor(d, n), p) == mm_product(p, identity_tensor(d, k)));
    }
}

TEST_CASE("apply_vector") {
    MultiMatrix s1(3, 2);
    s1.at({0, 1, 1}) = Rational(3);
    s1.at({1, 0, 1}) = Rational(1, 2);
    s1.at({1, 1, 0}) = Rational(1, 2);
    s1.at({1, 1, 1}) = Rational(2);
    auto image = apply_vector(s1, {Rational(0), Rational(1)});
    CHECK(image == std::vector<Rational>{Rational(3), Rational(2)});

    MultiMatrix zero(3, 2);
    auto z = apply_vector(zero, {Rational(5), Rational(-7)});
    CHECK(z == std::vector<Rational>{Rational(0), Rational(0)});

    CHECK_THROWS_AS(apply_vector(s1, {Rational(1)}), error);
}

TEST_CASE("symmetry check") {
    MultiMatrix lopsided(3, 2);
    lopsided.at({0, 1, 1}) = Rational(1);
    CHECK_FALSE(is_symmetric(lopsided));
    lopsided.at({1, 0, 1}) = Rational(1);
    lopsided.at({1, 1, 0}) = Rational(1);
    CHECK(is_symmetric(lopsided));

    MultiMatrix vec(1, 5);
    CHECK(is_symmetric(vec));
    CHECK(is_symmetric(identity_tensor(4, 3)));
}

TEST_CASE("hyperplane sums") {
    MultiMatrix s1(3, 2);
    s1.at({0, 1, 1}) = Rational(3);
    s1.at({1, 0, 1}) = Rational(1, 2);
    s1.at({1, 1, 0}) = Rational(1, 2);
    s1.at({1, 1, 1}) = Rational(2);
    CHECK(hyperplane_sum(s1, 0, 0) == Rational(3));
    CHECK(hyperplane_sum(s1, 0, 1) == Rational(3));
    CHECK(hyperplane_sum(identity_tensor(3, 2), 1, 0) == Rational(1));
    CHECK(hyperplane_sum(MultiMatrix(3, 2), 2, 1) == Rational(0));
    CHECK_THROWS_AS(hyperplane_sum(s1, 3, 0), error);
    CHECK_THROWS_AS(hyperplane_sum(s1, 0, 2), error);
}

TEST_CASE("the dense guard rejects oversized matrices") {
    CHECK_THROWS_AS(MultiMatrix(9, 100), error); // 100^9 entries
    bool guarded = false;
    try {
        MultiMatrix big(9, 100);
        (void)big;
    } catch (const error& e) {
        guarded = e.code() == errc::guard;
    }
    CHECK(guarded);
}

TEST_CASE("threaded product matches the serial one") {
    std::mt19937 rng(11);
    MultiMatrix a = random_matrix(rng, 3, 4);
    MultiMatrix b = random_matrix(rng, 2, 4);
    CHECK(mm_product(a, b, 4) == mm_product(a, b, 1));
}
