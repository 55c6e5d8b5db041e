#include <doctest.h>

#include "test_helpers.hpp"

using namespace loclib;
using namespace loclib::testing;

TEST_CASE("rank basics") {
    FieldSpec f = gf4();
    CHECK(rank(FieldMatrix::identity(f, 5)) == 5);
    CHECK(rank(FieldMatrix(f, 3, 4)) == 0);

    FieldMatrix m(f, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("rank equals rank of transpose") {
    FieldSpec f = gf16();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; t++) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 8);
        FieldMatrix m = random_matrix(f, r, c, rng);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("column submatrix") {
    FieldSpec f = gf16();
    std::mt19937_64 rng(5);
    FieldMatrix m = random_matrix(f, 3, 5, rng);

    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(column_submatrix(m, all) == m);

    FieldMatrix empty = column_submatrix(m, {});
    CHECK(empty.cols() == 0);
    CHECK(rank(empty) == 0);

    FieldMatrix first = column_submatrix(FieldMatrix::identity(f, 3), {0});
    CHECK(first.at(0, 0) == 1);
    CHECK(first.at(1, 0) == 0);
    CHECK(first.at(2, 0) == 0);

    CHECK_THROWS_AS(column_submatrix(m, {5}), IndexOutOfRange);
}

TEST_CASE("solve") {
    FieldSpec f = gf256();
    std::mt19937_64 rng(8);

    FieldMatrix id = FieldMatrix::identity(f, 4);
    std::vector<FieldElement> b = random_vector(f, 4, rng);
    CHECK(solve(id, b) == b);

    FieldMatrix zero(f, 3, 2);
    CHECK(!solve(zero, {1, 0, 0}).has_value());
    CHECK(solve(zero, {0, 0, 0}).has_value());

    for (int t = 0; t < 30; t++) {
        FieldMatrix a = random_matrix(f, 6, 4, rng);
        if (rank(a) != 4) continue;
        std::vector<FieldElement> x0 = random_vector(f, 4, rng);
        auto x = solve(a, vecmat(x0, transpose(a)));
        REQUIRE(x.has_value());
        CHECK(*x == x0);
    }

    CHECK_THROWS_AS(solve(id, {1, 2}), DimensionMismatch);
}

TEST_CASE("solve returns some solution for wide systems") {
    FieldSpec f = gf16();
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; t++) {
        FieldMatrix a = random_matrix(f, 3, 6, rng);
        std::vector<FieldElement> x0 = random_vector(f, 6, rng);
        std::vector<FieldElement> b = vecmat(x0, transpose(a));
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(vecmat(*x, transpose(a)) == b);
    }
}

TEST_CASE("systematize fixes systematic inputs") {
    FieldSpec f = gf256();
    std::mt19937_64 rng(21);
    FieldMatrix h(f, 3, 8);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 5; j++) h.set(i, j, rand_elem(f, rng));
        h.set(i, 5 + i, 1);
    }
    Systematized sys = systematize(h);
    CHECK(sys.h == h);
    for (int j = 0; j < 8; j++) CHECK(sys.perm[j] == j);
}

TEST_CASE("systematize of random full-rank matrices") {
    FieldSpec f = gf16();
    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 25) {
        FieldMatrix h = random_matrix(f, 3, 6, rng);
        if (rank(h) != 3) continue;
        done++;
        Systematized sys = systematize(h);
        CHECK(rank(sys.h) == 3);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) CHECK(sys.h.at(i, 3 + j) == (i == j ? 1u : 0u));

        // Row space must be preserved once the permutation is undone.
        FieldMatrix back = unpermute_columns(sys.h, sys.perm);
        FieldMatrix stacked(f, 6, 6);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 6; j++) {
                stacked.set(i, j, h.at(i, j));
                stacked.set(3 + i, j, back.at(i, j));
            }
        CHECK(rank(stacked) == 3);
    }
}

TEST_CASE("systematize requires full row rank") {
    FieldSpec f = gf4();
    FieldMatrix h(f, 2, 4);
    h.set(0, 0, 1);
    h.set(1, 0, 2);
    CHECK_THROWS_AS(systematize(h), RankDeficient);
}

TEST_CASE("inverse round trip") {
    FieldSpec f = gf256();
    std::mt19937_64 rng(55);
    int done = 0;
    while (done < 10) {
        FieldMatrix a = random_matrix(f, 4, 4, rng);
        if (rank(a) != 4) continue;
        done++;
        CHECK(matmul(a, inverse(a)) == FieldMatrix::identity(f, 4));
    }
}

TEST_CASE("null space spans the kernel") {
    FieldSpec f = gf16();
    std::mt19937_64 rng(89);
    FieldMatrix m = random_matrix(f, 3, 7, rng);
    auto basis = null_space(m);
    CHECK(static_cast<int>(basis.size()) == 7 - rank(m));
    for (const auto& v : basis) {
        std::vector<FieldElement> mv = vecmat(v, transpose(m));
        for (FieldElement e : mv) CHECK(e == 0);
    }
}

TEST_CASE("combinations enumerate in lexicographic order") {
    Combinations c(5, 3);
    std::vector<int> s;
    std::vector<std::vector<int>> seen;
    while (c.next(s)) seen.push_back(s);
    CHECK(seen.size() == 10);
    CHECK(seen.front() == std::vector<int>{0, 1, 2});
    CHECK(seen.back() == std::vector<int>{2, 3, 4});
    for (size_t i = 1; i < seen.size(); i++) CHECK(seen[i - 1] < seen[i]);
}
