#include "doctest.h"

#include <functional>
#include <random>

#include "tgwa/lattice.hpp"

using namespace tgwa;

namespace {

IntVector V(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

IntMatrix random_matrix(std::mt19937& rng, size_t r, size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

// Calls f on every vector of the box [-b, b]^m.
void for_box(size_t m, int b, const std::function<void(const IntVector&)>& f) {
    IntVector v(m, Integer(-b));
    for (;;) {
        f(v);
        size_t i = 0;
        while (i < m && v[i] == b) v[i++] = -b;
        if (i == m) return;
        ++v[i];
    }
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto d = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).D;
    CHECK(d == IntMatrix::from_rows({{1, 0}, {0, 6}}));
    CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix::from_rows({{2}})).D == IntMatrix::from_rows({{2}}));
    CHECK(elementary_divisors(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
          std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, r, c);
        if (trial % 3 == 0 && r > 1)  // force rank deficiency
            for (size_t j = 0; j < c; ++j) m.at(r - 1, j) = 2 * m.at(0, j);
        SmithForm s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(s.U.is_unimodular());
        CHECK(s.V.is_unimodular());
        CHECK(s.D.is_diagonal());
        for (size_t i = 0; i + 1 < std::min(r, c); ++i) {
            CHECK(s.D.at(i, i) >= 0);
            if (s.D.at(i, i) != 0) CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
            else CHECK(s.D.at(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("determinant") {
    CHECK(IntMatrix::from_rows({{0, 1}, {1, 0}}).determinant() == -1);
    CHECK(IntMatrix::from_rows({{2, 3, 1}, {4, 1, -2}, {0, 5, 7}}).determinant() == -30);
    CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
}

TEST_CASE("kernel examples") {
    // Hayashi exponent system, n = 3: d_i - d_{n+i} = 0.
    const size_t n = 3;
    IntMatrix hay(n, 2 * n);
    for (size_t i = 0; i < n; ++i) hay.at(i, i) = 1, hay.at(i, n + i) = -1;
    LatticeBasis g = kernel(hay);
    CHECK(g.basis() == std::vector<IntVector>{V({1, 0, 0, 1, 0, 0}), V({0, 1, 0, 0, 1, 0}), V({0, 0, 1, 0, 0, 1})});
    CHECK(is_saturated(g));

    // Jordan exponent system, n = 2: d_2 + d_3 + d_4 = 0, d_4 = 0.
    LatticeBasis j = kernel(IntMatrix::from_rows({{0, 1, 1, 1}, {0, 0, 0, 1}}));
    CHECK(j.basis() == std::vector<IntVector>{V({1, 0, 0, 0}), V({0, 1, -1, 0})});

    // Full-rank system: zero lattice.
    CHECK(kernel(IntMatrix::from_rows({{1, 0, 2, 0}, {0, 1, 0, 2}, {1, 1, 0, 0}, {0, 0, 1, 0}})).rank() == 0);
    CHECK(kernel(IntMatrix(0, 2)).rank() == 2);
}

TEST_CASE("kernel contains every small solution") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 4, -2, 2);
        // Make rows 2 and 3 combinations of rows 0 and 1 so the kernel is nontrivial.
        for (size_t j = 0; j < 4; ++j) {
            m.at(2, j) = m.at(0, j) + m.at(1, j);
            m.at(3, j) = 2 * m.at(0, j) - 3 * m.at(1, j);
        }
        LatticeBasis k = kernel(m);
        for (const auto& v : k.basis()) CHECK(m.apply(v) == IntVector(4));
        for_box(4, 3, [&](const IntVector& x) {
            if (m.apply(x) == IntVector(4)) CHECK(k.contains(x));
        });
    }
}

TEST_CASE("saturation") {
    CHECK(is_saturated(LatticeBasis(2, {V({1, 1})})));
    CHECK_FALSE(is_saturated(LatticeBasis(2, {V({2, 0})})));
    CHECK(is_saturated(LatticeBasis(3)));
    CHECK_FALSE(is_saturated(LatticeBasis(2, {V({1, 1}), V({1, -1})})));
    CHECK_THROWS_AS(LatticeBasis(2, {V({1, 1}), V({2, 2})}), AlgebraError);
}

TEST_CASE("coset reduction") {
    CosetSystem hay(LatticeBasis(2, {V({1, 1})}));
    auto r = hay.reduce(V({3, 1}));
    CHECK(r.rep == V({2, 0}));
    CHECK(r.lattice_part == V({1, 1}));
    CHECK(hay.reduce(V({-2, -2})).rep == V({0, 0}));
    CHECK(hay.reduce(V({0, 0})).lattice_part == V({0, 0}));

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        // Random rank-2 sublattice of Z^4, possibly not saturated.
        std::vector<IntVector> gens(2, IntVector(4));
        for (auto& g : gens)
            for (auto& x : g) x = d(rng) / 2;
        LatticeBasis l = LatticeBasis::span(4, gens);
        CosetSystem cs(l);
        for (const auto& b : l.basis()) CHECK(cs.reduce(b).rep == IntVector(4));
        for (int k = 0; k < 10; ++k) {
            IntVector x(4);
            for (auto& c : x) c = d(rng);
            auto red = cs.reduce(x);
            IntVector sum(4);
            for (size_t i = 0; i < 4; ++i) sum[i] = red.rep[i] + red.lattice_part[i];
            CHECK(sum == x);
            CHECK(l.contains(red.lattice_part));
            CHECK(cs.reduce(red.rep).rep == red.rep);
            IntVector y = x;
            for (const auto& b : l.basis()) {
                Integer f = d(rng);
                for (size_t i = 0; i < 4; ++i) y[i] += f * b[i];
            }
            CHECK(cs.reduce(y).rep == red.rep);
        }
    }
}

TEST_CASE("lattice coordinates") {
    LatticeBasis l(3, {V({1, 1, 0}), V({0, 2, 1})});
    CHECK(l.coordinates(V({2, 0, -1})) == V({2, -1}));
    CHECK_FALSE(l.contains(V({1, 0, 0})));
    CHECK_FALSE(LatticeBasis(1, {V({2})}).contains(V({1})));
    CHECK(l.same_lattice(LatticeBasis(3, {V({1, 3, 1}), V({0, 2, 1})})));
}

TEST_CASE("character kernel against brute force") {
    auto F = [](const char* s) { return factor_parameter(Scalar::parse(s)); };
    // (-1)^x1 = 1 forces x1 even; x2 is free.
    LatticeBasis k = character_kernel({{F("-1"), F("1")}}, 2);
    CHECK(k.same_lattice(LatticeBasis(2, {V({2, 0}), V({0, 1})})));

    std::mt19937 rng(31);
    const char* pool[] = {"-1", "2", "1/2", "-3", "q", "-q^-1", "6", "4/9", "1", "-2*q"};
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<ParamMonomial>> p(2, std::vector<ParamMonomial>(3));
        for (auto& row : p)
            for (auto& e : row) e = F(pool[rng() % 10]);
        LatticeBasis kk = character_kernel(p, 3);
        for_box(3, 3, [&](const IntVector& x) {
            bool trivial = true;
            for (const auto& row : p) {
                Scalar v(1);
                for (size_t j = 0; j < 3; ++j) v *= row[j].to_scalar().pow(x[j].get_si());
                if (!v.is_one()) trivial = false;
            }
            CHECK(kk.contains(x) == trivial);
        });
    }
}
