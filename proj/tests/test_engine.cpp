#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "tgwa/presets.hpp"

using namespace tgwa;
using namespace testing_support;

namespace {

AlgebraElement word_in(const TGWAlgebra& A, const Word& w) {
    AlgebraElement out = A.one();
    for (const auto& l : w) out = A.multiply(out, l.x ? A.X(l.index) : A.Y(l.index));
    return out;
}

Word random_word(std::mt19937& rng, size_t n, size_t len) {
    Word w;
    for (size_t i = 0; i < len; ++i) w.push_back({rng() % n, rng() % 2 == 0});
    return w;
}

Word inverse_shape(std::mt19937& rng, const Degree& g) {
    // a shuffled word of degree -g
    Word w;
    for (size_t i = 0; i < g.size(); ++i)
        for (int k = 0; k < std::abs(g[i]); ++k) w.push_back({i, g[i] < 0});
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

void check_associative(const TGWAlgebra& A, std::mt19937& rng, int triples, bool laurent) {
    for (int t = 0; t < triples; ++t) {
        const auto a = random_element(rng, A, 2, 2, laurent);
        const auto b = random_element(rng, A, 2, 2, laurent);
        const auto c = random_element(rng, A, 2, 2, laurent);
        REQUIRE(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
    }
}

}  // namespace

TEST_CASE("weyl algebra from example 3.4") {
    ScalarMatrix mu(2, std::vector<Scalar>(2, Scalar(1)));
    const TGWAlgebra A(example_3_4(2, mu));
    // [Y_i, X_i] = 1 and everything else commutes
    for (size_t i = 0; i < 2; ++i) {
        CHECK(A.multiply(A.Y(i), A.X(i)) - A.multiply(A.X(i), A.Y(i)) == A.one());
        for (size_t j = 0; j < 2; ++j)
            if (i != j) {
                CHECK(A.multiply(A.X(i), A.X(j)) == A.multiply(A.X(j), A.X(i)));
                CHECK(A.multiply(A.X(i), A.Y(j)) == A.multiply(A.Y(j), A.X(i)));
            }
    }
}

TEST_CASE("example 3.4 quantum plane relation") {
    ScalarMatrix mu(2, std::vector<Scalar>(2, Scalar(1)));
    mu[0][1] = Scalar(3);
    mu[1][0] = Scalar(Rational(1, 3));
    const TGWAlgebra A(example_3_4(2, mu));
    CHECK(A.multiply(A.X(0), A.X(1)) == Scalar(Rational(1, 3)) * A.multiply(A.X(1), A.X(0)));
    CHECK(verify_defining_relations(A).ok());
    CHECK(verify_serre_identities(A, finitistic_analysis(A.datum())).ok());
}

TEST_CASE("normal form of monomials") {
    const TGWAlgebra A(build_datum(hayashi_params(2)));
    const auto& t = A.datum().t;
    // Y_1 X_1 = t_1, X_1 Y_1 = sigma_1(t_1)
    CHECK(A.multiply(A.Y(0), A.X(0)) == A.ring_element(t[0]));
    CHECK(A.multiply(A.X(0), A.Y(0)) == A.ring_element(A.datum().sigma[0].apply(t[0])));
    // X_1^2 Y_1 = sigma_1(t_1) X_1... the X_1 part survives with a ring coefficient
    const AlgebraElement e = A.product({A.X(0), A.X(0), A.Y(0)});
    CHECK(e.terms().size() == 1);
    CHECK(e.terms().begin()->first == Degree{1, 0});
    CHECK(e.component({1, 0}) == A.datum().sigma[0].power(2).apply(t[0]));
    CHECK(A.power(A.X(1), 3) == A.monomial({0, 3}));
    CHECK(A.structure_constant({1, 0}, {-1, 0}) == A.datum().sigma[0].apply(t[0]));
}

TEST_CASE("relations on random mtwa algebras") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const MTWAParams p = random_params(rng, 1 + trial % 3, 1 + trial % 3);
        const TGWAlgebra A(build_datum(p));
        const auto rel = verify_defining_relations(A);
        CHECK(rel.ok());
        CHECK(rel.failures() == 0);
        CHECK(verify_serre_identities(A, finitistic_analysis(A.datum())).ok());
        CHECK(verify_mtwa_relations(A, p).ok());
    }
}

TEST_CASE("associativity") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 4; ++trial) {
        const MTWAParams p = random_params(rng, 2 + trial % 2, 1 + trial % 3);
        check_associative(TGWAlgebra(build_datum(p)), rng, 50, true);
    }
    check_associative(TGWAlgebra(quantized_weyl_datum(default_q(2), default_lambda(2))), rng, 50, false);
    const Preset h = build_preset("hayashi", 2);
    check_associative(TGWAlgebra(h.quotient->datum), rng, 50, true);
}

TEST_CASE("engine agrees with the construction on pairings") {
    std::mt19937 rng(29);
    std::vector<TGWDatum> data = {build_datum(random_params(rng, 2, 2)), build_datum(random_params(rng, 3, 1)),
                                  quantized_weyl_datum(default_q(2), default_lambda(2))};
    for (const auto& d : data) {
        const TGWAlgebra A(d);
        const TGWConstruction C(d);
        for (int t = 0; t < 40; ++t) {
            const Word w = random_word(rng, d.n(), 1 + rng() % 4);
            const Word v = inverse_shape(rng, C.degree(w));
            Word wv = w;
            wv.insert(wv.end(), v.begin(), v.end());
            const LaurentPoly lhs = A.graded_pairing(word_in(A, w), word_in(A, v));
            CHECK(lhs == C.degree_zero(C.word(wv)));
            CHECK(A.multiply(word_in(A, w), word_in(A, v)).terms().size() <= 1);
        }
    }
}

TEST_CASE("construction arithmetic") {
    const TGWConstruction C(example_3_5());
    const Letter X1{0, true}, Y1{0, false}, X2{1, true};
    const auto yx = C.word({Y1, X1});
    CHECK(C.degree_zero(yx) == C.datum().t[0]);
    CHECK(C.degree_zero(C.word({X1, Y1})) == C.datum().sigma[0].apply(C.datum().t[0]));
    // associativity of word products
    const auto a = C.word({X1, Y1, X2}), b = C.word({Y1, X2}), c = C.word({X1});
    const auto l = C.multiply(C.multiply(a, b), c), r = C.multiply(a, C.multiply(b, c));
    CHECK(l.terms == r.terms);
    CHECK(C.reduced_words({1, -1}).size() == 1);
    CHECK(C.reduced_words({2, 1}).size() == 3);
}

TEST_CASE("engine rejects data outside its scope") {
    CHECK_THROWS_AS(TGWAlgebra{example_3_5()}, AlgebraError);
    TGWDatum d = build_datum(hayashi_params(2));
    d.mu[0][1] = Scalar(5);
    CHECK_THROWS_AS(TGWAlgebra{d}, AlgebraError);
}
