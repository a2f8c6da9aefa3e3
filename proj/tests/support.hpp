#pragma once

#include <functional>
#include <random>
#include <vector>

#include "tgwa/mtwa.hpp"

namespace testing_support {

using namespace tgwa;

inline Scalar pick(std::mt19937& rng, const std::vector<Scalar>& pool) { return pool[rng() % pool.size()]; }

inline std::vector<Scalar> nonzero_pool() {
    return {Scalar(2), Scalar(3), Scalar(-2), Scalar(Rational(1, 2)), Scalar(Rational(-3, 5)), Scalar::q(),
            Scalar::q_power(-1), Scalar::q_power(2), Scalar(2) * Scalar::q(), Scalar(-1), Scalar(5) * Scalar::q_power(-2)};
}

/// Random valid MTWA parameters.
inline MTWAParams random_params(std::mt19937& rng, size_t n, int k) {
    const auto pool = nonzero_pool();
    MTWAParams p;
    p.n = n;
    p.k = k;
    p.r.assign(n, std::vector<Scalar>(n));
    p.s = p.r;
    p.lambda.assign(n, std::vector<Scalar>(n, Scalar(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                do {
                    p.r[i][i] = pick(rng, pool);
                    p.s[i][i] = pick(rng, pool);
                } while (is_root_of_unity(p.r[i][i] / p.s[i][i]));
            } else {
                p.r[i][j] = pick(rng, pool);
                p.s[i][j] = (k % 2 == 0 && rng() % 2) ? -p.r[i][j] : p.r[i][j];
                if (i < j) {
                    p.lambda[i][j] = pick(rng, pool);
                    p.lambda[j][i] = p.lambda[i][j].inverse();
                }
            }
        }
    return p;
}

inline LaurentPoly random_poly(std::mt19937& rng, size_t arity, size_t terms, int lo, int hi) {
    const std::vector<Scalar> coeffs = {Scalar(1), Scalar(-1), Scalar(2), Scalar(Rational(1, 3)), Scalar::q()};
    std::uniform_int_distribution<int> e(lo, hi);
    LaurentPoly p(arity);
    for (size_t t = 0; t < terms; ++t) {
        Exponent x(arity);
        for (auto& v : x) v = e(rng);
        p.add_term(x, pick(rng, coeffs));
    }
    return p;
}

/// Random element with up to `terms` homogeneous components, degrees in [-b, b]^n.
inline AlgebraElement random_element(std::mt19937& rng, const TGWAlgebra& A, int b, size_t terms, bool laurent) {
    std::uniform_int_distribution<int> d(-b, b);
    AlgebraElement out = A.zero();
    for (size_t t = 0; t < terms; ++t) {
        Degree g(A.n());
        for (auto& x : g) x = d(rng);
        out.add_term(g, A.ring().reduce(random_poly(rng, A.ring().arity(), 2, laurent ? -1 : 0, 1)));
    }
    return out;
}

/// Calls f on every point of [-b, b]^m.
inline void for_box(size_t m, int b, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(m, -b);
    for (;;) {
        f(v);
        size_t i = 0;
        while (i < m && v[i] == b) v[i++] = -b;
        if (i == m) return;
        ++v[i];
    }
}

}  // namespace testing_support
