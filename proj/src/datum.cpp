#include "tgwa/datum.hpp"

#include <sstream>

#include "tgwa/linalg.hpp"

namespace tgwa {

void TGWDatum::validate() const {
    const size_t k = n();
    if (k == 0) throw AlgebraError("datum needs at least one automorphism");
    if (t.size() != k) throw AlgebraError("datum needs one t_i per automorphism");
    if (mu.size() != k) throw AlgebraError("mu must be an n x n matrix");
    for (const auto& row : mu)
        if (row.size() != k) throw AlgebraError("mu must be an n x n matrix");
    for (size_t i = 0; i < k; ++i) {
        if (!(sigma[i].ring() == ring.descriptor())) throw AlgebraError("automorphism defined on a different ring");
        if (t[i].arity() != ring.arity()) throw AlgebraError("t_" + std::to_string(i + 1) + " has wrong arity");
        if (ring.reduce(t[i]).is_zero()) throw AlgebraError("t_" + std::to_string(i + 1) + " is zero");
        for (size_t j = 0; j < k; ++j)
            if (i != j && mu[i][j].is_zero()) throw AlgebraError("mu entries must be nonzero");
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            for (size_t g = 0; g < ring.arity(); ++g) {
                const LaurentPoly x = LaurentPoly::generator(ring.arity(), g);
                if (ring.reduce(sigma[i].apply(sigma[j].apply(x))) != ring.reduce(sigma[j].apply(sigma[i].apply(x))))
                    throw AlgebraError("sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) +
                                       " do not commute on " + ring.descriptor().generators[g]);
            }
}

ConsistencyResult check_consistency(const TGWDatum& d) {
    d.validate();
    const auto& R = d.ring;
    const size_t n = d.n();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            LaurentPoly lhs = R.apply(d.sigma[i], R.apply(d.sigma[j], R.mul(d.t[i], d.t[j])));
            LaurentPoly rhs = (d.mu[i][j] * d.mu[j][i]) * R.mul(R.apply(d.sigma[i], d.t[i]), R.apply(d.sigma[j], d.t[j]));
            if (lhs != rhs) return {false, ConsistencyWitness{i, j, std::nullopt, lhs, rhs}};
        }
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            for (size_t k = i + 1; k < n; ++k) {
                if (i == j || k == j) continue;
                LaurentPoly lhs = R.mul(d.t[j], R.apply(d.sigma[i], R.apply(d.sigma[k], d.t[j])));
                LaurentPoly rhs = R.mul(R.apply(d.sigma[i], d.t[j]), R.apply(d.sigma[k], d.t[j]));
                if (lhs != rhs) return {false, ConsistencyWitness{i, j, k, lhs, rhs}};
            }
    return {};
}

std::string MinimalPolyTable::poly_str(size_t i, size_t j) const {
    const auto& c = coeffs[i][j];
    std::ostringstream os;
    bool first = true;
    for (size_t e = c.size(); e-- > 0;) {
        if (c[e].is_zero()) continue;
        std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
        std::string coef = c[e].str();
        if (!first) os << " + ";
        first = false;
        if (mono.empty())
            os << coef;
        else if (c[e].is_one())
            os << mono;
        else
            os << "(" << coef << ")*" << mono;
    }
    return os.str();
}

MinimalPolyTable finitistic_analysis(const TGWDatum& d, int cap) {
    if (cap < 1) throw AlgebraError("finitistic_analysis: cap must be positive");
    d.validate();
    const size_t n = d.n();
    MinimalPolyTable table;
    table.coeffs.assign(n, std::vector<std::vector<Scalar>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SparseEchelon<Exponent> span;
            LaurentPoly v = d.ring.reduce(d.t[j]);
            int dim = 0;
            for (;;) {
                if (auto c = span.express(v.terms())) {
                    std::vector<Scalar> p(dim + 1);
                    for (int l = 0; l < dim; ++l) p[l] = -(*c)[l];
                    p[dim] = Scalar(1);
                    table.coeffs[i][j] = std::move(p);
                    break;
                }
                if (dim == cap)
                    throw AlgebraError("datum is not finitistic within cap " + std::to_string(cap) + " (sigma_" +
                                       std::to_string(i + 1) + " on t_" + std::to_string(j + 1) + ")");
                span.insert(v.terms());
                ++dim;
                v = d.ring.apply(d.sigma[i], v);
            }
        }
    return table;
}

CartanMatrix cartan_matrix(const MinimalPolyTable& table) {
    const size_t n = table.n();
    CartanMatrix c;
    c.a.assign(n, std::vector<int>(n, 0));
    bool diagonal = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            c.a[i][j] = i == j ? 2 : 1 - table.degree(i, j);
            if (i != j && c.a[i][j] != 0) diagonal = false;
        }
    if (diagonal)
        c.type_label = "(A1)^" + std::to_string(n);
    else if (n == 2 && c.a[0][1] == -1 && c.a[1][0] == -1)
        c.type_label = "A2";
    return c;
}

A1nCertificate a1n_certificate(const TGWDatum& d) {
    d.validate();
    const size_t n = d.n();
    A1nCertificate cert;
    cert.gamma.assign(n, std::vector<Scalar>(n, Scalar(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const LaurentPoly tj = d.ring.reduce(d.t[j]);
            const LaurentPoly img = d.ring.apply(d.sigma[i], tj);
            const auto& [e, c] = *tj.terms().begin();
            const Scalar g = img.coeff(e) / c;
            if (g.is_zero() || img != g * tj)
                throw AlgebraError("datum is not of type (A1)^n: sigma_" + std::to_string(i + 1) + "(t_" +
                                   std::to_string(j + 1) + ") is not a multiple of t_" + std::to_string(j + 1));
            cert.gamma[i][j] = g;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (d.mu[i][j] * d.mu[j][i] != cert.gamma[i][j] * cert.gamma[j][i])
                throw AlgebraError("inconsistent datum: mu_ij mu_ji != gamma_ij gamma_ji for (i,j) = (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return cert;
}

}  // namespace tgwa
