#include "tgwa/mtwa.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "tgwa/linalg.hpp"

namespace tgwa {

namespace {

std::string idx(size_t i, size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

void check_square(const ScalarMatrix& m, size_t n, const std::string& name) {
    if (m.size() != n) throw AlgebraError(name + " must be an n x n matrix");
    for (const auto& row : m) {
        if (row.size() != n) throw AlgebraError(name + " must be an n x n matrix");
        for (const auto& x : row)
            if (x.is_zero()) throw AlgebraError(name + " entries must be nonzero");
    }
}

Exponent unit_exponent(size_t arity, size_t c, int power = 1) {
    Exponent e(arity, 0);
    e[c] = power;
    return e;
}

// Factor by which sigma_i scales generator c of R.
Scalar generator_factor(const MTWAParams& p, size_t i, size_t c) {
    return c < p.n ? p.r[i][c].inverse() : p.s[i][c - p.n].inverse();
}

}  // namespace

void MTWAParams::validate() const {
    if (n == 0) throw AlgebraError("n must be positive");
    if (k == 0) throw AlgebraError("k must be nonzero");
    check_square(r, n, "r");
    check_square(s, n, "s");
    check_square(lambda, n, "lambda");
    for (size_t i = 0; i < n; ++i) {
        if (!lambda[i][i].is_one()) throw AlgebraError("condition lambda_ii = 1 fails for i = " + std::to_string(i + 1));
        for (size_t j = i + 1; j < n; ++j)
            if (!(lambda[i][j] * lambda[j][i]).is_one())
                throw AlgebraError("condition lambda_ij lambda_ji = 1 fails for ij = " + idx(i, j));
    }
    for (size_t i = 0; i < n; ++i)
        if (is_root_of_unity(r[i][i] / s[i][i]))
            throw AlgebraError("condition r_ii/s_ii not a root of unity fails for i = " + std::to_string(i + 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && r[i][j].pow(k) != s[i][j].pow(k))
                throw AlgebraError("condition r_ij^k = s_ij^k fails for ij = " + idx(i, j));
}

RingDescriptor mtwa_ring(size_t n) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
    for (size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return RingDescriptor::laurent(std::move(names));
}

TGWDatum build_datum(const MTWAParams& p) {
    p.validate();
    const size_t n = p.n, m = 2 * n;
    const RingDescriptor desc = mtwa_ring(n);
    TGWDatum d;
    d.ring = BaseRing(desc);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> f(m);
        for (size_t c = 0; c < m; ++c) f[c] = generator_factor(p, i, c);
        d.sigma.push_back(RingAutomorphism::scaling(desc, f));
    }
    for (size_t i = 0; i < n; ++i) {
        const Scalar rk = p.r[i][i].pow(p.k), sk = p.s[i][i].pow(p.k);
        const Scalar den = (rk - sk).inverse();
        LaurentPoly t = LaurentPoly::monomial(unit_exponent(m, i, p.k), rk * den);
        t.add_term(unit_exponent(m, n + i, p.k), -(sk * den));
        d.t.push_back(std::move(t));
    }
    d.mu.assign(n, std::vector<Scalar>(n, Scalar(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) d.mu[i][j] = p.r[j][i].pow(-p.k) * p.lambda[j][i];
    return d;
}

std::vector<std::vector<ParamMonomial>> character_matrix(const MTWAParams& p) {
    p.validate();
    std::vector<std::vector<ParamMonomial>> out(p.n);
    for (size_t i = 0; i < p.n; ++i)
        for (size_t c = 0; c < 2 * p.n; ++c) out[i].push_back(factor_parameter(generator_factor(p, i, c)));
    return out;
}

InvariantRing invariant_lattice(const MTWAParams& p) {
    const size_t m = 2 * p.n;
    InvariantRing inv{character_kernel(character_matrix(p), m), {}};
    for (const auto& b : inv.lattice.basis()) inv.generators.push_back(LaurentPoly::monomial(to_small_vector(b)));
    return inv;
}

bool is_domain_quotient(const MTWAParams& p) { return is_saturated(invariant_lattice(p).lattice); }

LatticeBasis action_kernel(const MTWAParams& p) {
    const auto chars = character_matrix(p);
    std::vector<std::vector<ParamMonomial>> rows(2 * p.n, std::vector<ParamMonomial>(p.n));
    for (size_t i = 0; i < p.n; ++i)
        for (size_t c = 0; c < 2 * p.n; ++c) rows[c][i] = chars[i][c];
    return character_kernel(rows, p.n);
}

CosetReducer::CosetReducer(LatticeBasis lattice, std::vector<Scalar> values)
    : cosets_(std::move(lattice)), values_(std::move(values)) {
    if (values_.size() != cosets_.lattice().rank())
        throw AlgebraError("ideal point needs one value per lattice generator");
    for (size_t j = 0; j < values_.size(); ++j)
        if (values_[j].is_zero())
            throw AlgebraError("invalid maximal ideal: value " + std::to_string(j + 1) + " is zero");
}

Scalar CosetReducer::character(const IntVector& g) const {
    const IntVector c = lattice().coordinates(g);
    Scalar out(1);
    for (size_t j = 0; j < c.size(); ++j) {
        if (!c[j].fits_slong_p()) throw AlgebraError("lattice coordinate out of range");
        out *= values_[j].pow(c[j].get_si());
    }
    return out;
}

LaurentPoly CosetReducer::reduce(const LaurentPoly& p) const {
    LaurentPoly out(p.arity());
    for (const auto& [e, coeff] : p.terms()) {
        auto r = cosets_.reduce(to_int_vector(e));
        out.add_term(to_small_vector(r.rep), coeff * character(r.lattice_part));
    }
    return out;
}

SimpleQuotient build_quotient(const MTWAParams& p, const std::vector<Scalar>& point) {
    SimpleQuotient q{p, invariant_lattice(p), point, nullptr, build_datum(p)};
    if (point.size() != q.invariants.lattice.rank())
        throw AlgebraError("ideal point has " + std::to_string(point.size()) + " values, lattice has rank " +
                           std::to_string(q.invariants.lattice.rank()));
    if (q.invariants.lattice.rank() == 0) return q;
    q.reducer = std::make_shared<CosetReducer>(q.invariants.lattice, point);
    q.datum.ring = BaseRing(q.datum.ring.descriptor(), q.reducer);
    for (auto& t : q.datum.t) t = q.datum.ring.reduce(t);
    return q;
}

bool CertificateReport::ok() const {
    for (const auto& it : items)
        if (!it.passed) return false;
    return true;
}

std::vector<IntVector> coset_box(const CosetSystem& cs, int radius) {
    const size_t m = cs.lattice().ambient_rank();
    std::vector<IntVector> out;
    std::vector<int> x(m, -radius);
    for (;;) {
        const IntVector v = to_int_vector(x);
        if (cs.reduce(v).rep == v) out.push_back(v);
        size_t c = 0;
        while (c < m && x[c] == radius) x[c++] = -radius;
        if (c == m) break;
        ++x[c];
    }
    return out;
}

CertificateReport simplicity_certificate(const SimpleQuotient& q, int depth, int radius) {
    const MTWAParams& p = q.params;
    const size_t n = p.n, m = 2 * n;
    const BaseRing& R = q.datum.ring;
    const TGWDatum free = build_datum(p);
    CertificateReport rep;

    for (size_t i = 0; i < n; ++i) {
        const Scalar r = p.r[i][i], s = p.s[i][i];
        const Scalar den = r.pow(p.k) - s.pow(p.k);
        CertificateItem item{"unit identity i=" + std::to_string(i + 1), true, ""};
        RingAutomorphism sd = RingAutomorphism::identity(free.ring.descriptor());
        for (int d = 1; d <= depth; ++d) {
            sd = free.sigma[i].compose(sd);
            const LaurentPoly lhs = r.pow(-static_cast<long>(d) * p.k) * free.t[i] - sd.apply(free.t[i]);
            const Scalar coef = (-(r.pow(-static_cast<long>(d) * p.k) * s.pow(p.k)) + s.pow(p.k - d * p.k)) / den;
            const LaurentPoly rhs = LaurentPoly::monomial(unit_exponent(m, n + i, p.k), coef);
            if (coef.is_zero() || lhs != rhs || !R.is_unit(lhs)) {
                item.passed = false;
                item.detail = "fails at d = " + std::to_string(d);
                break;
            }
        }
        if (item.passed) item.detail = "d = 1.." + std::to_string(depth);
        rep.items.push_back(item);
    }

    {
        const LatticeBasis ker = action_kernel(p);
        CertificateItem item{"faithful action", ker.rank() == 0, ""};
        for (size_t c = 0; c < m && item.passed; ++c)
            if (R.generator(c).is_zero()) item.passed = false;
        item.detail = item.passed ? "stabilizer is trivial" : "stabilizer has rank " + std::to_string(ker.rank());
        rep.items.push_back(item);
    }

    const CosetSystem cs = q.reducer ? q.reducer->cosets() : CosetSystem(LatticeBasis(m));
    const std::vector<IntVector> box = coset_box(cs, radius);
    for (size_t i = 0; i < n; ++i) {
        SparseEchelon<Exponent> span;
        bool injective = true;
        for (const auto& e : box) {
            const LaurentPoly img = R.mul(q.datum.t[i], LaurentPoly::monomial(to_small_vector(e)));
            if (!span.insert(img.terms())) {
                injective = false;
                break;
            }
        }
        rep.items.push_back({"regular t" + std::to_string(i + 1), injective,
                             std::to_string(box.size()) + " coset monomials"});
    }

    {
        CertificateItem item{"ideal correspondence", true, ""};
        const auto& basis = q.invariants.lattice.basis();
        const size_t g = basis.size();
        size_t checked = 0;
        if (g > 0) {
            std::vector<int> c(g, -radius);
            for (;;) {
                IntVector d(m, 0);
                Scalar val(1);
                for (size_t j = 0; j < g; ++j) {
                    for (size_t l = 0; l < m; ++l) d[l] += c[j] * basis[j][l];
                    val *= q.point[j].pow(c[j]);
                }
                const LaurentPoly u = LaurentPoly::monomial(to_small_vector(d));
                if (!R.reduce(u - LaurentPoly::constant(m, val)).is_zero()) item.passed = false;
                for (size_t i = 0; i < n; ++i)
                    if (free.sigma[i].apply(u) != u) item.passed = false;
                ++checked;
                size_t j = 0;
                while (j < g && c[j] == radius) c[j++] = -radius;
                if (j == g) break;
                ++c[j];
            }
        }
        for (const auto& e : box) {
            if (std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; })) continue;
            const LaurentPoly u = LaurentPoly::monomial(to_small_vector(e));
            if (R.reduce(u).as_constant()) item.passed = false;
            for (size_t i = 0; i < n; ++i)
                if (R.reduce(free.sigma[i].apply(u)) != R.apply(free.sigma[i], R.reduce(u))) item.passed = false;
        }
        item.detail = std::to_string(checked) + " invariant monomials, " + std::to_string(box.size()) + " cosets";
        rep.items.push_back(item);
    }
    return rep;
}

VerificationReport verify_mtwa_relations(const TGWAlgebra& a, const MTWAParams& p) {
    const size_t n = p.n, m = 2 * n;
    const int k = p.k;
    const auto& R = a.ring();
    VerificationReport rep;
    auto mul = [&](const AlgebraElement& x, const AlgebraElement& y) { return a.multiply(x, y); };
    auto ring = [&](const LaurentPoly& r) { return a.ring_element(R.reduce(r)); };
    auto gen = [&](size_t c) { return ring(LaurentPoly::generator(m, c)); };
    auto add = [&](const std::string& name, const AlgebraElement& res) {
        rep.checks.push_back({name, res, res.is_zero()});
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const std::string ij = idx(i, j);
            const auto Xi = a.X(i), Xj = a.X(j), Yi = a.Y(i), Yj = a.Y(j);
            add("X" + ij, mul(Xi, Xj) - ((p.r[j][i] / p.r[i][j]).pow(k) * p.lambda[i][j]) * mul(Xj, Xi));
            add("Y" + ij, mul(Yi, Yj) - p.lambda[i][j] * mul(Yj, Yi));
            if (i != j) add("XY" + ij, mul(Xi, Yj) - (p.r[j][i].pow(-k) * p.lambda[j][i]) * mul(Yj, Xi));
            const auto uj = gen(j), vj = gen(n + j);
            add("Xu" + ij, mul(Xi, uj) - p.r[i][j].inverse() * mul(uj, Xi));
            add("Xv" + ij, mul(Xi, vj) - p.s[i][j].inverse() * mul(vj, Xi));
            add("Yu" + ij, mul(Yi, uj) - p.r[i][j] * mul(uj, Yi));
            add("Yv" + ij, mul(Yi, vj) - p.s[i][j] * mul(vj, Yi));
        }
    for (size_t i = 0; i < n; ++i) {
        const Scalar r = p.r[i][i], s = p.s[i][i];
        const Scalar den = (r.pow(k) - s.pow(k)).inverse();
        LaurentPoly t = LaurentPoly::monomial(unit_exponent(m, i, k), (r.pow(k) * den));
        t.add_term(unit_exponent(m, n + i, k), -(s.pow(k) * den));
        LaurentPoly st = LaurentPoly::monomial(unit_exponent(m, i, k), den);
        st.add_term(unit_exponent(m, n + i, k), -den);
        const std::string ii = std::to_string(i + 1);
        add("YX" + ii, mul(a.Y(i), a.X(i)) - ring(t));
        add("XY" + ii + ii, mul(a.X(i), a.Y(i)) - ring(st));
    }
    return rep;
}

bool elimination_step_holds(const TGWAlgebra& alg, const MTWAParams& p, const AlgebraElement& a_g,
                            const AlgebraElement& a_h) {
    if (a_g.terms().size() != 1 || a_h.terms().size() != 1) throw AlgebraError("components must be homogeneous");
    const Degree g = a_g.terms().begin()->first, h = a_h.terms().begin()->first;
    if (g == h) throw AlgebraError("components must have different degrees");
    const size_t m = 2 * p.n;
    auto xi = [&](const Degree& deg, size_t c) {
        Scalar out(1);
        for (size_t i = 0; i < p.n; ++i) out *= generator_factor(p, i, c).pow(deg[i]);
        return out;
    };
    for (size_t c = 0; c < m; ++c) {
        const Scalar xg = xi(g, c), xh = xi(h, c);
        if (xg == xh) continue;
        const AlgebraElement a = a_g + a_h;
        const AlgebraElement u = alg.ring_element(alg.ring().generator(c));
        const AlgebraElement uinv =
            alg.ring_element(alg.ring().reduce(LaurentPoly::generator(m, c, -1)));
        const AlgebraElement b = xg * a - alg.product({uinv, a, u});
        AlgebraElement expect = (xg - xh) * a_h;
        return b.component(g).is_zero() && b == expect;
    }
    return false;
}

}  // namespace tgwa
