#include "tgwa/presets.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tgwa {

namespace {

std::string num(size_t i) { return std::to_string(i + 1); }

ScalarMatrix ones(size_t n) { return ScalarMatrix(n, std::vector<Scalar>(n, Scalar(1))); }

// (x - a)(x - b), lowest degree first.
std::vector<Scalar> quadratic(const Scalar& a, const Scalar& b) { return {a * b, -(a + b), Scalar(1)}; }
std::vector<Scalar> linear(const Scalar& a) { return {-a, Scalar(1)}; }

std::vector<std::vector<std::vector<Scalar>>> diagonal_type(size_t n, const std::vector<std::vector<Scalar>>& diag,
                                                            const std::function<Scalar(size_t, size_t)>& gamma) {
    std::vector<std::vector<std::vector<Scalar>>> out(n, std::vector<std::vector<Scalar>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = i == j ? diag[i] : linear(gamma(i, j));
    return out;
}

}  // namespace

MTWAParams benkart_params(const std::vector<Scalar>& r, const std::vector<Scalar>& s) {
    if (r.size() != s.size() || r.empty()) throw AlgebraError("benkart parameters need n values of r and s");
    const size_t n = r.size();
    MTWAParams p;
    p.n = n;
    p.k = 2;
    p.r = ones(n);
    p.s = ones(n);
    p.lambda = ones(n);
    for (size_t i = 0; i < n; ++i) {
        p.r[i][i] = r[i];
        p.s[i][i] = s[i];
    }
    p.validate();
    return p;
}

MTWAParams hayashi_params(size_t n) {
    return benkart_params(std::vector<Scalar>(n, Scalar::q_power(-1)), std::vector<Scalar>(n, Scalar::q()));
}

MTWAParams generic_benkart_params(size_t n) {
    return benkart_params(std::vector<Scalar>(n, Scalar(2)), std::vector<Scalar>(n, Scalar(3)));
}

MTWAParams jordan_params(const std::vector<Scalar>& q, const ScalarMatrix& lambda) {
    const size_t n = q.size();
    if (n == 0) throw AlgebraError("jordan parameters need at least one q_i");
    for (const auto& x : q)
        if (x.is_zero() || is_root_of_unity(x)) throw AlgebraError("q_i must be nonzero and not a root of unity");
    MTWAParams p;
    p.n = n;
    p.k = 1;
    p.r = ones(n);
    p.s = ones(n);
    p.lambda = lambda;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (j > i) p.r[i][j] = q[i].inverse();
            if (j >= i) p.s[i][j] = q[i].inverse();
        }
    p.validate();
    return p;
}

std::vector<Scalar> jordan_point(const std::vector<Scalar>& q) {
    std::vector<Scalar> c;
    for (size_t i = 0; i < q.size(); ++i) c.push_back(i == 0 ? -q[0].inverse() : q[i].inverse());
    return c;
}

std::vector<Scalar> default_q(size_t n) {
    std::vector<Scalar> q;
    for (size_t i = 1; i <= n; ++i) q.push_back(Scalar::q_power(static_cast<int>(i)));
    return q;
}

ScalarMatrix default_lambda(size_t n) {
    ScalarMatrix l = ones(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) l[i][j] = Scalar(Rational(static_cast<long>(i + 2), static_cast<long>(j + 2)));
    return l;
}

TGWDatum quantized_weyl_datum(const std::vector<Scalar>& q, const ScalarMatrix& lambda) {
    const size_t n = q.size();
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("s" + num(i));
    const RingDescriptor P = RingDescriptor::polynomial(names);
    auto s = [&](size_t j) { return LaurentPoly::generator(n, j); };
    const LaurentPoly one = LaurentPoly::constant(n, Scalar(1));
    TGWDatum d;
    d.ring = BaseRing(P);
    for (size_t i = 0; i < n; ++i) {
        std::vector<LaurentPoly> fwd, inv;
        LaurentPoly lower(n);  // sum_{k<i} (q_k - 1) s_k
        for (size_t k = 0; k < i; ++k) lower += (q[k] - Scalar(1)) * s(k);
        for (size_t j = 0; j < n; ++j) {
            if (j < i) {
                fwd.push_back(s(j));
                inv.push_back(s(j));
            } else if (j == i) {
                fwd.push_back(one + q[i] * s(i) + lower);
                inv.push_back(q[i].inverse() * (s(i) - one - lower));
            } else {
                fwd.push_back(q[i] * s(j));
                inv.push_back(q[i].inverse() * s(j));
            }
        }
        d.sigma.emplace_back(P, fwd, inv);
        d.t.push_back(s(i));
    }
    d.mu = ones(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i < j)
                d.mu[i][j] = lambda[j][i];
            else if (i > j)
                d.mu[i][j] = q[j] * lambda[j][i];
    d.validate();
    return d;
}

TGWDatum example_3_4(size_t n, const ScalarMatrix& mu) {
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("t" + num(i));
    const RingDescriptor R = RingDescriptor::polynomial(names);
    const LaurentPoly one = LaurentPoly::constant(n, Scalar(1));
    TGWDatum d;
    d.ring = BaseRing(R);
    for (size_t i = 0; i < n; ++i) {
        std::vector<LaurentPoly> fwd, inv;
        for (size_t j = 0; j < n; ++j) {
            const LaurentPoly t = LaurentPoly::generator(n, j);
            fwd.push_back(i == j ? t - one : t);
            inv.push_back(i == j ? t + one : t);
        }
        d.sigma.emplace_back(R, fwd, inv);
        d.t.push_back(LaurentPoly::generator(n, i));
    }
    d.mu = mu;
    d.validate();
    return d;
}

TGWDatum example_3_5() {
    const RingDescriptor R = RingDescriptor::polynomial({"H"});
    const LaurentPoly H = LaurentPoly::generator(1, 0), one = LaurentPoly::constant(1, Scalar(1));
    TGWDatum d;
    d.ring = BaseRing(R);
    d.sigma.emplace_back(R, std::vector<LaurentPoly>{H + one}, std::vector<LaurentPoly>{H - one});
    d.sigma.emplace_back(R, std::vector<LaurentPoly>{H - one}, std::vector<LaurentPoly>{H + one});
    d.t = {H, H + one};
    d.mu = ones(2);
    d.validate();
    return d;
}

std::vector<std::string> preset_names() {
    return {"benkart", "hayashi", "quantized-weyl", "jordan", "example-3.4", "example-3.5"};
}

Preset build_preset(const std::string& name, size_t n) {
    if (n == 0) throw AlgebraError("preset rank must be positive");
    Preset p;
    p.name = name;
    p.n = n;
    auto mtwa_facts = [&](const MTWAParams& m) {
        p.params = m;
        p.datum = build_datum(m);
        std::vector<std::vector<Scalar>> diag;
        for (size_t i = 0; i < n; ++i)
            diag.push_back(quadratic(m.r[i][i].pow(-m.k), m.s[i][i].pow(-m.k)));
        p.minimal_polys = diagonal_type(n, diag, [&](size_t i, size_t j) { return m.r[i][j].pow(-m.k); });
        p.type_label = "(A1)^" + std::to_string(n);
    };
    if (name == "benkart") {
        mtwa_facts(generic_benkart_params(n));
        p.invariants = LatticeBasis(2 * n);
    } else if (name == "hayashi") {
        mtwa_facts(hayashi_params(n));
        std::vector<IntVector> w;
        for (size_t i = 0; i < n; ++i) {
            IntVector d(2 * n, 0);
            d[i] = d[n + i] = 1;
            w.push_back(d);
        }
        p.invariants = LatticeBasis(2 * n, w);
        p.quotient = build_quotient(*p.params, std::vector<Scalar>(n, Scalar(1)));
    } else if (name == "jordan") {
        p.q = default_q(n);
        mtwa_facts(jordan_params(p.q, default_lambda(n)));
        std::vector<IntVector> w;
        for (size_t i = 0; i < n; ++i) {
            IntVector d(2 * n, 0);
            d[i] = 1;
            if (i > 0) d[n + i - 1] = -1;
            w.push_back(d);
        }
        p.invariants = LatticeBasis(2 * n, w);
        p.quotient = build_quotient(*p.params, jordan_point(p.q));
    } else if (name == "quantized-weyl") {
        p.q = default_q(n);
        p.datum = quantized_weyl_datum(p.q, default_lambda(n));
        std::vector<std::vector<Scalar>> diag;
        for (size_t i = 0; i < n; ++i) diag.push_back(quadratic(p.q[i], Scalar(1)));
        p.minimal_polys = diagonal_type(n, diag, [&](size_t i, size_t j) { return i < j ? p.q[i] : Scalar(1); });
        p.type_label = "(A1)^" + std::to_string(n);
    } else if (name == "example-3.4") {
        ScalarMatrix mu = ones(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) mu[i][j] = Scalar(Rational(static_cast<long>(i + 1), static_cast<long>(j + 1)));
        p.datum = example_3_4(n, mu);
        std::vector<std::vector<Scalar>> diag(n, quadratic(Scalar(1), Scalar(1)));
        p.minimal_polys = diagonal_type(n, diag, [](size_t, size_t) { return Scalar(1); });
        p.type_label = "(A1)^" + std::to_string(n);
    } else if (name == "example-3.5") {
        p.n = 2;
        p.datum = example_3_5();
        p.minimal_polys.assign(2, std::vector<std::vector<Scalar>>(2, quadratic(Scalar(1), Scalar(1))));
        p.type_label = "A2";
    } else {
        throw AlgebraError("unknown preset '" + name + "'");
    }
    return p;
}

CertificateReport check_preset(const Preset& p) {
    CertificateReport rep;
    const auto cons = check_consistency(p.datum);
    rep.items.push_back({"consistency", cons.consistent, ""});
    const MinimalPolyTable table = finitistic_analysis(p.datum);
    bool same = table.coeffs == p.minimal_polys;
    std::string detail;
    for (size_t i = 0; i < table.n(); ++i)
        for (size_t j = 0; j < table.n(); ++j)
            detail += (detail.empty() ? "" : "; ") + std::string("p") + num(i) + num(j) + " = " + table.poly_str(i, j);
    rep.items.push_back({"minimal polynomials", same, detail});
    const CartanMatrix c = cartan_matrix(table);
    rep.items.push_back({"cartan type", c.type_label == p.type_label, c.type_label});
    if (p.params && p.invariants) {
        const InvariantRing inv = invariant_lattice(*p.params);
        std::string gens;
        for (const auto& g : inv.generators)
            gens += (gens.empty() ? "" : ", ") + g.str(p.datum.ring.descriptor());
        rep.items.push_back({"invariant lattice", inv.lattice.same_lattice(*p.invariants), gens.empty() ? "0" : gens});
    }
    return rep;
}

TGWDatum gwa_datum(const std::vector<Scalar>& r, const std::vector<Scalar>& s) {
    const size_t n = r.size();
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("rho" + num(i));
    for (size_t i = 0; i < n; ++i) names.push_back("sigma" + num(i));
    const RingDescriptor D = RingDescriptor::laurent(names);
    TGWDatum d;
    d.ring = BaseRing(D);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> f(2 * n, Scalar(1));
        f[i] = r[i].inverse();
        f[n + i] = s[i].inverse();
        d.sigma.push_back(RingAutomorphism::scaling(D, f));
        const Scalar den = (r[i].pow(2) - s[i].pow(2)).inverse();
        d.t.push_back(r[i].pow(2) * den * LaurentPoly::generator(2 * n, i, 2) -
                      s[i].pow(2) * den * LaurentPoly::generator(2 * n, n + i, 2));
    }
    d.mu = ones(n);
    d.validate();
    return d;
}

VerificationReport verify_gwa_realization(const std::vector<Scalar>& r, const std::vector<Scalar>& s) {
    const size_t n = r.size();
    const TGWAlgebra A(gwa_datum(r, s));
    VerificationReport rep;
    auto add = [&](const std::string& name, const AlgebraElement& res) {
        rep.checks.push_back({name, res, res.is_zero()});
    };
    auto mul = [&](const AlgebraElement& a, const AlgebraElement& b) { return A.multiply(a, b); };
    auto ring = [&](const LaurentPoly& p) { return A.ring_element(p); };
    auto rho = [&](size_t i, int e = 1) { return LaurentPoly::generator(2 * n, i, e); };
    auto sig = [&](size_t i, int e = 1) { return LaurentPoly::generator(2 * n, n + i, e); };
    for (size_t i = 0; i < n; ++i) {
        add("R1 rho" + num(i), mul(ring(rho(i)), ring(rho(i, -1))) - A.one());
        add("R1 sigma" + num(i), mul(ring(sig(i)), ring(sig(i, -1))) - A.one());
        for (size_t j = 0; j < n; ++j) {
            const Scalar ri = i == j ? r[i] : Scalar(1), si = i == j ? s[i] : Scalar(1);
            const std::string ij = num(i) + num(j);
            add("R2 x" + ij, mul(ring(rho(i)), A.X(j)) - ri * mul(A.X(j), ring(rho(i))));
            add("R2 y" + ij, mul(ring(rho(i)), A.Y(j)) - ri.inverse() * mul(A.Y(j), ring(rho(i))));
            add("R3 x" + ij, mul(ring(sig(i)), A.X(j)) - si * mul(A.X(j), ring(sig(i))));
            add("R3 y" + ij, mul(ring(sig(i)), A.Y(j)) - si.inverse() * mul(A.Y(j), ring(sig(i))));
            add("R4 x" + ij, mul(A.X(i), A.X(j)) - mul(A.X(j), A.X(i)));
            add("R4 y" + ij, mul(A.Y(i), A.Y(j)) - mul(A.Y(j), A.Y(i)));
            if (i != j) add("R4 yx" + ij, mul(A.Y(i), A.X(j)) - mul(A.X(j), A.Y(i)));
        }
        const AlgebraElement yx = mul(A.Y(i), A.X(i)), xy = mul(A.X(i), A.Y(i));
        add("R5a " + num(i), yx - r[i].pow(2) * xy - ring(sig(i, 2)));
        add("R5b " + num(i), yx - s[i].pow(2) * xy - ring(rho(i, 2)));
        const Scalar den = (r[i].pow(2) - s[i].pow(2)).inverse();
        add("R5' yx " + num(i), yx - ring(r[i].pow(2) * den * rho(i, 2) - s[i].pow(2) * den * sig(i, 2)));
        add("R5' xy " + num(i), xy - ring(den * rho(i, 2) - den * sig(i, 2)));
        const LaurentPoly phit = A.datum().sigma[i].apply(A.datum().t[i]);
        add("phi(t) " + num(i), ring(phit - (den * rho(i, 2) - den * sig(i, 2))));
    }
    const TGWDatum m = build_datum(benkart_params(r, s));
    bool same = m.t == A.datum().t && m.mu == A.datum().mu;
    for (size_t i = 0; i < n; ++i)
        same = same && m.sigma[i].forward_images() == A.datum().sigma[i].forward_images();
    rep.checks.push_back({"matches benkart datum", A.zero(), same});
    return rep;
}

CertificateReport verify_example_3_5(int box) {
    const TGWConstruction C(example_3_5());
    const size_t n = 2;
    auto w = [&](std::initializer_list<Letter> l) { return C.word(Word(l)); };
    const Letter X1{0, true}, X2{1, true}, Y1{0, false}, Y2{1, false};
    // a^2 b - 2 a b a + b a^2 with coefficient c on the middle term
    auto serre = [&](Letter a, Letter b, long c) {
        return C.add(C.add(w({a, a, b}), C.scale(Scalar(-c), w({a, b, a}))), w({b, a, a}));
    };
    struct Candidate {
        std::string name;
        TGWConstruction::Element e;
        Degree deg;
        bool expect_zero;
    };
    const std::vector<Candidate> cands = {
        {"X1^2 X2", serre(X1, X2, 2), {2, 1}, true},
        {"X2^2 X1", serre(X2, X1, 2), {1, 2}, true},
        {"Y1^2 Y2", serre(Y1, Y2, 2), {-2, -1}, true},
        {"Y2^2 Y1", serre(Y2, Y1, 2), {-1, -2}, true},
        {"perturbed X1^2 X2", serre(X1, X2, 3), {2, 1}, false},
    };
    CertificateReport rep;
    for (const auto& cand : cands) {
        bool annihilated = true;
        size_t pairs = 0;
        std::vector<int> b(n, -box);
        for (;;) {
            Degree cdeg(n);
            for (size_t i = 0; i < n; ++i) cdeg[i] = -b[i] - cand.deg[i];
            for (const auto& bw : C.reduced_words(b))
                for (const auto& cw : C.reduced_words(cdeg)) {
                    ++pairs;
                    if (!C.degree_zero(C.multiply(C.multiply(C.word(bw), cand.e), C.word(cw))).is_zero())
                        annihilated = false;
                }
            size_t i = 0;
            while (i < n && b[i] == box) b[i++] = -box;
            if (i == n) break;
            ++b[i];
        }
        rep.items.push_back({cand.name, annihilated == cand.expect_zero,
                             std::string(annihilated ? "in" : "not in") + " the graded ideal, " +
                                 std::to_string(pairs) + " pairings"});
    }
    return rep;
}

ZLocalization::ZLocalization(std::vector<Scalar> q) : q_(std::move(q)) {
    const size_t m = n();
    const TGWDatum d = quantized_weyl_datum(q_, ones(m));
    ring_ = d.ring.descriptor();
    tau_ = d.sigma;
    z_.push_back(LaurentPoly::constant(m, Scalar(1)));
    for (size_t i = 0; i < m; ++i) z_.push_back(z_.back() + (q_[i] - Scalar(1)) * LaurentPoly::generator(m, i));
    tau_z_.assign(m, std::vector<Scalar>(m + 1, Scalar(1)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 1; j <= m; ++j) {
            const LaurentPoly img = tau_[i].apply(z_[j]);
            const Scalar c = img.coeff(Exponent(m, 0));
            if (img != c * z_[j])
                throw AlgebraError("tau_" + num(i) + "(z_" + std::to_string(j) + ") is not a multiple of z_" +
                                   std::to_string(j));
            tau_z_[i][j] = c;
        }
}

LaurentPoly ZLocalization::z_monomial(const std::vector<int>& e) const {
    LaurentPoly out = LaurentPoly::constant(n(), Scalar(1));
    for (size_t j = 0; j < n(); ++j) {
        if (e[j] < 0) throw AlgebraError("negative z exponent in numerator");
        out = out * z_[j + 1].pow(static_cast<unsigned>(e[j]));
    }
    return out;
}

ZFraction ZLocalization::make(const LaurentPoly& a, std::vector<int> den) const {
    if (den.empty()) den.assign(n(), 0);
    ZFraction f{a, den};
    for (size_t j = 0; j < n(); ++j)
        if (f.den[j] < 0) {
            std::vector<int> e(n(), 0);
            e[j] = -f.den[j];
            f.num = f.num * z_monomial(e);
            f.den[j] = 0;
        }
    return f;
}

ZFraction ZLocalization::constant(const Scalar& c) const { return make(LaurentPoly::constant(n(), c)); }

ZFraction ZLocalization::z_power(size_t j, int e, const Scalar& c) const {
    if (j == 0) return constant(c);
    std::vector<int> den(n(), 0);
    den[j - 1] = -e;
    return make(LaurentPoly::constant(n(), c), den);
}

ZFraction ZLocalization::add(const ZFraction& a, const ZFraction& b) const {
    std::vector<int> m(n()), ea(n()), eb(n());
    for (size_t j = 0; j < n(); ++j) {
        m[j] = std::max(a.den[j], b.den[j]);
        ea[j] = m[j] - a.den[j];
        eb[j] = m[j] - b.den[j];
    }
    return {a.num * z_monomial(ea) + b.num * z_monomial(eb), m};
}

ZFraction ZLocalization::mul(const ZFraction& a, const ZFraction& b) const {
    std::vector<int> d(n());
    for (size_t j = 0; j < n(); ++j) d[j] = a.den[j] + b.den[j];
    return {a.num * b.num, d};
}

bool ZLocalization::equal(const ZFraction& a, const ZFraction& b) const {
    const ZFraction diff = add(a, {-b.num, b.den});
    return diff.num.is_zero();
}

ZFraction ZLocalization::tau(size_t i, const ZFraction& a) const {
    Scalar c(1);
    for (size_t j = 0; j < n(); ++j) c *= tau_z_[i][j + 1].pow(-a.den[j]);
    return {c * tau_[i].apply(a.num), a.den};
}

std::string ZLocalization::str(const ZFraction& a) const {
    std::ostringstream os;
    os << "(" << a.num.str(ring_) << ")";
    for (size_t j = 0; j < n(); ++j)
        if (a.den[j] != 0) os << " / z" << j + 1 << "^" << a.den[j];
    return os.str();
}

CertificateReport verify_theoremC(const std::vector<Scalar>& q, const ScalarMatrix& lambda) {
    const size_t n = q.size(), m = 2 * n;
    const ZLocalization Z(q);
    const MTWAParams params = jordan_params(q, lambda);
    const SimpleQuotient quot = build_quotient(params, jordan_point(q));
    const TGWDatum free = build_datum(params);
    const BaseRing& RJ = quot.datum.ring;
    CertificateReport rep;

    // psi(u_i) = -q_i^-1 z_{i-1}, psi(v_i) = -z_i
    std::vector<ZFraction> img, img_inv;
    for (size_t i = 0; i < n; ++i) {
        img.push_back(Z.z_power(i, 1, -q[i].inverse()));
        img_inv.push_back(Z.z_power(i, -1, -q[i]));
    }
    for (size_t i = 0; i < n; ++i) {
        img.push_back(Z.z_power(i + 1, 1, Scalar(-1)));
        img_inv.push_back(Z.z_power(i + 1, -1, Scalar(-1)));
    }
    auto psi = [&](const LaurentPoly& p) {
        ZFraction out = Z.constant(Scalar(0));
        for (const auto& [e, c] : p.terms()) {
            ZFraction t = Z.constant(c);
            for (size_t g = 0; g < m; ++g)
                for (int k = 0; k < std::abs(e[g]); ++k) t = Z.mul(t, e[g] > 0 ? img[g] : img_inv[g]);
            out = Z.add(out, t);
        }
        return out;
    };
    auto gen = [&](size_t c, int e = 1) { return LaurentPoly::generator(m, c, e); };

    {
        CertificateItem item{"psi is equivariant", true, ""};
        for (size_t i = 0; i < n && item.passed; ++i)
            for (size_t c = 0; c < m; ++c)
                if (!Z.equal(psi(free.sigma[i].apply(gen(c))), Z.tau(i, psi(gen(c))))) {
                    item.passed = false;
                    item.detail = "fails for sigma_" + num(i) + " on " + free.ring.descriptor().generators[c];
                    break;
                }
        rep.items.push_back(item);
    }
    {
        CertificateItem item{"psi(t_i) = s_i", true, ""};
        for (size_t i = 0; i < n; ++i)
            if (!Z.equal(psi(free.t[i]), Z.make(LaurentPoly::generator(n, i)))) {
                item.passed = false;
                item.detail = "fails for i = " + num(i);
            }
        rep.items.push_back(item);
    }
    {
        CertificateItem item{"psi(w_i) = q_i^-1", true, ""};
        for (size_t i = 0; i < n; ++i) {
            const LaurentPoly w = i == 0 ? -gen(0) : gen(i) * gen(n + i - 1, -1);
            if (!Z.equal(psi(w), Z.constant(q[i].inverse()))) item.passed = false;
            const LaurentPoly hnf = quot.invariants.generators[i];
            if (!Z.equal(psi(hnf), Z.constant(quot.point[i]))) item.passed = false;
        }
        item.detail = "w_i generators and HNF generators at the ideal point";
        rep.items.push_back(item);
    }
    {
        CertificateItem item{"Psi on R/J", true, ""};
        // well defined on coset normal forms
        // psi(monomial) = c z^e and the z_j are algebraically independent
        auto psi_monomial = [&](const Exponent& e, Scalar c) {
            std::vector<int> z(n + 1, 0);
            for (size_t i = 0; i < n; ++i) {
                c *= (-q[i].inverse()).pow(e[i]) * Scalar(-1).pow(e[n + i]);
                z[i] += e[i];
                z[i + 1] += e[n + i];
            }
            z[0] = 0;
            return std::make_pair(c, z);
        };
        std::vector<int> d(m, -2);
        for (;;) {
            const LaurentPoly r = RJ.reduce(LaurentPoly::monomial(d));
            if (r.terms().size() != 1 ||
                psi_monomial(r.terms().begin()->first, r.terms().begin()->second) != psi_monomial(d, Scalar(1)))
                item.passed = false;
            size_t c = 0;
            while (c < m && d[c] == 2) d[c++] = -2;
            if (c == m) break;
            ++d[c];
        }
        for (size_t i = 0; i < n; ++i) {
            for (size_t c = 0; c < m; ++c)
                if (!Z.equal(psi(RJ.apply(quot.datum.sigma[i], RJ.generator(c))), Z.tau(i, psi(RJ.generator(c)))))
                    item.passed = false;
            if (!Z.equal(psi(quot.datum.t[i]), Z.make(LaurentPoly::generator(n, i)))) item.passed = false;
        }
        const TGWDatum qw = quantized_weyl_datum(q, lambda);
        if (qw.mu != quot.datum.mu) item.passed = false;
        item.detail = "coset normal forms, equivariance, t and mu";
        rep.items.push_back(item);
    }
    {
        CertificateItem item{"Phi o Psi = id", true, ""};
        // phi(s_i) = tbar_i; phi(z_j) must be units of R/J
        auto phi = [&](const LaurentPoly& p) {
            LaurentPoly out(m);
            for (const auto& [e, c] : p.terms()) {
                LaurentPoly t = LaurentPoly::constant(m, c);
                for (size_t i = 0; i < n; ++i)
                    for (int k = 0; k < e[i]; ++k) t = RJ.mul(t, quot.datum.t[i]);
                out += t;
            }
            return RJ.reduce(out);
        };
        std::vector<LaurentPoly> phiz_inv(n + 1, RJ.one());
        for (size_t j = 1; j <= n; ++j) {
            const LaurentPoly pz = phi(Z.z(j));
            if (!RJ.is_unit(pz)) {
                item.passed = false;
                item.detail = "phi(z_" + std::to_string(j) + ") is not a unit";
            } else {
                phiz_inv[j] = RJ.reduce(pz.monomial_inverse());
            }
        }
        if (item.passed) {
            auto Phi = [&](const ZFraction& f) {
                LaurentPoly out = phi(f.num);
                for (size_t j = 0; j < n; ++j)
                    for (int k = 0; k < f.den[j]; ++k) out = RJ.mul(out, phiz_inv[j + 1]);
                return out;
            };
            for (size_t c = 0; c < m; ++c) {
                if (Phi(psi(gen(c))) != RJ.generator(c)) item.passed = false;
                if (Phi(psi(gen(c, -1))) != RJ.reduce(gen(c, -1))) item.passed = false;
            }
            const TGWDatum qw = quantized_weyl_datum(q, lambda);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    const LaurentPoly s = LaurentPoly::generator(n, j);
                    if (phi(qw.sigma[i].apply(s)) != RJ.apply(quot.datum.sigma[i], phi(s))) item.passed = false;
                }
            item.detail = "generators u, v and their inverses; phi equivariant";
        }
        rep.items.push_back(item);
    }
    return rep;
}

}  // namespace tgwa
