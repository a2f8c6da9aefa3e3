#include "tgwa/modules.hpp"

#include <cstdlib>
#include <functional>

namespace tgwa {

namespace {

const char* gen_name(Gen g) { return g == Gen::X ? "X" : "Y"; }

std::string label(const std::string& base, size_t i) { return base + std::to_string(i + 1); }
std::string label(const std::string& base, size_t i, size_t j) {
    return base + std::to_string(i + 1) + std::to_string(j + 1);
}

Scalar monomial_value(const IntVector& d, const PointEvaluation& pt) {
    Scalar out(1);
    for (size_t c = 0; c < d.size(); ++c) out *= pt.values[c].pow(d[c].get_si());
    return out;
}

bool same_params(const MTWAParams& a, const MTWAParams& b) {
    return a.n == b.n && a.k == b.k && a.r == b.r && a.s == b.s && a.lambda == b.lambda;
}

void add_to(ModuleVector& v, const Degree& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(g);
    if (it == v.end()) {
        v.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

ModuleVector combine(const ModuleVector& a, const Scalar& c, const ModuleVector& b) {
    ModuleVector out = a;
    for (const auto& [g, x] : b) add_to(out, g, c * x);
    return out;
}

// Box [-radius, radius]^n.
void for_degrees(size_t n, int radius, const std::function<void(const Degree&)>& f) {
    Degree g(n, -radius);
    for (;;) {
        f(g);
        size_t i = 0;
        while (i < n && g[i] == radius) g[i++] = -radius;
        if (i == n) return;
        ++g[i];
    }
}

}  // namespace

PointEvaluation WeightPoint::evaluation() const {
    PointEvaluation pt;
    pt.values = alpha;
    pt.values.insert(pt.values.end(), beta.begin(), beta.end());
    return pt;
}

void validate_weight(const MTWAParams& p, const WeightPoint& w, const SimpleQuotient* q) {
    if (w.alpha.size() != p.n || w.beta.size() != p.n) throw AlgebraError("weight needs n values of alpha and beta");
    for (size_t i = 0; i < p.n; ++i)
        if (w.alpha[i].is_zero() || w.beta[i].is_zero()) throw AlgebraError("weight coordinates must be nonzero");
    if (!q) return;
    const auto& basis = q->invariants.lattice.basis();
    const PointEvaluation pt = w.evaluation();
    for (size_t j = 0; j < basis.size(); ++j)
        if (monomial_value(basis[j], pt) != q->point[j])
            throw AlgebraError("weight does not lie on the quotient: generator " + std::to_string(j + 1));
}

WeightPoint shifted_weight(const MTWAParams& p, const WeightPoint& w, const std::vector<int>& g) {
    WeightPoint out = w;
    for (size_t i = 0; i < p.n; ++i)
        for (size_t l = 0; l < p.n; ++l) {
            if (g[l] == 0) continue;
            out.alpha[i] *= p.r[l][i].pow(g[l]);
            out.beta[i] *= p.s[l][i].pow(g[l]);
        }
    return out;
}

bool check_stabilizer(const MTWAParams& p, const WeightPoint& w) {
    p.validate();
    validate_weight(p, w);
    return action_kernel(p).rank() == 0;
}

bool BreakData::degenerate() const {
    for (const auto& b : breaks)
        if (b) return true;
    return false;
}

BreakData break_structure(const MTWAParams& p, const WeightPoint& w) {
    p.validate();
    validate_weight(p, w);
    BreakData out;
    for (size_t i = 0; i < p.n; ++i) {
        const ParamMonomial base = factor_parameter((p.s[i][i] / p.r[i][i]).pow(p.k));
        std::optional<ParamMonomial> target;
        try {
            target = factor_parameter((w.alpha[i] / w.beta[i]).pow(p.k));
        } catch (const UnsupportedParameter&) {
            // not a monomial, so never a power of base
        }
        std::optional<long> e;
        if (target) e = solve_power_equation(base, *target);
        out.breaks.push_back(e ? std::optional<long>(*e - 1) : std::nullopt);
    }
    return out;
}

SupportShape classify_support(const BreakData& b) {
    SupportShape s;
    for (const auto& g : b.breaks) {
        if (!g) {
            s.tau.push_back(0);
            s.shift.push_back(0);
        } else if (*g >= 0) {
            s.tau.push_back(-1);
            s.shift.push_back(static_cast<int>(*g));
        } else {
            s.tau.push_back(1);
            s.shift.push_back(static_cast<int>(*g + 1));
        }
    }
    return s;
}

bool graded_break_test(const TGWDatum& d, const WeightPoint& w, const std::vector<int>& g) {
    const PointEvaluation pt = w.evaluation();
    for (size_t i = 0; i < d.n(); ++i) {
        if (g[i] == 0) continue;
        const RingAutomorphism step = g[i] > 0 ? d.sigma[i].inverse() : d.sigma[i];
        LaurentPoly cur = g[i] > 0 ? d.t[i] : d.ring.apply(step, d.t[i]);
        for (int l = 0; l < std::abs(g[i]); ++l) {
            if (evaluate(cur, pt).is_zero()) return false;
            cur = d.ring.apply(step, cur);
        }
    }
    return true;
}

WeightModule::WeightModule(MTWAParams params, WeightPoint weight, std::optional<SimpleQuotient> quotient)
    : params_(std::move(params)), input_(std::move(weight)), quotient_(std::move(quotient)) {
    if (quotient_ && !same_params(quotient_->params, params_))
        throw AlgebraError("quotient was built from different parameters");
    TGWDatum d = quotient_ ? quotient_->datum : build_datum(params_);
    validate_weight(params_, input_, quotient_ ? &*quotient_ : nullptr);
    breaks_ = break_structure(params_, input_);
    shape_ = classify_support(breaks_);
    base_ = shifted_weight(params_, input_, shape_.shift);
    algebra_ = std::make_shared<const TGWAlgebra>(std::move(d));
}

bool WeightModule::in_support(const Degree& g) const {
    if (g.size() != n()) return false;
    for (size_t i = 0; i < n(); ++i)
        if (g[i] * shape_.tau[i] < 0) return false;
    return true;
}

void WeightModule::check_support(const Degree& g) const {
    if (!in_support(g)) throw AlgebraError("degree outside the support of the module");
}

std::vector<Degree> WeightModule::support_box(int radius) const {
    std::vector<Degree> out;
    for_degrees(n(), radius, [&](const Degree& g) {
        if (in_support(g)) out.push_back(g);
    });
    return out;
}

Scalar WeightModule::gamma_l(size_t i, size_t j, int l) const {
    const auto& p = params_;
    if (l >= 0) return ((p.r[j][i] / p.r[i][j]).pow(p.k) * p.lambda[i][j]).pow(l);
    return (p.r[j][i].pow(p.k) * p.lambda[i][j]).pow(l);
}

Scalar WeightModule::epsilon_l(size_t i, size_t j, int l) const {
    const auto& p = params_;
    if (l >= 0) return (p.r[i][j].pow(p.k) * p.lambda[j][i]).pow(l);
    return p.lambda[j][i].pow(l);
}

Action WeightModule::act_closed_form(Gen gen, size_t i, const Degree& g) const {
    check_support(g);
    const auto& p = params_;
    const int k = p.k;
    Degree target = g;
    target[i] += gen == Gen::X ? 1 : -1;
    if (target[i] * shape_.tau[i] < 0) return {std::nullopt, Scalar(0)};

    Scalar c(1);
    for (size_t j = 0; j < i; ++j) c *= gen == Gen::X ? gamma_l(i, j, g[j]) : epsilon_l(i, j, g[j]);
    const bool rest = gen == Gen::X ? g[i] < 0 : g[i] > 0;
    if (rest) {
        for (size_t j = i + 1; j < n(); ++j) c *= p.r[j][i].pow(static_cast<long>(k) * g[j]);
        const long e = gen == Gen::X ? static_cast<long>(1 + g[i]) * k : static_cast<long>(g[i]) * k;
        const Scalar r = p.r[i][i], s = p.s[i][i];
        c *= (r.pow(e) * base_.alpha[i].pow(k) - s.pow(e) * base_.beta[i].pow(k)) / (r.pow(k) - s.pow(k));
    }
    return {target, c};
}

Action WeightModule::act_oracle(Gen gen, size_t i, const Degree& g) const {
    check_support(g);
    const TGWAlgebra& A = *algebra_;
    Degree target = g;
    target[i] += gen == Gen::X ? 1 : -1;
    if (!graded_break_test(A.datum(), base_, target)) return {std::nullopt, Scalar(0)};
    const AlgebraElement prod = A.multiply(gen == Gen::X ? A.X(i) : A.Y(i), A.monomial(g));
    for (const auto& [h, r] : prod.terms())
        if (h != target) throw AlgebraError("engine product left the expected degree");
    const LaurentPoly rho = prod.component(target);
    Degree minus = target;
    for (auto& x : minus) x = -x;
    return {target, evaluate(A.sigma(minus, rho), base_.evaluation())};
}

ModuleVector act(const WeightModule& m, Gen gen, size_t i, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [g, c] : v) {
        const Action a = m.act_closed_form(gen, i, g);
        if (a.target) add_to(out, *a.target, c * a.scalar);
    }
    return out;
}

namespace {

ModuleVector ring_act(const WeightModule& m, const LaurentPoly& a, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [g, c] : v) add_to(out, g, c * evaluate(a, m.weight_of(g).evaluation()));
    return out;
}

}  // namespace

ModuleReport verify_module_relations(const WeightModule& m, int radius) {
    if (radius < 1) throw AlgebraError("radius must be at least 1");
    const TGWAlgebra& A = m.algebra();
    const TGWDatum& d = A.datum();
    const size_t n = m.n();
    const auto& gamma = A.certificate().gamma;
    ModuleReport rep;
    auto check = [&](const ModuleVector& residual, const std::string& name, const Degree& g) {
        ++rep.checked;
        if (!residual.empty()) rep.failures.push_back({name, g});
    };
    auto X = [&](size_t i, const ModuleVector& v) { return act(m, Gen::X, i, v); };
    auto Y = [&](size_t i, const ModuleVector& v) { return act(m, Gen::Y, i, v); };

    std::vector<LaurentPoly> gens;
    for (size_t c = 0; c < 2 * n; ++c) gens.push_back(LaurentPoly::generator(2 * n, c));

    for (const Degree& g : m.support_box(radius)) {
        const ModuleVector v{{g, Scalar(1)}};
        for (size_t i = 0; i < n; ++i) {
            const LaurentPoly st = d.ring.apply(d.sigma[i], d.t[i]);
            check(combine(Y(i, X(i, v)), Scalar(-1), ring_act(m, d.t[i], v)), label("YX", i), g);
            check(combine(X(i, Y(i, v)), Scalar(-1), ring_act(m, st, v)), label("XY", i), g);
            for (size_t c = 0; c < gens.size(); ++c) {
                const LaurentPoly fa = d.sigma[i].apply(gens[c]), ba = d.sigma[i].apply_inverse(gens[c]);
                check(combine(X(i, ring_act(m, gens[c], v)), Scalar(-1), ring_act(m, fa, X(i, v))), label("Xr", i, c),
                      g);
                check(combine(Y(i, ring_act(m, gens[c], v)), Scalar(-1), ring_act(m, ba, Y(i, v))), label("Yr", i, c),
                      g);
            }
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                check(combine(X(i, Y(j, v)), -d.mu[i][j], Y(j, X(i, v))), label("XY", i, j), g);
                check(combine(X(i, X(j, v)), -(gamma[i][j] / d.mu[i][j]), X(j, X(i, v))), label("XX", i, j), g);
                check(combine(Y(j, Y(i, v)), -(gamma[i][j] / d.mu[j][i]), Y(i, Y(j, v))), label("YY", j, i), g);
            }
        }
    }
    return rep;
}

ModuleReport compare_with_oracle(const WeightModule& m, int radius) {
    ModuleReport rep;
    for (const Degree& g : m.support_box(radius))
        for (size_t i = 0; i < m.n(); ++i)
            for (Gen gen : {Gen::X, Gen::Y}) {
                ++rep.checked;
                const Action a = m.act_closed_form(gen, i, g), b = m.act_oracle(gen, i, g);
                if (a.target != b.target || (a.target && a.scalar != b.scalar))
                    rep.failures.push_back({label(gen_name(gen), i), g});
            }
    return rep;
}

bool whittaker_condition(const TGWDatum& d) {
    const A1nCertificate cert = a1n_certificate(d);
    for (size_t i = 0; i < d.n(); ++i)
        for (size_t j = 0; j < d.n(); ++j)
            if (i != j && cert.gamma[i][j] != d.mu[i][j]) return false;
    return true;
}

bool whittaker_condition(const MTWAParams& p) {
    p.validate();
    for (size_t i = 0; i < p.n; ++i)
        for (size_t j = 0; j < p.n; ++j)
            if (i != j && p.lambda[i][j] != (p.r[i][j] / p.r[j][i]).pow(p.k)) return false;
    return true;
}

WhittakerModule::WhittakerModule(const MTWAParams& p, std::vector<Scalar> zeta, WhittakerIdeal ideal)
    : params_(p), datum_(build_datum(p)), zeta_(std::move(zeta)), ideal_(std::move(ideal)) {
    const size_t n = p.n;
    if (zeta_.size() != n) throw AlgebraError("Whittaker type needs n values");
    for (const auto& z : zeta_)
        if (z.is_zero()) throw AlgebraError("Whittaker type coordinates must be nonzero");
    if (!whittaker_condition(datum_))
        throw AlgebraError("no Whittaker module: gamma_ij = mu_ij fails");
    if (ideal_.lattice.ambient_rank() != 2 * n) throw AlgebraError("ideal lattice must live in Z^2n");
    const InvariantRing inv = invariant_lattice(p);
    for (const auto& d : ideal_.lattice.basis())
        if (!inv.lattice.contains(d))
            throw AlgebraError("ideal is not invariant: " + vector_str(d) + " is not in the invariant lattice");
    if (ideal_.values.size() != ideal_.lattice.rank()) throw AlgebraError("ideal needs one value per lattice generator");
    if (ideal_.lattice.rank() > 0) reducer_ = std::make_shared<const CosetReducer>(ideal_.lattice, ideal_.values);
    for (const auto& s : datum_.sigma) inverse_sigma_.push_back(s.inverse());
}

LaurentPoly WhittakerModule::reduce(const LaurentPoly& r) const { return reducer_ ? reducer_->reduce(r) : r; }

LaurentPoly WhittakerModule::act(Gen gen, size_t i, const LaurentPoly& v) const {
    if (gen == Gen::X) return zeta_[i] * reduce(datum_.sigma[i].apply(v));
    return zeta_[i].inverse() * reduce(inverse_sigma_[i].apply(v) * datum_.t[i]);
}

std::vector<IntVector> WhittakerModule::basis_box(int radius) const {
    const CosetSystem cs = reducer_ ? reducer_->cosets() : CosetSystem(LatticeBasis(2 * params_.n));
    return coset_box(cs, radius);
}

WhittakerModule build_whittaker(const MTWAParams& p, const std::vector<Scalar>& zeta, const WhittakerIdeal& ideal) {
    return WhittakerModule(p, zeta, ideal);
}

WhittakerModule build_whittaker(const SimpleQuotient& q, const std::vector<Scalar>& zeta) {
    return WhittakerModule(q.params, zeta, {q.invariants.lattice, q.point});
}

CertificateReport verify_whittaker(const WhittakerModule& m, int radius) {
    const size_t n = m.params().n, arity = 2 * n;
    const TGWDatum& d = m.datum();
    const A1nCertificate cert = a1n_certificate(d);
    const LaurentPoly one = LaurentPoly::constant(arity, Scalar(1));
    CertificateReport rep;

    {
        CertificateItem item{"cyclic vector", true, ""};
        for (size_t i = 0; i < n; ++i)
            if (m.act(Gen::X, i, one) != m.reduce(m.zeta()[i] * one)) {
                item.passed = false;
                item.detail = label("X", i) + " does not act by zeta";
            }
        rep.items.push_back(item);
    }

    const std::vector<IntVector> box = m.basis_box(radius);
    CertificateItem rel{"relations", true, ""}, cyc{"generated by 1", true, ""};
    size_t checked = 0;
    auto fail = [&](const std::string& name, const IntVector& e) {
        if (rel.passed) rel.detail = name + " fails at " + vector_str(e);
        rel.passed = false;
    };
    std::vector<LaurentPoly> gens;
    for (size_t c = 0; c < arity; ++c) gens.push_back(LaurentPoly::generator(arity, c));
    for (const auto& e : box) {
        const LaurentPoly v = LaurentPoly::monomial(to_small_vector(e));
        if (m.act_ring(v, one) != v) {
            cyc.passed = false;
            cyc.detail = "basis vector " + vector_str(e) + " is not reduced";
        }
        for (size_t i = 0; i < n; ++i) {
            const auto X = [&](const LaurentPoly& a) { return m.act(Gen::X, i, a); };
            const auto Y = [&](const LaurentPoly& a) { return m.act(Gen::Y, i, a); };
            checked += 2;
            if (Y(X(v)) != m.act_ring(d.t[i], v)) fail(label("YX", i), e);
            if (X(Y(v)) != m.act_ring(d.sigma[i].apply(d.t[i]), v)) fail(label("XY", i), e);
            for (size_t c = 0; c < arity; ++c) {
                checked += 2;
                if (X(m.act_ring(gens[c], v)) != m.act_ring(d.sigma[i].apply(gens[c]), X(v))) fail(label("Xr", i, c), e);
                if (Y(m.act_ring(gens[c], v)) != m.act_ring(d.sigma[i].apply_inverse(gens[c]), Y(v)))
                    fail(label("Yr", i, c), e);
            }
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const auto Xj = [&](const LaurentPoly& a) { return m.act(Gen::X, j, a); };
                const auto Yj = [&](const LaurentPoly& a) { return m.act(Gen::Y, j, a); };
                checked += 3;
                if (X(Yj(v)) != d.mu[i][j] * Yj(X(v))) fail(label("XY", i, j), e);
                if (X(Xj(v)) != (cert.gamma[i][j] / d.mu[i][j]) * Xj(X(v))) fail(label("XX", i, j), e);
                if (Yj(Y(v)) != (cert.gamma[i][j] / d.mu[j][i]) * Y(Yj(v))) fail(label("YY", j, i), e);
            }
        }
    }
    if (rel.passed) rel.detail = std::to_string(checked) + " identities on " + std::to_string(box.size()) + " vectors";
    rep.items.push_back(rel);
    rep.items.push_back(cyc);
    return rep;
}

CertificateReport check_morphism(const WhittakerModule& from, const WhittakerModule& to, int radius) {
    CertificateReport rep;
    CertificateItem inc{"ideal containment", true, ""};
    if (!same_params(from.params(), to.params()) || from.zeta() != to.zeta()) {
        inc.passed = false;
        inc.detail = "modules have different parameters or type";
    }
    const auto& l1 = from.ideal().lattice;
    for (size_t j = 0; j < l1.rank() && inc.passed; ++j) {
        const IntVector& d = l1.basis()[j];
        if (!to.ideal().lattice.contains(d) || !to.reducer() || to.reducer()->character(d) != from.ideal().values[j]) {
            inc.passed = false;
            inc.detail = "u^" + vector_str(d) + " - c is not in the target ideal";
        }
    }
    rep.items.push_back(inc);
    if (!inc.passed) return rep;

    CertificateItem tw{"projection intertwines", true, ""};
    const auto box = from.basis_box(radius);
    for (const auto& e : box) {
        const LaurentPoly x = LaurentPoly::monomial(to_small_vector(e)), px = to.reduce(x);
        for (size_t i = 0; i < from.params().n; ++i)
            for (Gen g : {Gen::X, Gen::Y})
                if (to.reduce(from.act(g, i, x)) != to.act(g, i, px) && tw.passed) {
                    tw.passed = false;
                    tw.detail = label(gen_name(g), i) + " at " + vector_str(e);
                }
    }
    if (tw.passed) tw.detail = std::to_string(box.size()) + " basis vectors";
    rep.items.push_back(tw);
    return rep;
}

}  // namespace tgwa
