#include "tgwa/engine.hpp"

#include <algorithm>
#include <sstream>

#include "tgwa/linalg.hpp"

namespace tgwa {

// ---------------------------------------------------------------- AlgebraElement

LaurentPoly AlgebraElement::component(const Degree& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? LaurentPoly(arity_) : it->second;
}

void AlgebraElement::add_term(const Degree& g, const LaurentPoly& r) {
    if (g.size() != n_) throw AlgebraError("degree has wrong length");
    if (r.arity() != arity_) throw AlgebraError("coefficient has wrong ring arity");
    if (r.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(g, r);
    if (!fresh) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::check(const AlgebraElement& other) const {
    if (n_ != other.n_ || arity_ != other.arity_) throw AlgebraError("algebra elements belong to different algebras");
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [g, c] : r.terms_) c = -c;
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
    check(b);
    for (const auto& [g, c] : b.terms_) add_term(g, c);
    return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    r += b;
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
    AlgebraElement r(a.n_, a.arity_);
    for (const auto& [g, x] : a.terms_) r.add_term(g, c * x);
    return r;
}

std::string AlgebraElement::str(const RingDescriptor& ring) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (g[i] > 0 ? "X" : "Y") + std::to_string(i + 1);
            if (std::abs(g[i]) != 1) mono += "^" + std::to_string(std::abs(g[i]));
        }
        os << "(" << c.str(ring) << ")";
        if (!mono.empty()) os << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------- TGWAlgebra

TGWAlgebra::TGWAlgebra(TGWDatum datum)
    : datum_(std::move(datum)), cert_(a1n_certificate(datum_)), cache_(std::make_shared<Cache>()) {
    auto c = check_consistency(datum_);
    if (!c.consistent) throw AlgebraError("datum is not consistent");
}

AlgebraElement TGWAlgebra::monomial(const Degree& g, const LaurentPoly& r) const {
    AlgebraElement a = zero();
    a.add_term(g, ring().reduce(r));
    return a;
}

AlgebraElement TGWAlgebra::X(size_t i) const {
    Degree g(n(), 0);
    g.at(i) = 1;
    return monomial(g);
}

AlgebraElement TGWAlgebra::Y(size_t i) const {
    Degree g(n(), 0);
    g.at(i) = -1;
    return monomial(g);
}

const RingAutomorphism& TGWAlgebra::sigma_power(size_t i, int e) const {
    const auto key = std::make_pair(i, e);
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->powers.find(key);
        if (it != cache_->powers.end()) return it->second;
    }
    RingAutomorphism p = e == 0 ? RingAutomorphism::identity(ring().descriptor())
                         : e > 0 ? datum_.sigma[i].compose(sigma_power(i, e - 1))
                                 : datum_.sigma[i].inverse().compose(sigma_power(i, e + 1));
    std::lock_guard lock(cache_->mutex);
    return cache_->powers.emplace(key, std::move(p)).first->second;
}

const RingAutomorphism& TGWAlgebra::sigma_automorphism(const Degree& g) const {
    if (g.size() != n()) throw AlgebraError("degree has wrong length");
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->sigma.find(g);
        if (it != cache_->sigma.end()) return it->second;
    }
    RingAutomorphism s = RingAutomorphism::identity(ring().descriptor());
    for (size_t i = 0; i < n(); ++i)
        if (g[i] != 0) s = s.compose(sigma_power(i, g[i]));
    std::lock_guard lock(cache_->mutex);
    return cache_->sigma.emplace(g, std::move(s)).first->second;
}

LaurentPoly TGWAlgebra::generator_constant(const Degree& g, size_t i, int sign) const {
    const auto& mu = datum_.mu;
    const auto& gamma = cert_.gamma;
    Scalar c(1);
    for (size_t j = i + 1; j < n(); ++j) {
        if (g[j] == 0) continue;
        const long a = std::abs(g[j]);
        if (sign > 0)
            c *= g[j] > 0 ? (gamma[j][i] / mu[j][i]).pow(a) : mu[i][j].pow(-a);
        else
            c *= g[j] > 0 ? mu[j][i].pow(a) : (gamma[i][j] / mu[j][i]).pow(a);
    }
    Degree prefix(n(), 0);
    std::copy(g.begin(), g.begin() + static_cast<long>(i), prefix.begin());
    if (sign > 0 && g[i] < 0) {
        const int a = -g[i];
        Degree d(n(), 0);
        d[i] = -(a - 1);
        return c * sigma(prefix, sigma(d, datum_.t[i]));
    }
    if (sign < 0 && g[i] > 0) {
        Degree d(n(), 0);
        d[i] = g[i];
        return c * sigma(prefix, sigma(d, datum_.t[i]));
    }
    return ring().reduce(LaurentPoly::constant(ring().arity(), c));
}

LaurentPoly TGWAlgebra::structure_constant(const Degree& g, const Degree& h) const {
    const auto key = std::make_pair(g, h);
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->kappa.find(key);
        if (it != cache_->kappa.end()) return it->second;
    }
    LaurentPoly acc = ring().one();
    Degree cur = g;
    for (size_t i = 0; i < n(); ++i) {
        const int sign = h[i] > 0 ? 1 : -1;
        for (int step = 0; step < std::abs(h[i]); ++step) {
            acc = ring().mul(acc, generator_constant(cur, i, sign));
            cur[i] += sign;
        }
    }
    std::lock_guard lock(cache_->mutex);
    cache_->kappa.emplace(key, acc);
    return acc;
}

void TGWAlgebra::check_element(const AlgebraElement& a) const {
    if (a.rank() != n() || a.arity() != ring().arity()) throw AlgebraError("element does not belong to this algebra");
}

AlgebraElement TGWAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    check_element(a);
    check_element(b);
    AlgebraElement out = zero();
    Degree sum(n());
    for (const auto& [g, r] : a.terms())
        for (const auto& [h, s] : b.terms()) {
            for (size_t i = 0; i < n(); ++i) sum[i] = g[i] + h[i];
            out.add_term(sum, ring().mul(ring().mul(r, sigma(g, s)), structure_constant(g, h)));
        }
    return out;
}

AlgebraElement TGWAlgebra::product(const std::vector<AlgebraElement>& factors) const {
    AlgebraElement acc = one();
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
}

AlgebraElement TGWAlgebra::power(const AlgebraElement& a, unsigned e) const {
    AlgebraElement acc = one();
    for (unsigned k = 0; k < e; ++k) acc = multiply(acc, a);
    return acc;
}

LaurentPoly TGWAlgebra::graded_pairing(const AlgebraElement& a, const AlgebraElement& b) const {
    return multiply(a, b).component(Degree(n(), 0));
}

// ---------------------------------------------------------------- verification

bool VerificationReport::ok() const { return failures() == 0; }

size_t VerificationReport::failures() const {
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.ok(); }));
}

namespace {

std::string idx(size_t i) { return std::to_string(i + 1); }

RelationCheck residual_check(std::string name, AlgebraElement residual) {
    RelationCheck c{std::move(name), std::move(residual)};
    c.passed = c.residual.is_zero();
    return c;
}

}  // namespace

VerificationReport verify_defining_relations(const TGWAlgebra& A) {
    VerificationReport rep;
    const auto& d = A.datum();
    const auto& R = A.ring();
    const size_t n = A.n();
    std::vector<std::pair<std::string, LaurentPoly>> samples;
    for (size_t g = 0; g < R.arity(); ++g) {
        samples.emplace_back(R.descriptor().generators[g], R.generator(g));
        if (R.descriptor().invertible[g])
            samples.emplace_back(R.descriptor().generators[g] + "^-1",
                                 R.reduce(LaurentPoly::generator(R.arity(), g, -1)));
    }
    for (size_t j = 0; j < n; ++j) samples.emplace_back("t" + idx(j), R.reduce(d.t[j]));

    for (size_t i = 0; i < n; ++i) {
        Degree e(n, 0);
        e[i] = 1;
        Degree me(n, 0);
        me[i] = -1;
        for (const auto& [name, r] : samples) {
            rep.checks.push_back(residual_check(
                "X" + idx(i) + "*r - sigma" + idx(i) + "(r)*X" + idx(i) + " [r=" + name + "]",
                A.multiply(A.X(i), A.ring_element(r)) - A.multiply(A.ring_element(A.sigma(e, r)), A.X(i))));
            rep.checks.push_back(residual_check(
                "Y" + idx(i) + "*r - sigma" + idx(i) + "^-1(r)*Y" + idx(i) + " [r=" + name + "]",
                A.multiply(A.Y(i), A.ring_element(r)) - A.multiply(A.ring_element(A.sigma(me, r)), A.Y(i))));
        }
        rep.checks.push_back(
            residual_check("Y" + idx(i) + "X" + idx(i) + " - t" + idx(i), A.multiply(A.Y(i), A.X(i)) - A.ring_element(d.t[i])));
        rep.checks.push_back(residual_check("X" + idx(i) + "Y" + idx(i) + " - sigma" + idx(i) + "(t" + idx(i) + ")",
                                            A.multiply(A.X(i), A.Y(i)) - A.ring_element(A.sigma(e, d.t[i]))));
    }
    const auto& mu = d.mu;
    const auto& gamma = A.certificate().gamma;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            rep.checks.push_back(residual_check("X" + idx(i) + "Y" + idx(j) + " - mu" + idx(i) + idx(j) + " Y" + idx(j) + "X" + idx(i),
                                                A.multiply(A.X(i), A.Y(j)) - mu[i][j] * A.multiply(A.Y(j), A.X(i))));
            rep.checks.push_back(residual_check(
                "X" + idx(i) + "X" + idx(j) + " - gamma" + idx(i) + idx(j) + "/mu" + idx(i) + idx(j) + " X" + idx(j) + "X" + idx(i),
                A.multiply(A.X(i), A.X(j)) - (gamma[i][j] / mu[i][j]) * A.multiply(A.X(j), A.X(i))));
            rep.checks.push_back(residual_check(
                "Y" + idx(j) + "Y" + idx(i) + " - gamma" + idx(i) + idx(j) + "/mu" + idx(j) + idx(i) + " Y" + idx(i) + "Y" + idx(j),
                A.multiply(A.Y(j), A.Y(i)) - (gamma[i][j] / mu[j][i]) * A.multiply(A.Y(i), A.Y(j))));
        }
    return rep;
}

VerificationReport verify_serre_identities(const TGWAlgebra& A, const MinimalPolyTable& table) {
    VerificationReport rep;
    const size_t n = A.n();
    const auto& mu = A.datum().mu;
    auto rank_of = [&](const std::vector<AlgebraElement>& family) {
        // All members are homogeneous of one degree; compare their coefficients.
        SparseEchelon<std::pair<Degree, Exponent>> span;
        size_t r = 0;
        for (const auto& f : family) {
            std::map<std::pair<Degree, Exponent>, Scalar> v;
            for (const auto& [g, c] : f.terms())
                for (const auto& [e, x] : c.terms()) v[{g, e}] = x;
            if (span.insert(v)) ++r;
        }
        return r;
    };

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& p = table.coeffs[i][j];
            const int m = table.degree(i, j);
            auto lam = [&](int k) { return p[static_cast<size_t>(m - k)]; };
            if (i != j) {
                AlgebraElement sx = A.zero(), sy = A.zero();
                for (int k = 0; k <= m; ++k) {
                    // X_i^{m-k} X_j X_i^k and Y_i^k Y_j Y_i^{m-k}
                    const AlgebraElement wx = A.product({A.power(A.X(i), m - k), A.X(j), A.power(A.X(i), k)});
                    const AlgebraElement wy = A.product({A.power(A.Y(i), k), A.Y(j), A.power(A.Y(i), m - k)});
                    sx += (lam(k) * mu[i][j].pow(-k)) * wx;
                    sy += (lam(k) * mu[j][i].pow(-k)) * wy;
                }
                rep.checks.push_back(residual_check("X-identity for p" + idx(i) + idx(j), sx));
                rep.checks.push_back(residual_check("Y-identity for p" + idx(i) + idx(j), sy));
                for (int mm = 0; mm < m; ++mm) {
                    std::vector<AlgebraElement> fx, fy;
                    for (int k = 0; k <= mm; ++k) {
                        fx.push_back(A.product({A.power(A.X(i), mm - k), A.X(j), A.power(A.X(i), k)}));
                        fy.push_back(A.product({A.power(A.Y(i), mm - k), A.Y(j), A.power(A.Y(i), k)}));
                    }
                    RelationCheck c{"independence of X" + idx(i) + "^(m-k) X" + idx(j) + " X" + idx(i) + "^k, m=" +
                                        std::to_string(mm),
                                    A.zero()};
                    c.passed = rank_of(fx) == fx.size() && rank_of(fy) == fy.size();
                    rep.checks.push_back(c);
                }
            } else {
                AlgebraElement sx = A.zero(), sy = A.zero();
                for (int k = 0; k <= m; ++k) {
                    sx += lam(k) * A.product({A.power(A.X(i), m - k), A.Y(i), A.power(A.X(i), k)});
                    sy += lam(k) * A.product({A.power(A.Y(i), k), A.X(i), A.power(A.Y(i), m - k)});
                }
                rep.checks.push_back(residual_check("X-identity for p" + idx(i) + idx(i), sx));
                rep.checks.push_back(residual_check("Y-identity for p" + idx(i) + idx(i), sy));
                for (int mm = 0; mm < m; ++mm) {
                    std::vector<AlgebraElement> fx, fy;
                    for (int k = 0; k <= mm; ++k) {
                        fx.push_back(A.product({A.power(A.X(i), mm - k), A.Y(i), A.power(A.X(i), k)}));
                        fy.push_back(A.product({A.power(A.Y(i), mm - k), A.X(i), A.power(A.Y(i), k)}));
                    }
                    RelationCheck c{"independence of X" + idx(i) + "^(m-k) Y" + idx(i) + " X" + idx(i) + "^k, m=" +
                                        std::to_string(mm),
                                    A.zero()};
                    c.passed = rank_of(fx) == fx.size() && rank_of(fy) == fy.size();
                    rep.checks.push_back(c);
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------- TGWConstruction

TGWConstruction::TGWConstruction(TGWDatum datum) : datum_(std::move(datum)) { datum_.validate(); }

Degree TGWConstruction::degree(const Word& w) const {
    Degree g(datum_.n(), 0);
    for (const auto& l : w) g.at(l.index) += l.x ? 1 : -1;
    return g;
}

LaurentPoly TGWConstruction::sigma(const Degree& g, const LaurentPoly& r) const {
    LaurentPoly out = r;
    for (size_t i = 0; i < g.size(); ++i) {
        for (int k = 0; k < g[i]; ++k) out = datum_.ring.apply(datum_.sigma[i], out);
        for (int k = 0; k < -g[i]; ++k) out = datum_.ring.reduce(datum_.sigma[i].apply_inverse(out));
    }
    return out;
}

namespace {

void accumulate(TGWConstruction::Element& out, const Word& yw, const Word& xw, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.terms.try_emplace({yw, xw}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
    }
}

}  // namespace

void TGWConstruction::append_letter(const LaurentPoly& r, const Word& yw, const Word& xw, Letter l,
                                    Element& out) const {
    const auto& mu = datum_.mu;
    const auto& R = datum_.ring;
    const size_t i = l.index;
    if (l.x) {
        auto it = std::find_if(yw.rbegin(), yw.rend(), [&](const Letter& y) { return y.index == i; });
        if (it == yw.rend()) {
            Word nx = xw;
            nx.push_back(l);
            accumulate(out, yw, nx, r);
            return;
        }
        const size_t p = static_cast<size_t>(yw.rend() - it) - 1;
        Scalar c(1);
        for (const auto& x : xw) c /= mu[x.index][i];
        for (size_t q = p + 1; q < yw.size(); ++q) c /= mu[i][yw[q].index];
        Word a(yw.begin(), yw.begin() + static_cast<long>(p));
        Degree shift = degree(a);
        Degree dx = degree(xw);
        for (size_t k = 0; k < shift.size(); ++k) shift[k] += dx[k];
        Word ny = a;
        ny.insert(ny.end(), yw.begin() + static_cast<long>(p) + 1, yw.end());
        accumulate(out, ny, xw, c * R.mul(r, sigma(shift, datum_.t[i])));
    } else {
        auto it = std::find_if(xw.rbegin(), xw.rend(), [&](const Letter& x) { return x.index == i; });
        if (it == xw.rend()) {
            Scalar c(1);
            for (const auto& x : xw) c *= mu[x.index][i];
            Word ny = yw;
            ny.push_back(l);
            accumulate(out, ny, xw, c * r);
            return;
        }
        const size_t p = static_cast<size_t>(xw.rend() - it) - 1;
        Scalar c(1);
        for (size_t q = p + 1; q < xw.size(); ++q) c *= mu[xw[q].index][i];
        Word cpart(xw.begin(), xw.begin() + static_cast<long>(p));
        Degree shift = degree(yw);
        Degree dc = degree(cpart);
        for (size_t k = 0; k < shift.size(); ++k) shift[k] += dc[k];
        shift[i] += 1;  // sigma_i(t_i) moved past Y-word and C
        Word nx = cpart;
        nx.insert(nx.end(), xw.begin() + static_cast<long>(p) + 1, xw.end());
        accumulate(out, yw, nx, c * R.mul(r, sigma(shift, datum_.t[i])));
    }
}

TGWConstruction::Element TGWConstruction::ring_element(const LaurentPoly& r) const {
    Element e;
    accumulate(e, {}, {}, datum_.ring.reduce(r));
    return e;
}

TGWConstruction::Element TGWConstruction::word(const Word& w) const {
    Element cur = ring_element(datum_.ring.one());
    for (const auto& l : w) {
        Element next;
        for (const auto& [key, r] : cur.terms) append_letter(r, key.first, key.second, l, next);
        cur = std::move(next);
    }
    return cur;
}

TGWConstruction::Element TGWConstruction::add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [key, r] : b.terms) accumulate(out, key.first, key.second, r);
    return out;
}

TGWConstruction::Element TGWConstruction::scale(const Scalar& c, const Element& a) const {
    Element out;
    for (const auto& [key, r] : a.terms) accumulate(out, key.first, key.second, c * r);
    return out;
}

TGWConstruction::Element TGWConstruction::multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ka, r] : a.terms)
        for (const auto& [kb, s] : b.terms) {
            Degree da = degree(ka.first), dx = degree(ka.second);
            for (size_t k = 0; k < da.size(); ++k) da[k] += dx[k];
            Element cur;
            accumulate(cur, ka.first, ka.second, datum_.ring.mul(r, sigma(da, s)));
            Word letters = kb.first;
            letters.insert(letters.end(), kb.second.begin(), kb.second.end());
            for (const auto& l : letters) {
                Element next;
                for (const auto& [key, c] : cur.terms) append_letter(c, key.first, key.second, l, next);
                cur = std::move(next);
            }
            out = add(out, cur);
        }
    return out;
}

LaurentPoly TGWConstruction::degree_zero(const Element& a) const {
    auto it = a.terms.find({Word{}, Word{}});
    return it == a.terms.end() ? LaurentPoly(datum_.ring.arity()) : it->second;
}

std::vector<Word> TGWConstruction::reduced_words(const Degree& g) const {
    Word ys, xs;
    for (size_t i = 0; i < g.size(); ++i)
        for (int k = 0; k < std::abs(g[i]); ++k) (g[i] > 0 ? xs : ys).push_back(Letter{i, g[i] > 0});
    std::vector<Word> out;
    std::sort(ys.begin(), ys.end());
    do {
        Word xperm = xs;
        std::sort(xperm.begin(), xperm.end());
        do {
            Word w = ys;
            w.insert(w.end(), xperm.begin(), xperm.end());
            out.push_back(w);
        } while (std::next_permutation(xperm.begin(), xperm.end()));
    } while (std::next_permutation(ys.begin(), ys.end()));
    return out;
}

}  // namespace tgwa
