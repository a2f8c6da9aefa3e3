#include "tgwa/laurent.hpp"

#include <sstream>

namespace tgwa {

RingDescriptor RingDescriptor::laurent(std::vector<std::string> names) {
    RingDescriptor r;
    r.invertible.assign(names.size(), true);
    r.generators = std::move(names);
    return r;
}

RingDescriptor RingDescriptor::polynomial(std::vector<std::string> names) {
    RingDescriptor r;
    r.invertible.assign(names.size(), false);
    r.generators = std::move(names);
    return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(size_t arity, const Scalar& c) {
    LaurentPoly p(arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Scalar& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::generator(size_t arity, size_t index, int power) {
    if (index >= arity) throw AlgebraError("generator index out of range");
    Exponent e(arity, 0);
    e[index] = power;
    return monomial(e);
}

std::optional<Scalar> LaurentPoly::as_constant() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    for (int x : e)
        if (x != 0) return std::nullopt;
    return c;
}

Scalar LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != arity_) throw AlgebraError("exponent length does not match ring arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_arity(const LaurentPoly& other) const {
    if (arity_ != other.arity_)
        throw AlgebraError("ring arity mismatch (" + std::to_string(arity_) + " vs " + std::to_string(other.arity_) + ")");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
    check_arity(b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r += b;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_arity(b);
    LaurentPoly r(a.arity_);
    Exponent e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& a) {
    LaurentPoly r(a.arity());
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = constant(arity_, Scalar(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (!is_single_term()) throw AlgebraError("monomial_inverse: not a single term");
    const auto& [e, c] = *terms_.begin();
    Exponent neg(e.size());
    for (size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
    return monomial(neg, c.inverse());
}

std::string LaurentPoly::str(const RingDescriptor& ring) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += j < ring.generators.size() ? ring.generators[j] : "x" + std::to_string(j + 1);
            if (e[j] != 1) mono += "^" + std::to_string(e[j]);
        }
        if (mono.empty())
            os << c.str();
        else if (c.is_one())
            os << mono;
        else
            os << "(" << c.str() << ")*" << mono;
    }
    return os.str();
}

bool is_unit(const LaurentPoly& p, const RingDescriptor& ring) {
    if (!p.is_single_term()) return false;
    const auto& e = p.terms().begin()->first;
    for (size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0 && !ring.invertible[j]) return false;
    return true;
}

// ---------------------------------------------------------------- RingAutomorphism

LaurentPoly RingAutomorphism::substitute(const RingDescriptor& ring, const std::vector<LaurentPoly>& images,
                                         const std::vector<LaurentPoly>& inverse_images, const LaurentPoly& p) {
    const size_t m = ring.arity();
    if (p.arity() != m) throw AlgebraError("automorphism applied to polynomial of wrong arity");
    // Cache of image powers, keyed by (generator, exponent).
    std::map<std::pair<size_t, int>, LaurentPoly> powers;
    auto image_power = [&](size_t j, int e) -> const LaurentPoly& {
        auto key = std::make_pair(j, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        LaurentPoly v(m);
        if (e >= 0) {
            v = images[j].pow(static_cast<unsigned>(e));
        } else {
            if (!ring.invertible[j]) throw AlgebraError("negative exponent on non-invertible generator " + ring.generators[j]);
            const LaurentPoly& img = images[j];
            if (!is_unit(img, ring))
                throw AlgebraError("image of generator " + ring.generators[j] + " is not a unit; cannot raise to a negative power");
            v = img.monomial_inverse().pow(static_cast<unsigned>(-e));
        }
        (void)inverse_images;
        return powers.emplace(key, std::move(v)).first->second;
    };

    LaurentPoly result(m);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(m, c);
        for (size_t j = 0; j < m; ++j)
            if (e[j] != 0) term = term * image_power(j, e[j]);
        result += term;
    }
    return result;
}

RingAutomorphism::RingAutomorphism(const RingDescriptor& ring, std::vector<LaurentPoly> forward,
                                   std::vector<LaurentPoly> inverse)
    : ring_(ring), forward_(std::move(forward)), inverse_(std::move(inverse)) {
    const size_t m = ring_.arity();
    if (forward_.size() != m || inverse_.size() != m)
        throw AlgebraError("automorphism must give one image per generator");
    for (size_t j = 0; j < m; ++j) {
        if (forward_[j].arity() != m || inverse_[j].arity() != m) throw AlgebraError("automorphism image has wrong arity");
        if (ring_.invertible[j] && (!is_unit(forward_[j], ring_) || !is_unit(inverse_[j], ring_)))
            throw AlgebraError("image of invertible generator " + ring_.generators[j] + " is not a unit");
    }
    for (size_t j = 0; j < m; ++j) {
        const LaurentPoly x = LaurentPoly::generator(m, j);
        if (substitute(ring_, forward_, inverse_, inverse_[j]) != x ||
            substitute(ring_, inverse_, forward_, forward_[j]) != x)
            throw AlgebraError("forward and inverse images do not compose to the identity on " + ring_.generators[j]);
    }
}

RingAutomorphism RingAutomorphism::identity(const RingDescriptor& ring) {
    std::vector<LaurentPoly> id;
    for (size_t j = 0; j < ring.arity(); ++j) id.push_back(LaurentPoly::generator(ring.arity(), j));
    RingAutomorphism a;
    a.ring_ = ring;
    a.forward_ = id;
    a.inverse_ = id;
    return a;
}

RingAutomorphism RingAutomorphism::scaling(const RingDescriptor& ring, const std::vector<Scalar>& factors) {
    if (factors.size() != ring.arity()) throw AlgebraError("scaling: one factor per generator required");
    std::vector<LaurentPoly> fwd, inv;
    for (size_t j = 0; j < ring.arity(); ++j) {
        if (factors[j].is_zero()) throw AlgebraError("scaling factor must be nonzero");
        Exponent e(ring.arity(), 0);
        e[j] = 1;
        fwd.push_back(LaurentPoly::monomial(e, factors[j]));
        inv.push_back(LaurentPoly::monomial(e, factors[j].inverse()));
    }
    return RingAutomorphism(ring, std::move(fwd), std::move(inv));
}

LaurentPoly RingAutomorphism::apply(const LaurentPoly& p) const { return substitute(ring_, forward_, inverse_, p); }

LaurentPoly RingAutomorphism::apply_inverse(const LaurentPoly& p) const {
    return substitute(ring_, inverse_, forward_, p);
}

RingAutomorphism RingAutomorphism::inverse() const {
    RingAutomorphism r;
    r.ring_ = ring_;
    r.forward_ = inverse_;
    r.inverse_ = forward_;
    return r;
}

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& other) const {
    // (this o other)(x_j) = this(other(x_j)); inverse is other^-1 o this^-1.
    RingAutomorphism r;
    r.ring_ = ring_;
    for (size_t j = 0; j < ring_.arity(); ++j) {
        r.forward_.push_back(apply(other.forward_[j]));
        r.inverse_.push_back(other.apply_inverse(inverse_[j]));
    }
    return r;
}

RingAutomorphism RingAutomorphism::power(long e) const {
    if (e < 0) return inverse().power(-e);
    RingAutomorphism result = identity(ring_);
    for (long i = 0; i < e; ++i) result = compose(result);
    return result;
}

bool RingAutomorphism::is_diagonal() const {
    for (size_t j = 0; j < forward_.size(); ++j) {
        if (!forward_[j].is_single_term()) return false;
        const auto& e = forward_[j].terms().begin()->first;
        for (size_t l = 0; l < e.size(); ++l)
            if (e[l] != (l == j ? 1 : 0)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- evaluation

Scalar evaluate(const LaurentPoly& p, const PointEvaluation& pt) {
    if (pt.values.size() != p.arity()) throw AlgebraError("evaluation point has wrong number of coordinates");
    Scalar total;
    for (const auto& [e, c] : p.terms()) {
        Scalar term = c;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (e[j] < 0 && pt.values[j].is_zero())
                throw AlgebraError("evaluation: zero value for inverted generator " + std::to_string(j + 1));
            term *= pt.values[j].pow(e[j]);
        }
        total += term;
    }
    return total;
}

BaseRing::BaseRing(RingDescriptor ring, std::shared_ptr<const Reducer> reducer)
    : ring_(std::move(ring)), reducer_(std::move(reducer)) {}

}  // namespace tgwa
