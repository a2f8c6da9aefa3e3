#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgwa/scalar.hpp"

namespace tgwa {

using Exponent = std::vector<int>;

/// Generator names plus an invertibility flag per generator. A polynomial ring
/// is a Laurent ring whose generators are all non-invertible.
struct RingDescriptor {
    std::vector<std::string> generators;
    std::vector<bool> invertible;

    size_t arity() const { return generators.size(); }
    static RingDescriptor laurent(std::vector<std::string> names);
    static RingDescriptor polynomial(std::vector<std::string> names);
    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Sparse Laurent polynomial: exponent vector -> nonzero coefficient,
/// ordered lexicographically on exponents.
class LaurentPoly {
public:
    explicit LaurentPoly(size_t arity = 0) : arity_(arity) {}

    static LaurentPoly constant(size_t arity, const Scalar& c);
    static LaurentPoly monomial(const Exponent& e, const Scalar& c = Scalar(1));
    static LaurentPoly generator(size_t arity, size_t index, int power = 1);

    size_t arity() const { return arity_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool is_single_term() const { return terms_.size() == 1; }
    /// The value when this is a constant (possibly zero), nothing otherwise.
    std::optional<Scalar> as_constant() const;
    Scalar coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const Scalar& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& a);
    LaurentPoly& operator+=(const LaurentPoly& b);
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this += -b; }
    LaurentPoly pow(unsigned e) const;
    /// Inverse of a single-term polynomial (caller checks invertibility of generators).
    LaurentPoly monomial_inverse() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str(const RingDescriptor& ring) const;

private:
    void check_arity(const LaurentPoly& other) const;
    size_t arity_;
    std::map<Exponent, Scalar> terms_;
};

/// True iff p is a single term whose generators with nonzero exponent are all invertible.
bool is_unit(const LaurentPoly& p, const RingDescriptor& ring);

/// A K-algebra automorphism given by the images of the generators under it and
/// under its inverse. Construction checks that the two maps compose to the
/// identity on every generator.
class RingAutomorphism {
public:
    RingAutomorphism() = default;
    RingAutomorphism(const RingDescriptor& ring, std::vector<LaurentPoly> forward, std::vector<LaurentPoly> inverse);

    static RingAutomorphism identity(const RingDescriptor& ring);
    /// x_j -> factor_j * x_j.
    static RingAutomorphism scaling(const RingDescriptor& ring, const std::vector<Scalar>& factors);

    const std::vector<LaurentPoly>& forward_images() const { return forward_; }
    const std::vector<LaurentPoly>& inverse_images() const { return inverse_; }
    const RingDescriptor& ring() const { return ring_; }

    LaurentPoly apply(const LaurentPoly& p) const;
    LaurentPoly apply_inverse(const LaurentPoly& p) const;

    RingAutomorphism inverse() const;
    /// (*this) o other : first other, then this.
    RingAutomorphism compose(const RingAutomorphism& other) const;
    RingAutomorphism power(long e) const;
    /// True when every generator is mapped to a scalar multiple of itself.
    bool is_diagonal() const;

    friend bool operator==(const RingAutomorphism& a, const RingAutomorphism& b) {
        return a.forward_ == b.forward_ && a.inverse_ == b.inverse_;
    }

private:
    static LaurentPoly substitute(const RingDescriptor& ring, const std::vector<LaurentPoly>& images,
                                  const std::vector<LaurentPoly>& inverse_images, const LaurentPoly& p);
    RingDescriptor ring_;
    std::vector<LaurentPoly> forward_;
    std::vector<LaurentPoly> inverse_;
};

/// A K-rational point: one value per generator (nonzero where a negative exponent is evaluated).
struct PointEvaluation {
    std::vector<Scalar> values;
};

Scalar evaluate(const LaurentPoly& p, const PointEvaluation& pt);

/// Normal-form map for a quotient of a Laurent ring.
class Reducer {
public:
    virtual ~Reducer() = default;
    virtual LaurentPoly reduce(const LaurentPoly& p) const = 0;
};

/// The coefficient ring of a datum: a Laurent/polynomial ring, optionally modulo
/// an ideal presented by a Reducer. All products are returned in normal form.
class BaseRing {
public:
    BaseRing() = default;
    explicit BaseRing(RingDescriptor ring, std::shared_ptr<const Reducer> reducer = nullptr);

    const RingDescriptor& descriptor() const { return ring_; }
    size_t arity() const { return ring_.arity(); }
    bool is_quotient() const { return reducer_ != nullptr; }
    const std::shared_ptr<const Reducer>& reducer() const { return reducer_; }

    LaurentPoly reduce(const LaurentPoly& p) const { return reducer_ ? reducer_->reduce(p) : p; }
    LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return reduce(a * b); }
    LaurentPoly apply(const RingAutomorphism& s, const LaurentPoly& p) const { return reduce(s.apply(p)); }
    LaurentPoly one() const { return LaurentPoly::constant(arity(), Scalar(1)); }
    LaurentPoly generator(size_t j) const { return reduce(LaurentPoly::generator(arity(), j)); }
    bool is_unit(const LaurentPoly& p) const { return tgwa::is_unit(reduce(p), ring_); }

private:
    RingDescriptor ring_;
    std::shared_ptr<const Reducer> reducer_;
};

}  // namespace tgwa
