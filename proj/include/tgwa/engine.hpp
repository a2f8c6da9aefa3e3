#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tgwa/datum.hpp"

namespace tgwa {

using Degree = std::vector<int>;

/// sum_g r_g Z^(g), with Z^(g) = Z_1^(g_1) ... Z_n^(g_n), Z_i^(j) = X_i^j (j >= 0) or Y_i^-j.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(size_t n, size_t arity) : n_(n), arity_(arity) {}

    size_t rank() const { return n_; }
    size_t arity() const { return arity_; }
    const std::map<Degree, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly component(const Degree& g) const;

    void add_term(const Degree& g, const LaurentPoly& r);

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
    AlgebraElement& operator+=(const AlgebraElement& b);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str(const RingDescriptor& ring) const;

private:
    void check(const AlgebraElement& other) const;
    size_t n_ = 0, arity_ = 0;
    std::map<Degree, LaurentPoly> terms_;
};

/// The TGW algebra of a regular, consistent datum of type (A1)^n, realized by
/// the presentation X_i r = sigma_i(r) X_i, Y_i r = sigma_i^-1(r) Y_i,
/// Y_i X_i = t_i, X_i Y_i = sigma_i(t_i), X_i Y_j = mu_ij Y_j X_i,
/// X_i X_j = gamma_ij mu_ij^-1 X_j X_i, Y_j Y_i = gamma_ij mu_ji^-1 Y_i Y_j.
class TGWAlgebra {
public:
    explicit TGWAlgebra(TGWDatum datum);

    const TGWDatum& datum() const { return datum_; }
    const BaseRing& ring() const { return datum_.ring; }
    const A1nCertificate& certificate() const { return cert_; }
    size_t n() const { return datum_.n(); }

    AlgebraElement zero() const { return AlgebraElement(n(), ring().arity()); }
    AlgebraElement one() const { return ring_element(ring().one()); }
    AlgebraElement ring_element(const LaurentPoly& r) const { return monomial(Degree(n(), 0), r); }
    AlgebraElement monomial(const Degree& g, const LaurentPoly& r) const;
    AlgebraElement monomial(const Degree& g) const { return monomial(g, ring().one()); }
    AlgebraElement X(size_t i) const;
    AlgebraElement Y(size_t i) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement product(const std::vector<AlgebraElement>& factors) const;
    AlgebraElement power(const AlgebraElement& a, unsigned e) const;

    /// Degree-zero coefficient of a*b.
    LaurentPoly graded_pairing(const AlgebraElement& a, const AlgebraElement& b) const;

    /// kappa with Z^(g) Z^(h) = kappa(g, h) Z^(g+h).
    LaurentPoly structure_constant(const Degree& g, const Degree& h) const;

    /// sigma_g = sigma_1^g_1 ... sigma_n^g_n.
    const RingAutomorphism& sigma_automorphism(const Degree& g) const;
    LaurentPoly sigma(const Degree& g, const LaurentPoly& r) const { return ring().apply(sigma_automorphism(g), r); }

private:
    // Z^(g) times X_i (sign > 0) or Y_i (sign < 0).
    LaurentPoly generator_constant(const Degree& g, size_t i, int sign) const;
    const RingAutomorphism& sigma_power(size_t i, int e) const;
    void check_element(const AlgebraElement& a) const;

    TGWDatum datum_;
    A1nCertificate cert_;
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<size_t, int>, RingAutomorphism> powers;
        std::map<Degree, RingAutomorphism> sigma;
        std::map<std::pair<Degree, Degree>, LaurentPoly> kappa;
    };
    std::shared_ptr<Cache> cache_;
};

struct RelationCheck {
    std::string name;
    AlgebraElement residual;  // zero for a passing identity
    bool passed = true;
    bool ok() const { return passed; }
};

struct VerificationReport {
    std::vector<RelationCheck> checks;
    bool ok() const;
    size_t failures() const;
};

/// Evaluates every presentation relation through multiply. Ring-coefficient
/// relations are tested on the ring generators, their inverses where they exist,
/// and the t_j.
VerificationReport verify_defining_relations(const TGWAlgebra& a);

/// The identities attached to the minimal polynomials p_ij (i != j) and p_ii,
/// together with the linear independence of the shorter monomial families.
VerificationReport verify_serre_identities(const TGWAlgebra& a, const MinimalPolyTable& table);

/// A letter of a monic monomial: X_i (x = true) or Y_i.
struct Letter {
    size_t index;
    bool x;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Arithmetic in the TGW construction (before dividing by the maximal graded
/// ideal), for any datum. Elements are R-combinations of reduced words
/// Y-word . X-word in which no index occurs in both parts.
class TGWConstruction {
public:
    explicit TGWConstruction(TGWDatum datum);

    struct Element {
        std::map<std::pair<Word, Word>, LaurentPoly> terms;  // (Y-word, X-word) -> coefficient
        bool is_zero() const { return terms.empty(); }
    };

    const TGWDatum& datum() const { return datum_; }
    Element word(const Word& w) const;
    Element ring_element(const LaurentPoly& r) const;
    Element add(const Element& a, const Element& b) const;
    Element scale(const Scalar& c, const Element& a) const;
    Element multiply(const Element& a, const Element& b) const;
    Degree degree(const Word& w) const;
    /// The coefficient of the empty word (the degree-zero part).
    LaurentPoly degree_zero(const Element& a) const;

    /// All monic reduced words of the given degree (Y-part then X-part, disjoint indices).
    std::vector<Word> reduced_words(const Degree& g) const;

private:
    // r * (yw . xw) * letter, accumulated into out.
    void append_letter(const LaurentPoly& r, const Word& yw, const Word& xw, Letter l, Element& out) const;
    LaurentPoly sigma(const Degree& g, const LaurentPoly& r) const;

    TGWDatum datum_;
};

}  // namespace tgwa
