#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tgwa/engine.hpp"
#include "tgwa/lattice.hpp"

namespace tgwa {

/// Parameters (n, k, r, s, Lambda) of a multiparameter twisted Weyl algebra.
struct MTWAParams {
    size_t n = 1;
    int k = 1;
    ScalarMatrix r, s, lambda;

    /// Throws AlgebraError naming the first violated condition.
    void validate() const;
};

/// K[u_1^±1..u_n^±1, v_1^±1..v_n^±1]; u_i is generator i-1, v_i is generator n+i-1.
RingDescriptor mtwa_ring(size_t n);

/// sigma_i(u_j) = r_ij^-1 u_j, sigma_i(v_j) = s_ij^-1 v_j,
/// t_i = ((r_ii u_i)^k - (s_ii v_i)^k) / (r_ii^k - s_ii^k), mu_ij = r_ji^-k lambda_ji.
TGWDatum build_datum(const MTWAParams& p);

/// Per-generator character matrix: entry [i][c] is the factor by which sigma_i
/// scales generator c of R.
std::vector<std::vector<ParamMonomial>> character_matrix(const MTWAParams& p);

/// The lattice G of exponents d with u^d invariant, and the invariant monomials.
struct InvariantRing {
    LatticeBasis lattice;
    std::vector<LaurentPoly> generators;
};

InvariantRing invariant_lattice(const MTWAParams& p);

/// True iff Z^2n / G is torsion-free.
bool is_domain_quotient(const MTWAParams& p);

/// R modulo the ideal generated by u^d - c(d), d in a lattice L, where c is a
/// character of L given by its values on the basis of L. Normal forms are
/// combinations of u^rep over canonical coset representatives.
class CosetReducer : public Reducer {
public:
    CosetReducer(LatticeBasis lattice, std::vector<Scalar> values);

    LaurentPoly reduce(const LaurentPoly& p) const override;
    const CosetSystem& cosets() const { return cosets_; }
    const LatticeBasis& lattice() const { return cosets_.lattice(); }
    const std::vector<Scalar>& values() const { return values_; }
    /// c(g) for g in the lattice.
    Scalar character(const IntVector& g) const;

private:
    CosetSystem cosets_;
    std::vector<Scalar> values_;
};

/// A / <n> realized as the TGW algebra over R / R n, n = (u^{d_j} - c_j).
struct SimpleQuotient {
    MTWAParams params;
    InvariantRing invariants;
    std::vector<Scalar> point;
    std::shared_ptr<const CosetReducer> reducer;  // null when G = 0
    TGWDatum datum;
};

SimpleQuotient build_quotient(const MTWAParams& p, const std::vector<Scalar>& point);

/// One named item of a certificate report.
struct CertificateItem {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CertificateReport {
    std::vector<CertificateItem> items;
    bool ok() const;
};

/// Unit identities r_ii^{-dk} t_i - sigma_i^d(t_i) = unit * v_i^k for d = 1..depth,
/// faithfulness of the Z^n action on the quotient ring, regularity of the t_i
/// on the coset box of the given radius, and ideal-correspondence spot checks.
CertificateReport simplicity_certificate(const SimpleQuotient& q, int depth = 8, int radius = 4);

/// Stabilizer of the Z^n action on R/J for any proper invariant J: the g with
/// prod_i r_ij^{g_i} = prod_i s_ij^{g_i} = 1 for all j.
LatticeBasis action_kernel(const MTWAParams& p);

/// Coset representatives u^rep with every coordinate in [-radius, radius].
std::vector<IntVector> coset_box(const CosetSystem& cs, int radius);

/// The relations of the explicit MTWA presentation, evaluated in the engine.
VerificationReport verify_mtwa_relations(const TGWAlgebra& a, const MTWAParams& p);

/// One elimination step of the graded-ideal argument on a = a_g + a_h:
/// b = xi_g a - u^-d a u^d must have zero g-component and h-component (xi_g - xi_h) a_h.
bool elimination_step_holds(const TGWAlgebra& alg, const MTWAParams& p, const AlgebraElement& a_g,
                            const AlgebraElement& a_h);

}  // namespace tgwa
