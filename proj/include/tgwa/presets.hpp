#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgwa/mtwa.hpp"

namespace tgwa {

/// k = 2, lambda = 1, r_ij = r_i^delta_ij, s_ij = s_i^delta_ij.
MTWAParams benkart_params(const std::vector<Scalar>& r, const std::vector<Scalar>& s);
/// Benkart parameters with r_i = q^-1, s_i = q.
MTWAParams hayashi_params(size_t n);
/// Benkart parameters with r_i = 2, s_i = 3 (trivial invariant lattice).
MTWAParams generic_benkart_params(size_t n);
/// k = 1, r_ij = 1 (j <= i) or q_i^-1 (j > i), s_ij = 1 (j < i) or q_i^-1 (j >= i).
MTWAParams jordan_params(const std::vector<Scalar>& q, const ScalarMatrix& lambda);

/// Values of the HNF invariant generators at (w_1 - q_1^-1, ..., w_n - q_n^-1),
/// w_1 = -u_1, w_j = u_j v_{j-1}^-1. The HNF generator for w_1 is u_1.
std::vector<Scalar> jordan_point(const std::vector<Scalar>& q);

/// q_i = q^i.
std::vector<Scalar> default_q(size_t n);
/// lambda_ij = (i+1)/(j+1) in 1-based indices.
ScalarMatrix default_lambda(size_t n);

/// P = K[s_1..s_n], tau_i(s_j) = s_j (j<i), 1 + q_i s_i + sum_{k<i} (q_k - 1) s_k (j=i),
/// q_i s_j (j>i); t_i = s_i; mu_ij = lambda_ji (i<j), q_j lambda_ji (i>j).
TGWDatum quantized_weyl_datum(const std::vector<Scalar>& q, const ScalarMatrix& lambda);

/// R = K[t_1..t_n], sigma_i(t_j) = t_j - delta_ij.
TGWDatum example_3_4(size_t n, const ScalarMatrix& mu);
/// R = K[H], sigma_1(H) = H+1, sigma_2(H) = H-1, t_1 = H, t_2 = H+1, mu = 1.
TGWDatum example_3_5();

struct Preset {
    std::string name;
    size_t n = 0;
    TGWDatum datum;
    std::optional<MTWAParams> params;
    std::optional<SimpleQuotient> quotient;
    std::vector<Scalar> q;  // quantized-weyl and jordan
    // expected facts
    std::vector<std::vector<std::vector<Scalar>>> minimal_polys;
    std::string type_label;
    std::optional<LatticeBasis> invariants;
};

std::vector<std::string> preset_names();
/// Throws AlgebraError for an unknown name. Example 3.5 ignores n.
Preset build_preset(const std::string& name, size_t n = 2);
/// Consistency, minimal polynomials, Cartan type and invariant lattice against the expected facts.
CertificateReport check_preset(const Preset& p);

/// Degree-n GWA over K[rho^pm, sigma^pm] with phi_i(rho_j) = r_i^-delta_ij rho_j,
/// phi_i(sigma_j) = s_i^-delta_ij sigma_j, t_i = (r_i^2 rho_i^2 - s_i^2 sigma_i^2)/(r_i^2 - s_i^2).
TGWDatum gwa_datum(const std::vector<Scalar>& r, const std::vector<Scalar>& s);
/// Relations (R1)-(R5') in the GWA, and agreement with the Benkart MTWA datum.
VerificationReport verify_gwa_realization(const std::vector<Scalar>& r, const std::vector<Scalar>& s);

/// The four Serre relations of the A2 example, checked as elements of the
/// maximal graded ideal of the construction by pairing against reduced words,
/// plus a perturbed element that must fail.
CertificateReport verify_example_3_5(int box = 2);

/// a / z^e in the localization of K[s_1..s_n] at the z_i = 1 + sum_{k<=i} (q_k - 1) s_k.
struct ZFraction {
    LaurentPoly num;
    std::vector<int> den;
};

class ZLocalization {
public:
    explicit ZLocalization(std::vector<Scalar> q);

    size_t n() const { return q_.size(); }
    const RingDescriptor& ring() const { return ring_; }
    /// z_0 = 1.
    const LaurentPoly& z(size_t j) const { return z_[j]; }
    ZFraction make(const LaurentPoly& a, std::vector<int> den = {}) const;
    ZFraction constant(const Scalar& c) const;
    /// c * z_j^e.
    ZFraction z_power(size_t j, int e, const Scalar& c = Scalar(1)) const;
    ZFraction add(const ZFraction& a, const ZFraction& b) const;
    ZFraction mul(const ZFraction& a, const ZFraction& b) const;
    bool equal(const ZFraction& a, const ZFraction& b) const;
    /// The extension of tau_i; throws when tau_i(z_j) is not a multiple of z_j.
    ZFraction tau(size_t i, const ZFraction& a) const;
    std::string str(const ZFraction& a) const;

private:
    LaurentPoly z_monomial(const std::vector<int>& e) const;
    std::vector<Scalar> q_;
    RingDescriptor ring_;
    std::vector<LaurentPoly> z_;
    std::vector<RingAutomorphism> tau_;
    std::vector<std::vector<Scalar>> tau_z_;  // tau_i(z_j) = tau_z_[i][j] z_j
};

/// The diagram relating the Jordan quotient and the localized quantized Weyl algebra.
CertificateReport verify_theoremC(const std::vector<Scalar>& q, const ScalarMatrix& lambda);

}  // namespace tgwa
