#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgwa/laurent.hpp"

namespace tgwa {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Twisted generalized Weyl datum (R, sigma, t) with parameter matrix mu.
/// Diagonal entries of mu are ignored.
struct TGWDatum {
    BaseRing ring;
    std::vector<RingAutomorphism> sigma;
    std::vector<LaurentPoly> t;
    ScalarMatrix mu;

    size_t n() const { return sigma.size(); }
    /// Shape checks, pairwise commutation of the sigma_i, nonzero mu and t.
    void validate() const;
};

struct ConsistencyWitness {
    size_t i = 0, j = 0;
    std::optional<size_t> k;  // set for the three-index relation
    LaurentPoly lhs, rhs;
};

struct ConsistencyResult {
    bool consistent = true;
    std::optional<ConsistencyWitness> witness;
};

/// Checks sigma_i sigma_j(t_i t_j) = mu_ij mu_ji sigma_i(t_i) sigma_j(t_j) for i != j
/// and t_j sigma_i sigma_k(t_j) = sigma_i(t_j) sigma_k(t_j) for distinct i, j, k.
ConsistencyResult check_consistency(const TGWDatum& d);

/// Monic minimal polynomial of sigma_i on the span of its orbit through t_j,
/// stored as coefficients lowest degree first.
struct MinimalPolyTable {
    std::vector<std::vector<std::vector<Scalar>>> coeffs;
    size_t n() const { return coeffs.size(); }
    int degree(size_t i, size_t j) const { return static_cast<int>(coeffs[i][j].size()) - 1; }
    std::string poly_str(size_t i, size_t j) const;
};

MinimalPolyTable finitistic_analysis(const TGWDatum& d, int cap = 16);

struct CartanMatrix {
    std::vector<std::vector<int>> a;
    /// "(A1)^n" with n substituted, "A2", or empty.
    std::string type_label;
};

CartanMatrix cartan_matrix(const MinimalPolyTable& table);

struct A1nCertificate {
    ScalarMatrix gamma;  // sigma_i(t_j) = gamma_ij t_j, diagonal unused
};

/// Throws AlgebraError when some sigma_i(t_j) is not a multiple of t_j or when
/// mu_ij mu_ji != gamma_ij gamma_ji.
A1nCertificate a1n_certificate(const TGWDatum& d);

}  // namespace tgwa
