#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgwa/mtwa.hpp"

namespace tgwa {

/// The maximal ideal (u_i - alpha_i, v_i - beta_i) of the MTWA base ring.
struct WeightPoint {
    std::vector<Scalar> alpha, beta;

    size_t n() const { return alpha.size(); }
    /// alpha followed by beta, matching the generator order of mtwa_ring.
    PointEvaluation evaluation() const;
    friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
};

/// Shape and nonzero coordinates; with a quotient also the lattice values.
void validate_weight(const MTWAParams& p, const WeightPoint& w, const SimpleQuotient* q = nullptr);

/// The weight of Z^(g) v_0: alpha_i prod_l r_li^g_l, beta_i prod_l s_li^g_l.
WeightPoint shifted_weight(const MTWAParams& p, const WeightPoint& w, const std::vector<int>& g);

/// True iff the stabilizer of the weight under the Z^n action is trivial.
bool check_stabilizer(const MTWAParams& p, const WeightPoint& w);

/// Per direction, the unique g_i with t_i in sigma_g(m) iff g_i = that value.
struct BreakData {
    std::vector<std::optional<long>> breaks;
    bool degenerate() const;
};

BreakData break_structure(const MTWAParams& p, const WeightPoint& w);

/// tau_i = 0 (generic), -1 (highest weight, support g_i <= 0) or +1 (lowest
/// weight, support g_i >= 0) with the base weight moved onto the edge.
struct SupportShape {
    std::vector<int> tau;
    std::vector<int> shift;  // base = sigma_shift(m)
};

SupportShape classify_support(const BreakData& b);

/// True iff A_{-g} A_g is not contained in the ideal of the weight, i.e. the
/// product t_i sigma_i^-1(t_i)... (g_i > 0) or sigma_i(t_i)...sigma_i^|g_i|(t_i)
/// (g_i < 0) over all directions does not vanish at w.
bool graded_break_test(const TGWDatum& d, const WeightPoint& w, const std::vector<int>& g);

enum class Gen { X, Y };

struct Action {
    std::optional<Degree> target;  // empty when the generator kills the vector
    Scalar scalar;
};

/// The simple weight module with basis v_g = Z^(g) v_0, g in the support.
class WeightModule {
public:
    /// `quotient`, when given, must be built from `params`; the weight must lie on it.
    WeightModule(MTWAParams params, WeightPoint weight, std::optional<SimpleQuotient> quotient = std::nullopt);

    const MTWAParams& params() const { return params_; }
    const WeightPoint& input_weight() const { return input_; }
    const WeightPoint& base_weight() const { return base_; }
    const BreakData& breaks() const { return breaks_; }
    const SupportShape& shape() const { return shape_; }
    size_t n() const { return params_.n; }
    const TGWAlgebra& algebra() const { return *algebra_; }

    bool in_support(const Degree& g) const;
    /// Support degrees with every coordinate in [-radius, radius].
    std::vector<Degree> support_box(int radius) const;
    WeightPoint weight_of(const Degree& g) const { return shifted_weight(params_, base_, g); }

    /// b_{g,i} / c_{g,i} from the closed formulas.
    Action act_closed_form(Gen gen, size_t i, const Degree& g) const;
    /// gen Z^(g) = rho Z^(g') in the engine, scalar sigma_{-g'}(rho) at the base weight.
    Action act_oracle(Gen gen, size_t i, const Degree& g) const;

private:
    void check_support(const Degree& g) const;
    Scalar gamma_l(size_t i, size_t j, int l) const;
    Scalar epsilon_l(size_t i, size_t j, int l) const;

    MTWAParams params_;
    WeightPoint input_, base_;
    BreakData breaks_;
    SupportShape shape_;
    std::optional<SimpleQuotient> quotient_;
    std::shared_ptr<const TGWAlgebra> algebra_;
};

/// A finite combination of basis vectors v_g.
using ModuleVector = std::map<Degree, Scalar>;

ModuleVector act(const WeightModule& m, Gen gen, size_t i, const ModuleVector& v);

/// One failed identity of a module check.
struct ModuleFailure {
    std::string relation;
    Degree g;
};

struct ModuleReport {
    size_t checked = 0;
    std::vector<ModuleFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Every defining relation applied to every support vector of the box, using
/// the closed forms only.
ModuleReport verify_module_relations(const WeightModule& m, int radius);

/// Closed form against the engine oracle on the support box.
ModuleReport compare_with_oracle(const WeightModule& m, int radius);

/// gamma_ij = mu_ij for all i != j.
bool whittaker_condition(const TGWDatum& d);
/// lambda_ij = (r_ij / r_ji)^k for all i != j.
bool whittaker_condition(const MTWAParams& p);

/// The Z^n-invariant ideal of R generated by u^d - c(d), d in a sublattice L of G.
struct WhittakerIdeal {
    LatticeBasis lattice;
    std::vector<Scalar> values;
};

/// The module R/Q with X_i r = zeta_i sigma_i(r), Y_i r = zeta_i^-1 sigma_i^-1(r) t_i.
class WhittakerModule {
public:
    WhittakerModule(const MTWAParams& p, std::vector<Scalar> zeta, WhittakerIdeal ideal);

    const MTWAParams& params() const { return params_; }
    const TGWDatum& datum() const { return datum_; }
    const std::vector<Scalar>& zeta() const { return zeta_; }
    const WhittakerIdeal& ideal() const { return ideal_; }
    /// Null when Q = 0.
    const std::shared_ptr<const CosetReducer>& reducer() const { return reducer_; }

    LaurentPoly reduce(const LaurentPoly& r) const;
    LaurentPoly act(Gen gen, size_t i, const LaurentPoly& v) const;
    LaurentPoly act_ring(const LaurentPoly& a, const LaurentPoly& v) const { return reduce(a * v); }
    /// Coset representatives with coordinates in [-radius, radius].
    std::vector<IntVector> basis_box(int radius) const;

private:
    MTWAParams params_;
    TGWDatum datum_;
    std::vector<Scalar> zeta_;
    WhittakerIdeal ideal_;
    std::shared_ptr<const CosetReducer> reducer_;
    std::vector<RingAutomorphism> inverse_sigma_;
};

/// Throws AlgebraError when the Whittaker condition fails, zeta has a zero
/// coordinate, or the ideal is not proper and invariant.
WhittakerModule build_whittaker(const MTWAParams& p, const std::vector<Scalar>& zeta, const WhittakerIdeal& ideal);
WhittakerModule build_whittaker(const SimpleQuotient& q, const std::vector<Scalar>& zeta);

/// X_i 1 = zeta_i 1, every relation of the presentation on the basis box, and
/// cyclicity of the box vectors from 1.
CertificateReport verify_whittaker(const WhittakerModule& m, int radius = 4);

/// Q1 contained in Q2, and the projection R/Q1 -> R/Q2 intertwines all generators on the box.
CertificateReport check_morphism(const WhittakerModule& from, const WhittakerModule& to, int radius = 3);

}  // namespace tgwa
