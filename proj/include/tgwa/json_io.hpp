#pragma once

#include <json.hpp>

#include "tgwa/modules.hpp"
#include "tgwa/presets.hpp"

namespace tgwa {

using json = nlohmann::json;

/// A document that does not match the expected schema.
class InputError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, FieldDescriptor field = {});
json to_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(const json& j, FieldDescriptor field = {});
json to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j, FieldDescriptor field = {});

json to_json(const IntVector& v);
IntVector int_vector_from_json(const json& j);
json to_json(const LatticeBasis& l);
LatticeBasis lattice_from_json(const json& j, size_t ambient);

/// [[exponent, coefficient], ...] in lexicographic exponent order.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, size_t arity, FieldDescriptor field = {});

json to_json(const RingDescriptor& r);
RingDescriptor ring_from_json(const json& j);

/// {"ring", "sigma": [{"forward", "inverse"}], "t", "mu"}. Reducers are not serialized.
json to_json(const TGWDatum& d);
TGWDatum datum_from_json(const json& j, FieldDescriptor field = {});

/// {"n", "k", "r", "s", "lambda"}.
json to_json(const MTWAParams& p);
MTWAParams params_from_json(const json& j, FieldDescriptor field = {});

json to_json(const WeightPoint& w);
WeightPoint weight_from_json(const json& j, FieldDescriptor field = {});

json to_json(const CertificateReport& r);
json to_json(const VerificationReport& r, const RingDescriptor& ring);
json to_json(const ModuleReport& r);

/// The module's shape, base weight and every action on the support box.
json module_to_json(const WeightModule& m, int radius);

}  // namespace tgwa
