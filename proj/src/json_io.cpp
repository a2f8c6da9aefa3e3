#include "tgwa/json_io.hpp"

namespace tgwa {

namespace {

const json& field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

void expect_array(const json& j, const std::string& what, std::optional<size_t> size = std::nullopt) {
    if (!j.is_array()) throw InputError(what + " must be an array");
    if (size && j.size() != *size)
        throw InputError(what + " must have " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
}

int small_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    const long v = j.get<long>();
    if (v < -(1L << 30) || v > (1L << 30)) throw InputError(what + " is out of range");
    return static_cast<int>(v);
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, FieldDescriptor field) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
    throw InputError("scalar must be a string or an integer, got " + j.dump());
}

json to_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

std::vector<Scalar> scalars_from_json(const json& j, FieldDescriptor field) {
    expect_array(j, "scalar list");
    std::vector<Scalar> out;
    for (const auto& x : j) out.push_back(scalar_from_json(x, field));
    return out;
}

json to_json(const ScalarMatrix& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(to_json(row));
    return out;
}

ScalarMatrix matrix_from_json(const json& j, FieldDescriptor field) {
    expect_array(j, "matrix");
    ScalarMatrix out;
    for (const auto& row : j) out.push_back(scalars_from_json(row, field));
    return out;
}

json to_json(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

IntVector int_vector_from_json(const json& j) {
    expect_array(j, "integer vector");
    IntVector out;
    for (const auto& x : j) {
        if (x.is_number_integer())
            out.emplace_back(x.get<long>());
        else if (x.is_string())
            out.emplace_back(x.get<std::string>());
        else
            throw InputError("integer vector entries must be integers");
    }
    return out;
}

json to_json(const LatticeBasis& l) {
    json out = json::array();
    for (const auto& v : l.basis()) out.push_back(to_json(v));
    return out;
}

LatticeBasis lattice_from_json(const json& j, size_t ambient) {
    expect_array(j, "lattice");
    std::vector<IntVector> rows;
    for (const auto& v : j) {
        rows.push_back(int_vector_from_json(v));
        if (rows.back().size() != ambient)
            throw InputError("lattice vectors must have " + std::to_string(ambient) + " entries");
    }
    return LatticeBasis(ambient, rows);
}

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({json(e), to_json(c)}));
    return out;
}

LaurentPoly poly_from_json(const json& j, size_t arity, FieldDescriptor field) {
    expect_array(j, "polynomial");
    LaurentPoly p(arity);
    for (const auto& term : j) {
        expect_array(term, "polynomial term", 2);
        expect_array(term[0], "exponent", arity);
        Exponent e;
        for (const auto& x : term[0]) e.push_back(small_int(x, "exponent"));
        p.add_term(e, scalar_from_json(term[1], field));
    }
    return p;
}

json to_json(const RingDescriptor& r) { return {{"generators", r.generators}, {"invertible", r.invertible}}; }

RingDescriptor ring_from_json(const json& j) {
    RingDescriptor r;
    const json& g = field_of(j, "generators");
    expect_array(g, "generators");
    for (const auto& x : g) {
        if (!x.is_string()) throw InputError("generator names must be strings");
        r.generators.push_back(x.get<std::string>());
    }
    const json& inv = field_of(j, "invertible");
    expect_array(inv, "invertible", r.generators.size());
    for (const auto& x : inv) {
        if (!x.is_boolean()) throw InputError("invertible flags must be booleans");
        r.invertible.push_back(x.get<bool>());
    }
    return r;
}

json to_json(const TGWDatum& d) {
    json sigma = json::array();
    for (const auto& s : d.sigma) {
        json f = json::array(), b = json::array();
        for (const auto& x : s.forward_images()) f.push_back(to_json(x));
        for (const auto& x : s.inverse_images()) b.push_back(to_json(x));
        sigma.push_back({{"forward", f}, {"inverse", b}});
    }
    json t = json::array();
    for (const auto& x : d.t) t.push_back(to_json(x));
    return {{"ring", to_json(d.ring.descriptor())}, {"sigma", sigma}, {"t", t}, {"mu", to_json(d.mu)}};
}

TGWDatum datum_from_json(const json& j, FieldDescriptor field) {
    TGWDatum d;
    const RingDescriptor r = ring_from_json(field_of(j, "ring"));
    d.ring = BaseRing(r);
    const json& sigma = field_of(j, "sigma");
    expect_array(sigma, "sigma");
    const size_t n = sigma.size();
    for (const auto& s : sigma) {
        std::vector<LaurentPoly> f, b;
        const json& fj = field_of(s, "forward");
        const json& bj = field_of(s, "inverse");
        expect_array(fj, "forward images", r.arity());
        expect_array(bj, "inverse images", r.arity());
        for (const auto& x : fj) f.push_back(poly_from_json(x, r.arity(), field));
        for (const auto& x : bj) b.push_back(poly_from_json(x, r.arity(), field));
        d.sigma.emplace_back(r, f, b);
    }
    const json& t = field_of(j, "t");
    expect_array(t, "t", n);
    for (const auto& x : t) d.t.push_back(poly_from_json(x, r.arity(), field));
    d.mu = matrix_from_json(field_of(j, "mu"), field);
    d.validate();
    return d;
}

json to_json(const MTWAParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"r", to_json(p.r)}, {"s", to_json(p.s)}, {"lambda", to_json(p.lambda)}};
}

MTWAParams params_from_json(const json& j, FieldDescriptor field) {
    MTWAParams p;
    const int n = small_int(field_of(j, "n"), "n");
    if (n <= 0) throw InputError("n must be positive");
    p.n = static_cast<size_t>(n);
    p.k = small_int(field_of(j, "k"), "k");
    p.r = matrix_from_json(field_of(j, "r"), field);
    p.s = matrix_from_json(field_of(j, "s"), field);
    p.lambda = matrix_from_json(field_of(j, "lambda"), field);
    p.validate();
    return p;
}

json to_json(const WeightPoint& w) { return {{"alpha", to_json(w.alpha)}, {"beta", to_json(w.beta)}}; }

WeightPoint weight_from_json(const json& j, FieldDescriptor field) {
    return {scalars_from_json(field_of(j, "alpha"), field), scalars_from_json(field_of(j, "beta"), field)};
}

json to_json(const CertificateReport& r) {
    json items = json::array();
    for (const auto& i : r.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
    return {{"items", items}, {"ok", r.ok()}};
}

json to_json(const VerificationReport& r, const RingDescriptor& ring) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) entry["residual"] = c.residual.str(ring);
        checks.push_back(entry);
    }
    return {{"checks", checks}, {"ok", r.ok()}, {"failures", r.failures()}};
}

json to_json(const ModuleReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"relation", f.relation}, {"g", f.g}});
    return {{"checked", r.checked}, {"failures", failures}, {"ok", r.ok()}};
}

json module_to_json(const WeightModule& m, int radius) {
    json breaks = json::array();
    for (const auto& b : m.breaks().breaks) breaks.push_back(b ? json(*b) : json(nullptr));
    json actions = json::array();
    for (const Degree& g : m.support_box(radius))
        for (size_t i = 0; i < m.n(); ++i)
            for (Gen gen : {Gen::X, Gen::Y}) {
                const Action a = m.act_closed_form(gen, i, g);
                actions.push_back({{"gen", std::string(gen == Gen::X ? "X" : "Y") + std::to_string(i + 1)},
                                   {"g", g},
                                   {"scalar", to_json(a.scalar)},
                                   {"target", a.target ? json(*a.target) : json(nullptr)}});
            }
    return {{"shape", m.shape().tau},
            {"breaks", breaks},
            {"input_weight", to_json(m.input_weight())},
            {"base_weight", to_json(m.base_weight())},
            {"box_radius", radius},
            {"actions", actions}};
}

}  // namespace tgwa
