#include "tgwa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tgwa/json_io.hpp"

namespace tgwa {

namespace {

struct Options {
    std::string field = "Qq";
    std::string output;
    std::string input = "-";
    std::string name;
    size_t n = 2;
    int depth = 8;
    int radius = 4;
    std::string point, alpha, beta, zeta, q;
};

struct Result {
    json doc;
    int code = kExitOk;
};

json read_doc(const std::string& path, std::istream& in) {
    std::stringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw InputError("cannot open input file '" + path + "'");
        buf << f.rdbuf();
    }
    return json::parse(buf.str());
}

std::vector<Scalar> parse_list(const std::string& text, FieldDescriptor field) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item, field));
    return out;
}

MTWAParams params_of(const json& doc, FieldDescriptor field) {
    if (doc.contains("params")) return params_from_json(doc.at("params"), field);
    if (doc.contains("r")) return params_from_json(doc, field);
    throw InputError("document has no MTWA parameters");
}

TGWDatum datum_of(const json& doc, FieldDescriptor field) {
    if (doc.contains("datum")) return datum_from_json(doc.at("datum"), field);
    return build_datum(params_of(doc, field));
}

std::optional<std::vector<Scalar>> point_of(const json& doc, const Options& o, FieldDescriptor field) {
    if (!o.point.empty()) return parse_list(o.point, field);
    if (doc.contains("point")) return scalars_from_json(doc.at("point"), field);
    return std::nullopt;
}

json min_polys(const MinimalPolyTable& t) {
    json out = json::array();
    for (size_t i = 0; i < t.n(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < t.n(); ++j) row.push_back(t.poly_str(i, j));
        out.push_back(row);
    }
    return out;
}

Result check_consistency_cmd(const json& doc, FieldDescriptor f) {
    const ConsistencyResult r = check_consistency(datum_of(doc, f));
    json out = {{"consistent", r.consistent}};
    if (r.witness) {
        const auto& w = *r.witness;
        const TGWDatum d = datum_of(doc, f);
        out["witness"] = {{"i", w.i + 1},
                          {"j", w.j + 1},
                          {"k", w.k ? json(*w.k + 1) : json(nullptr)},
                          {"lhs", w.lhs.str(d.ring.descriptor())},
                          {"rhs", w.rhs.str(d.ring.descriptor())}};
    }
    return {out, r.consistent ? kExitOk : kExitFailed};
}

Result cartan_cmd(const json& doc, FieldDescriptor f) {
    const MinimalPolyTable t = finitistic_analysis(datum_of(doc, f));
    const CartanMatrix c = cartan_matrix(t);
    return {{{"cartan", c.a}, {"type", c.type_label}, {"minimal_polynomials", min_polys(t)}}};
}

Result invariant_lattice_cmd(const json& doc, FieldDescriptor f) {
    const MTWAParams p = params_of(doc, f);
    const InvariantRing inv = invariant_lattice(p);
    json mons = json::array();
    for (const auto& g : inv.generators) mons.push_back(g.str(mtwa_ring(p.n)));
    return {{{"generators", to_json(inv.lattice)}, {"monomials", mons}, {"rank", inv.lattice.rank()}}};
}

Result is_domain_cmd(const json& doc, FieldDescriptor f) {
    const MTWAParams p = params_of(doc, f);
    const InvariantRing inv = invariant_lattice(p);
    json divisors = json::array();
    if (inv.lattice.rank() > 0)
        for (const auto& d : elementary_divisors(inv.lattice.matrix())) divisors.push_back(d.get_str());
    return {{{"domain", is_domain_quotient(p)}, {"lattice", to_json(inv.lattice)}, {"elementary_divisors", divisors}}};
}

SimpleQuotient quotient_of(const json& doc, const Options& o, FieldDescriptor f) {
    const MTWAParams p = params_of(doc, f);
    const auto point = point_of(doc, o, f);
    return build_quotient(p, point ? *point : std::vector<Scalar>{});
}

Result quotient_cmd(const json& doc, const Options& o, FieldDescriptor f) {
    const SimpleQuotient q = quotient_of(doc, o, f);
    json t = json::array(), ts = json::array();
    for (const auto& x : q.datum.t) {
        t.push_back(to_json(x));
        ts.push_back(x.str(q.datum.ring.descriptor()));
    }
    return {{{"params", to_json(q.params)},
             {"point", to_json(q.point)},
             {"lattice", to_json(q.invariants.lattice)},
             {"is_quotient", q.datum.ring.is_quotient()},
             {"t", t},
             {"t_str", ts}}};
}

Result simplicity_cmd(const json& doc, const Options& o, FieldDescriptor f) {
    const SimpleQuotient q = quotient_of(doc, o, f);
    const CertificateReport rep = simplicity_certificate(q, o.depth, o.radius);
    json out = to_json(rep);
    out["params"] = to_json(q.params);
    out["point"] = to_json(q.point);
    return {out, rep.ok() ? kExitOk : kExitFailed};
}

Result weight_module_cmd(const json& doc, const Options& o, FieldDescriptor f) {
    const MTWAParams p = params_of(doc, f);
    WeightPoint w;
    if (!o.alpha.empty() || !o.beta.empty())
        w = {parse_list(o.alpha, f), parse_list(o.beta, f)};
    else if (doc.contains("weight"))
        w = weight_from_json(doc.at("weight"), f);
    else
        throw InputError("weight-module needs --alpha and --beta or a 'weight' field");
    std::optional<SimpleQuotient> q;
    if (const auto point = point_of(doc, o, f)) q = build_quotient(p, *point);
    const WeightModule m(p, w, q);
    json out = module_to_json(m, o.radius);
    const ModuleReport oracle = compare_with_oracle(m, o.radius), rel = verify_module_relations(m, o.radius);
    out["params"] = to_json(p);
    out["stabilizer_trivial"] = check_stabilizer(p, w);
    out["oracle"] = to_json(oracle);
    out["relations"] = to_json(rel);
    return {out, oracle.ok() && rel.ok() ? kExitOk : kExitFailed};
}

Result whittaker_cmd(const json& doc, const Options& o, FieldDescriptor f) {
    const MTWAParams p = params_of(doc, f);
    const std::vector<Scalar> zeta = o.zeta.empty() ? std::vector<Scalar>(p.n, Scalar(1)) : parse_list(o.zeta, f);
    if (!whittaker_condition(build_datum(p)))
        return {{{"whittaker_condition", false},
                 {"error", "no Whittaker module: gamma_ij = mu_ij fails, equivalently lambda_ij != (r_ij/r_ji)^k"}},
                kExitFailed};
    WhittakerIdeal ideal{LatticeBasis(2 * p.n), {}};
    if (doc.contains("ideal")) {
        const json& id = doc.at("ideal");
        if (!id.contains("lattice") || !id.contains("values")) throw InputError("ideal needs 'lattice' and 'values'");
        ideal = {lattice_from_json(id.at("lattice"), 2 * p.n), scalars_from_json(id.at("values"), f)};
    } else if (const auto point = point_of(doc, o, f)) {
        ideal = {invariant_lattice(p).lattice, *point};
    }
    const WhittakerModule m = build_whittaker(p, zeta, ideal);
    const CertificateReport rep = verify_whittaker(m, o.radius);
    json out = to_json(rep);
    out["whittaker_condition"] = true;
    out["zeta"] = to_json(zeta);
    out["ideal"] = {{"lattice", to_json(ideal.lattice)}, {"values", to_json(ideal.values)}};
    out["box_radius"] = o.radius;
    return {out, rep.ok() ? kExitOk : kExitFailed};
}

Result diagram_cmd(const json& doc, const Options& o, FieldDescriptor f) {
    std::vector<Scalar> q;
    if (!o.q.empty())
        q = parse_list(o.q, f);
    else if (doc.contains("q"))
        q = scalars_from_json(doc.at("q"), f);
    else
        q = default_q(o.n);
    ScalarMatrix lambda;
    if (doc.contains("lambda"))
        lambda = matrix_from_json(doc.at("lambda"), f);
    else if (doc.contains("params"))
        lambda = matrix_from_json(doc.at("params").at("lambda"), f);
    else
        lambda = default_lambda(q.size());
    const CertificateReport rep = verify_theoremC(q, lambda);
    json out = to_json(rep);
    out["q"] = to_json(q);
    out["lambda"] = to_json(lambda);
    return {out, rep.ok() ? kExitOk : kExitFailed};
}

Result preset_cmd(const Options& o) {
    const Preset p = build_preset(o.name, o.n);
    json out = {{"preset", p.name}, {"n", p.n}, {"type", p.type_label}, {"datum", to_json(p.datum)}};
    if (p.params) out["params"] = to_json(*p.params);
    if (p.quotient) out["point"] = to_json(p.quotient->point);
    if (!p.q.empty()) out["q"] = to_json(p.q);
    if (p.invariants) out["invariant_lattice"] = to_json(*p.invariants);
    out["minimal_polynomials"] = min_polys(finitistic_analysis(p.datum));
    const CertificateReport check = check_preset(p);
    out["check"] = to_json(check);
    return {out, check.ok() ? kExitOk : kExitFailed};
}

void emit(const json& doc, const Options& o, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write output file '" + o.output + "'");
    f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations with twisted generalized Weyl algebras", "tgwa"};
    app.require_subcommand(1, 1);
    app.add_option("--field", o.field, "Coefficient field: Q or Qq")->check(CLI::IsMember({"Q", "Qq"}));
    app.add_option("-o,--output", o.output, "Write the JSON result to a file");

    auto doc_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("input", o.input, "Input JSON document ('-' for standard input)");
        return c;
    };
    CLI::App* consistency = doc_cmd("check-consistency", "Check the mu-consistency identities");
    CLI::App* cartan = doc_cmd("cartan", "Minimal polynomials and generalized Cartan matrix");
    CLI::App* lattice = doc_cmd("invariant-lattice", "Invariant lattice G of an MTWA");
    CLI::App* domain = doc_cmd("is-domain", "Whether the simple quotients are domains");
    CLI::App* quotient = doc_cmd("quotient", "Build the quotient at an ideal point");
    CLI::App* simplicity = doc_cmd("simplicity-cert", "Simplicity certificate of a quotient");
    CLI::App* weight = doc_cmd("weight-module", "Simple weight module of an MTWA");
    CLI::App* whittaker = doc_cmd("whittaker", "Whittaker module of an MTWA");
    CLI::App* diagram = app.add_subcommand("verify-diagram", "Check the Jordan / quantized Weyl diagram");
    diagram->add_option("input", o.input, "Optional JSON document with q and lambda");
    CLI::App* preset = app.add_subcommand("preset", "Build a named preset");
    preset->add_option("name", o.name, "Preset name")->required();

    for (CLI::App* c : {quotient, simplicity, weight, whittaker})
        c->add_option("--point", o.point, "Comma-separated values of the invariant generators");
    for (CLI::App* c : {simplicity, weight, whittaker}) c->add_option("--radius", o.radius, "Box radius");
    simplicity->add_option("--depth", o.depth, "Depth of the unit identities");
    weight->add_option("--alpha", o.alpha, "Comma-separated alpha_i");
    weight->add_option("--beta", o.beta, "Comma-separated beta_i");
    whittaker->add_option("--zeta", o.zeta, "Comma-separated type zeta_i");
    diagram->add_option("--q", o.q, "Comma-separated q_i");
    for (CLI::App* c : {diagram, preset}) c->add_option("--n", o.n, "Rank");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        const FieldDescriptor f = FieldDescriptor::parse(o.field);
        Result r;
        if (preset->parsed()) {
            r = preset_cmd(o);
        } else if (diagram->parsed()) {
            const json doc = diagram->count("input") ? read_doc(o.input, in) : json::object();
            r = diagram_cmd(doc, o, f);
        } else {
            const json doc = read_doc(o.input, in);
            if (!doc.is_object()) throw InputError("input document must be a JSON object");
            if (consistency->parsed()) r = check_consistency_cmd(doc, f);
            if (cartan->parsed()) r = cartan_cmd(doc, f);
            if (lattice->parsed()) r = invariant_lattice_cmd(doc, f);
            if (domain->parsed()) r = is_domain_cmd(doc, f);
            if (quotient->parsed()) r = quotient_cmd(doc, o, f);
            if (simplicity->parsed()) r = simplicity_cmd(doc, o, f);
            if (weight->parsed()) r = weight_module_cmd(doc, o, f);
            if (whittaker->parsed()) r = whittaker_cmd(doc, o, f);
        }
        emit(r.doc, o, out);
        return r.code;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInput;
}

}  // namespace tgwa
