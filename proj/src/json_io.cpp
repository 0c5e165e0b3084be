#include "holext/json_io.hpp"

#include <fstream>
#include <sstream>

#include "holext/errors.hpp"

namespace holext {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) schema(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

}  // namespace

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema("expected a [re, im] pair, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json polynomial_to_json(const ComplexPolynomial& p) {
    json out = json::array();
    for (const cplx& a : p.coefficients()) out.push_back(complex_to_json(a));
    return out;
}

ComplexPolynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) schema("polynomial must be an array of [re, im] pairs");
    std::vector<cplx> c;
    c.reserve(j.size());
    for (const json& e : j) c.push_back(complex_from_json(e));
    return ComplexPolynomial(std::move(c));
}

json samples_to_json(const BoundarySamples& s, const std::optional<std::string>& label) {
    json out;
    out["n"] = s.size();
    json values = json::array();
    for (const cplx& v : s.values()) values.push_back(complex_to_json(v));
    out["values"] = std::move(values);
    if (label) out["label"] = *label;
    return out;
}

BoundarySamples samples_from_json(const json& j) {
    const json& n = field(j, "n");
    if (!n.is_number_integer()) schema("\"n\" must be an integer");
    const json& values = field(j, "values");
    if (!values.is_array()) schema("\"values\" must be an array");
    if (values.size() != n.get<std::size_t>()) {
        schema("\"values\" has " + std::to_string(values.size()) + " entries but \"n\" is " + n.dump());
    }
    if (j.contains("label") && !j.at("label").is_string()) schema("\"label\" must be a string");
    std::vector<cplx> v;
    v.reserve(values.size());
    for (const json& e : values) v.push_back(complex_from_json(e));
    try {
        return BoundarySamples(std::move(v));
    } catch (const Error& e) {
        schema(e.what());
    }
}

BoundarySamples load_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) schema("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        schema(path.string() + ": " + e.what());
    }
    return samples_from_json(j);
}

void save_samples(const std::filesystem::path& path, const BoundarySamples& s, const std::optional<std::string>& label) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << samples_to_json(s, label).dump() << '\n';
}

json verdict_to_json(const Verdict& v) {
    return {
        {"status", to_string(v.status)},
        {"negative_energy", v.negative_energy},
        {"worst_moment", {{"n", v.worst_moment.n}, {"modulus", v.worst_moment.modulus}}},
        {"worst_cauchy", {{"w", complex_to_json(v.worst_cauchy.w)}, {"modulus", v.worst_cauchy.modulus}}},
        {"tol", v.tol},
        {"norm", v.norm},
        {"concordant", v.concordant},
    };
}

json certificate_to_json(const WitnessCertificate& c) {
    json out;
    out["witness"] = polynomial_to_json(c.witness);
    out["winding"] = c.winding;
    if (c.route == Route::Direct) {
        out["route"] = "direct";
    } else {
        out["route"] = {{"pole_lift", complex_to_json(c.pole)}};
    }
    out["trace"] = {
        {"normalizer", complex_to_json(c.trace.normalizer)},
        {"truncation", c.trace.truncation},
        {"tail_bound", c.trace.tail_bound},
        {"n_used", c.trace.n_used},
        {"re_min", c.trace.re_min},
        {"re_max", c.trace.re_max},
    };
    return out;
}

WitnessCertificate certificate_from_json(const json& j) {
    WitnessCertificate c;
    try {
        c.witness = polynomial_from_json(field(j, "witness"));
        c.winding = field(j, "winding").get<int>();
        const json& route = field(j, "route");
        if (route.is_string() && route.get<std::string>() == "direct") {
            c.route = Route::Direct;
        } else {
            c.route = Route::PoleLift;
            c.pole = complex_from_json(field(route, "pole_lift"));
        }
        const json& t = field(j, "trace");
        c.trace.normalizer = complex_from_json(field(t, "normalizer"));
        c.trace.truncation = field(t, "truncation").get<int>();
        c.trace.tail_bound = field(t, "tail_bound").get<double>();
        c.trace.n_used = field(t, "n_used").get<std::size_t>();
        c.trace.re_min = field(t, "re_min").get<double>();
        c.trace.re_max = field(t, "re_max").get<double>();
    } catch (const json::exception& e) {
        schema(e.what());
    }
    return c;
}

json campaign_to_json(const CampaignReport& r) {
    json failures = json::array();
    for (const CampaignFailure& f : r.failures) {
        failures.push_back({{"trial", f.trial}, {"p", polynomial_to_json(f.p)}, {"violations", f.violations}});
    }
    json histogram = json::object();
    for (const auto& [w, count] : r.winding_histogram) histogram[std::to_string(w)] = count;
    return {
        {"n0", r.config.n0},
        {"n", r.config.n},
        {"trials", r.config.trials},
        {"seed", r.config.seed},
        {"radius", r.config.radius},
        {"sampler", to_string(r.config.sampler)},
        {"completed", r.completed},
        {"skipped", r.skipped},
        {"aborted", r.aborted},
        {"failures", std::move(failures)},
        {"winding_histogram", std::move(histogram)},
        {"vieta_bound", r.bound},
        {"min_root_modulus", {{"min", r.min_root_modulus_min},
                              {"max", r.min_root_modulus_max},
                              {"mean", r.min_root_modulus_mean}}},
        {"max_vieta_error", r.max_vieta_error},
        {"max_residual", r.max_residual},
    };
}

}  // namespace holext
