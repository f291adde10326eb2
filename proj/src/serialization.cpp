#include "gfc/serialization.hpp"

namespace gfc {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw DomainError("complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(const SpherePointC& z) {
    if (z.is_infinity()) return "inf";
    return complex_to_json(z.value());
}

SpherePointC point_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf") throw DomainError("unknown sphere point");
        return SpherePointC::infinity();
    }
    return SpherePointC(complex_from_json(j));
}

json to_json(const CyclicGonalModel& m) {
    json slopes = json::array();
    for (const auto& s : m.slopes) slopes.push_back(json::array({complex_to_json(s.c0), complex_to_json(s.c1)}));
    json eqs = json::array();
    for (const auto& e : m.equations) eqs.push_back({{"exponents", e.exponents}});
    return {{"p", m.p}, {"t1_slopes", slopes}, {"equations", eqs}, {"subgroup", m.subgroup_rows}};
}

CyclicGonalModel model_from_json(const json& j) {
    CyclicGonalModel m;
    m.p = j.at("p").get<int>();
    for (const auto& s : j.at("t1_slopes")) m.slopes.push_back({complex_from_json(s.at(0)), complex_from_json(s.at(1))});
    for (const auto& e : j.at("equations")) m.equations.push_back({e.at("exponents").get<std::vector<int>>()});
    if (j.contains("subgroup")) m.subgroup_rows = j.at("subgroup").get<fp::Mat>();
    return m;
}

json to_json(const HyperellipticCurve& c) {
    json roots = json::array();
    for (const auto& r : c.roots) roots.push_back(point_to_json(r));
    json coeffs = json::array();
    for (const auto& a : c.polynomial()) coeffs.push_back(complex_to_json(a));
    return {{"genus", c.genus}, {"roots", roots}, {"polynomial_coeffs", coeffs}};
}

HyperellipticCurve curve_from_json(const json& j) {
    HyperellipticCurve c;
    c.genus = j.at("genus").get<int>();
    for (const auto& r : j.at("roots")) c.roots.push_back(point_from_json(r));
    return c;
}

json to_json(const CheckResult& c) {
    return {{"check", c.check}, {"max_residual", c.max_residual}, {"samples", c.samples}, {"pass", c.pass}};
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    json out = {{"pass", r.pass}, {"checks", checks}};
    if (r.failing_sample) out["failing_sample"] = *r.failing_sample;
    return out;
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.pass = j.at("pass").get<bool>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("check").get<std::string>(), c.at("max_residual").get<double>(),
                            c.at("samples").get<int>(), c.at("pass").get<bool>()});
    if (j.contains("failing_sample")) r.failing_sample = j.at("failing_sample").get<int>();
    return r;
}

json to_json(const Subgroup& K) {
    json gens = json::array();
    for (const auto& g : K.generators()) gens.push_back(g.word());
    return {{"rank", K.rank()}, {"generators", gens}, {"basis", K.basis()}};
}

}  // namespace gfc
