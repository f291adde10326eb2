#include "commands.hpp"

#include "gfc/free_action.hpp"
#include "gfc/hyperelliptic.hpp"
#include "gfc/moduli.hpp"
#include "gfc/quotient_equations.hpp"
#include "gfc/serialization.hpp"
#include "gfc/verification.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace gfc::cli {

namespace {

struct Options {
    int p = 2;
    int n = 4;
    std::optional<int> m;
    std::vector<std::string> lambda;
    std::vector<std::string> delta;
    std::string k;
    std::string format = "text";
    std::uint64_t seed = 1;
    double tol = 1e-9;
    int samples = 100;
    bool pair_sums = false;
};

struct LambdaInput {
    std::vector<Complex> numeric;
    std::optional<std::vector<Rational>> exact;
};

bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<Rational> parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) return std::nullopt;
        return Rational(boost::multiprecision::cpp_int(s));
    }
    const auto a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!is_integer_token(a) || !is_integer_token(b)) throw DomainError("malformed rational '" + s + "'");
    boost::multiprecision::cpp_int den(b);
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(boost::multiprecision::cpp_int(a), den);
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed number '" + s + "'");
    }
    if (used != s.size()) throw DomainError("malformed number '" + s + "'");
    return v;
}

std::vector<std::string> default_lambda(int n) {
    static const int primes[] = {3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
    if (n - 2 > static_cast<int>(std::size(primes))) throw DomainError("no default lambda for this n; pass --lambda");
    std::vector<std::string> out;
    for (int j = 0; j < n - 2; ++j) out.push_back(std::to_string(primes[j]));
    return out;
}

LambdaInput parse_lambda(std::vector<std::string> tokens, int n) {
    if (tokens.empty()) tokens = default_lambda(n);
    if (static_cast<int>(tokens.size()) != n - 2)
        throw DomainError("expected " + std::to_string(n - 2) + " lambda values, got " + std::to_string(tokens.size()));
    LambdaInput in;
    std::vector<Rational> exact;
    bool all_exact = true;
    for (const auto& t : tokens) {
        if (t.find(',') != std::string::npos) {
            const auto c = t.find(',');
            in.numeric.emplace_back(parse_double(t.substr(0, c)), parse_double(t.substr(c + 1)));
            all_exact = false;
        } else if (auto r = parse_rational(t)) {
            exact.push_back(*r);
            in.numeric.push_back(ScalarTraits<Rational>::to_complex(*r));
        } else {
            in.numeric.emplace_back(parse_double(t), 0.0);
            all_exact = false;
        }
    }
    if (all_exact) {
        validate_lambda(exact);
        in.exact = exact;
    }
    validate_lambda(in.numeric);
    return in;
}

std::string fmt(double x) {
    if (x == 0.0) x = 0.0;
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string fmt(const Complex& z) {
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    if (z.imag() == 0.0) return fmt(re);
    std::ostringstream os;
    os << std::setprecision(12) << re << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string fmt(const SpherePointC& z) { return z.is_infinity() ? "inf" : fmt(z.value()); }

std::string fmt(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

json lambda_json(const LambdaInput& in) {
    json arr = json::array();
    if (in.exact)
        for (const auto& r : *in.exact) arr.push_back(fmt(r));
    else
        for (const auto& z : in.numeric) arr.push_back(complex_to_json(z));
    return arr;
}

std::string report_line(const VerificationReport& r) {
    std::string s = r.pass ? "pass" : "FAIL";
    for (const auto& c : r.checks) s += "  " + c.check + "=" + fmt(c.max_residual);
    return s;
}

std::string slope_text(const LinearSlope& s, int j) {
    return "t" + std::to_string(j) + " = " + fmt(s.c0) + " + (" + fmt(s.c1) + ")*t1";
}

std::string equation_text(const GonalEquation& e, int k, int p) {
    std::string rhs;
    for (std::size_t j = 0; j < e.exponents.size(); ++j) {
        if (!e.exponents[j]) continue;
        if (!rhs.empty()) rhs += "*";
        rhs += "t" + std::to_string(j + 1);
        if (e.exponents[j] > 1) rhs += "^" + std::to_string(e.exponents[j]);
    }
    return "s" + std::to_string(k) + "^" + std::to_string(p) + " = " + (rhs.empty() ? "1" : rhs);
}

std::string curve_text(const HyperellipticCurve& c) {
    std::string s = "genus " + std::to_string(c.genus) + ", roots {";
    for (std::size_t i = 0; i < c.roots.size(); ++i) s += (i ? ", " : "") + fmt(c.roots[i]);
    return s + "}";
}

std::vector<int> ranks_of(const CurveType& ct, const std::optional<int>& m) {
    if (m) {
        if (*m < 1 || *m > ct.n() - 1) throw DomainError("-m must lie in 1..n-1");
        return {*m};
    }
    std::vector<int> r;
    for (int i = 1; i <= ct.n() - 1; ++i) r.push_back(i);
    return r;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const CurveType ct(o.p, o.n);
    json ranks = json::array();
    std::ostringstream text;
    text << "type (" << ct.p() << "," << ct.n() << "), genus " << genus_fermat(ct) << "\n";
    for (int m : ranks_of(ct, o.m)) {
        const auto subs = enumerate_free_subgroups(ct, m);
        std::optional<std::int64_t> g;
        try {
            g = quotient_genus(ct, m);
        } catch (const DomainError&) {
        }
        json list = json::array();
        text << "rank " << m << ": " << subs.size() << " subgroups";
        if (g) text << ", quotient genus " << *g;
        text << "\n";
        for (const auto& K : subs) {
            list.push_back(to_json(K)["generators"]);
            text << "  " << K.words() << "\n";
        }
        json r = {{"rank", m}, {"count", subs.size()}};
        r["quotient_genus"] = g ? json(*g) : json(nullptr);
        r["subgroups"] = list;
        ranks.push_back(r);
    }
    if (o.format == "json")
        out << json{{"p", ct.p()}, {"n", ct.n()}, {"genus", genus_fermat(ct)}, {"ranks", ranks}}.dump(2) << "\n";
    else
        out << text.str();
    return kOk;
}

Subgroup parse_subgroup(const CurveType& ct, const std::string& spec) {
    std::vector<GroupElement> gens;
    std::stringstream ss(spec);
    std::string word;
    while (std::getline(ss, word, ',')) gens.push_back(parse_word(ct, word));
    if (gens.empty()) throw DomainError("--k needs at least one generator");
    return Subgroup::from_generators(ct, gens);
}

int cmd_quotient(const Options& o, std::ostream& out) {
    const CurveType ct(o.p, o.n);
    const auto lambda = parse_lambda(o.lambda, ct.n());
    if (o.k.empty()) throw DomainError("--k is required");
    const auto K = parse_subgroup(ct, o.k);
    const auto model = cyclic_gonal_model(K, lambda.numeric, o.pair_sums);
    const auto report = verify_quotient_model(model, lambda.numeric, o.samples, o.seed, o.tol);
    const auto g = quotient_genus(ct, K.rank());
    if (o.format == "json") {
        out << json{{"subgroup", to_json(K)},
                    {"lambda", lambda_json(lambda)},
                    {"quotient_genus", g},
                    {"model", to_json(model)},
                    {"verification", to_json(report)}}
                   .dump(2)
            << "\n";
    } else {
        out << "K = " << K.words() << ", rank " << K.rank() << ", quotient genus " << g << "\n";
        for (std::size_t j = 0; j < model.slopes.size(); ++j)
            out << "  " << slope_text(model.slopes[j], static_cast<int>(j) + 1) << "\n";
        for (std::size_t k = 0; k < model.equations.size(); ++k)
            out << "  " << equation_text(model.equations[k], static_cast<int>(k) + 1, model.p) << "\n";
        out << "verification (" << o.samples << " samples): " << report_line(report) << "\n";
    }
    return report.pass ? kOk : kVerificationFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const CurveType ct(o.p, o.n);
    if (ct.n() > 8) throw DomainError("classify is limited to n <= 8");
    const auto lambda = parse_lambda(o.lambda, ct.n());
    json rows = json::array();
    std::map<std::string, int> counts;
    std::ostringstream text;
    int curves = 0;
    bool all_pass = true;
    for (int m : ranks_of(ct, o.m)) {
        for (const auto& K : enumerate_free_subgroups(ct, m)) {
            const auto cls = classify_and_build(K, lambda.numeric);
            ++counts[to_string(cls.label)];
            json row = {{"subgroup", to_json(K)["generators"]}, {"rank", m}, {"label", to_string(cls.label)}};
            text << K.words() << "  rank " << m << "  " << to_string(cls.label);
            if (cls.construction) {
                ++curves;
                const auto rep = verify_hyperelliptic(*cls.construction, o.tol);
                all_pass = all_pass && rep.pass;
                row["curve"] = to_json(cls.construction->curve);
                row["verification"] = to_json(rep);
                text << "\n    y^2 over " << curve_text(cls.construction->curve) << "\n    " << report_line(rep);
            }
            text << "\n";
            rows.push_back(row);
        }
    }
    json footer = {{"curves", curves}, {"labels", counts}};
    text << "curves: " << curves;
    for (const auto& [label, c] : counts) text << ", " << label << ": " << c;
    text << "\n";
    if (ct.p() == 2 && ct.n() % 2 == 0) {
        const auto split = hyperelliptic_z2n1_subgroups(ct);
        const std::string e = std::to_string(ct.n() - 1);
        footer["hyperelliptic_z2n1"] = split.hyperelliptic.size();
        footer["non_hyperelliptic_z2n1"] = split.non_hyperelliptic.size();
        text << "hyperelliptic-Z2^" << e << ": " << split.hyperelliptic.size() << ", non-hyperelliptic-Z2^" << e
             << ": " << split.non_hyperelliptic.size() << "\n";
    }
    if (o.format == "json")
        out << json{{"p", ct.p()}, {"n", ct.n()}, {"lambda", lambda_json(lambda)}, {"rows", rows}, {"footer", footer}}
                   .dump(2)
            << "\n";
    else
        out << text.str();
    return all_pass ? kOk : kVerificationFailed;
}

std::string pair_text(const std::pair<int, int>& pr, const std::vector<SpherePointC>& pts) {
    return "{" + fmt(pts[pr.first - 1]) + ", " + fmt(pts[pr.second - 1]) + "}";
}

int cmd_humbert(const Options& o, std::ostream& out) {
    const auto lambda = parse_lambda(o.lambda, 4);
    const auto rep = humbert_demo(lambda.numeric[0], lambda.numeric[1]);
    const auto pts = cone_points(lambda.numeric);
    bool all_pass = true;
    json g3 = json::array(), g2 = json::array(), cont = json::array();
    std::ostringstream text;
    text << "genus 3 quotients y^2 = (x^4+2(1-2a)x^2+1)(x^4+2(1-2b)x^2+1)\n";
    for (const auto& g : rep.genus3) {
        const auto v = verify_hyperelliptic(g.construction, o.tol);
        all_pass = all_pass && v.pass;
        g3.push_back({{"index", g.index},
                      {"subgroup", g.L.words()},
                      {"a", complex_to_json(g.ab.first)},
                      {"b", complex_to_json(g.ab.second)},
                      {"curve", to_json(g.construction.curve)},
                      {"verification", to_json(v)}});
        text << "  L" << g.index << " = " << g.L.words() << "  (a,b) = (" << fmt(g.ab.first) << ", "
             << fmt(g.ab.second) << ")  " << (v.pass ? "pass" : "FAIL") << "\n";
    }
    text << "genus 2 quotients y^2 = (x^2+c1)(x^2+c2)(x^2+c3)\n";
    for (const auto& g : rep.genus2) {
        const auto v = verify_hyperelliptic(g.construction, o.tol);
        all_pass = all_pass && v.pass;
        json cs = json::array();
        for (const auto& c : g.c) cs.push_back(complex_to_json(c));
        g2.push_back({{"index", g.index},
                      {"curve_index", g.c_index},
                      {"subgroup", g.K.words()},
                      {"omitted", {g.omitted.first, g.omitted.second}},
                      {"c", cs},
                      {"curve", to_json(g.normalized)},
                      {"verification", to_json(v)}});
        text << "  K" << g.index << " = " << g.K.words() << "  {b1,b2} = " << pair_text(g.omitted, pts) << "  C"
             << g.c_index << ": c = (";
        for (std::size_t i = 0; i < g.c.size(); ++i) text << (i ? ", " : "") << fmt(g.c[i]);
        text << ")  " << (v.pass ? "pass" : "FAIL") << "\n";
    }
    text << "containment\n";
    for (const auto& row : rep.containment) {
        json covers = json::array();
        text << "  K" << row.k_index << " contains";
        for (std::size_t i = 0; i < row.l_indices.size(); ++i) {
            const auto v = verify_hyperelliptic(row.covers[i], o.tol);
            all_pass = all_pass && v.pass;
            covers.push_back({{"L", row.l_indices[i]}, {"curve", to_json(row.covers[i].curve)}, {"verification", to_json(v)}});
            text << " L" << row.l_indices[i];
        }
        text << "\n";
        cont.push_back({{"K", row.k_index}, {"L", row.l_indices}, {"covers", covers}});
    }
    if (o.format == "json")
        out << json{{"lambda", lambda_json(lambda)}, {"genus3", g3}, {"genus2", g2}, {"containment", cont}}.dump(2)
            << "\n";
    else
        out << text.str();
    return all_pass ? kOk : kVerificationFailed;
}

int cmd_moduli(const Options& o, std::ostream& out) {
    if (o.n < 3) throw DomainError("moduli needs n >= 3");
    const auto lambda = parse_lambda(o.lambda, o.n);
    std::optional<LambdaInput> delta;
    if (!o.delta.empty()) delta = parse_lambda(o.delta, o.n);
    const bool exact = lambda.exact && (!delta || delta->exact);
    json res = {{"n", o.n}, {"lambda", lambda_json(lambda)}, {"exact", exact}};
    std::ostringstream text;
    if (exact) {
        const auto orbit = orbit_by_theta(*lambda.exact);
        const auto gen = orbit_by_generators(*lambda.exact);
        res["orbit_size"] = orbit.size();
        res["generated_by_t_b"] = gen == orbit;
        text << "orbit size " << orbit.size() << " (exact), generated by t and b: " << (gen == orbit ? "yes" : "no")
             << "\n";
    } else {
        const auto size = orbit_size(lambda.numeric);
        res["orbit_size"] = size;
        text << "orbit size " << size << "\n";
    }
    if (delta) {
        const OrbitMatch m = exact ? same_orbit(*lambda.exact, *delta->exact) : same_orbit(lambda.numeric, delta->numeric, o.tol);
        res["delta"] = lambda_json(*delta);
        res["equivalent"] = m.equivalent;
        res["witness"] = m.witness ? json(perm_cycles(*m.witness)) : json(nullptr);
        text << "equivalent: " << (m.equivalent ? "yes, witness " + perm_cycles(*m.witness) : std::string("no")) << "\n";
    }
    if (o.format == "json")
        out << res.dump(2) << "\n";
    else
        out << text.str();
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const CurveType ct(o.p, o.n);
    const auto lambda = parse_lambda(o.lambda, ct.n());
    json rows = json::array();
    int models = 0, models_ok = 0, curves = 0, curves_ok = 0;
    std::ostringstream text;
    for (int m : ranks_of(ct, o.m)) {
        for (const auto& K : enumerate_free_subgroups(ct, m)) {
            const auto model = cyclic_gonal_model(K, lambda.numeric);
            const auto rep = verify_quotient_model(model, lambda.numeric, o.samples, o.seed, o.tol);
            ++models;
            models_ok += rep.pass;
            json row = {{"subgroup", K.words()}, {"model", to_json(rep)}};
            text << K.words() << "  model " << report_line(rep);
            if (ct.n() <= 8) {
                const auto cls = classify_and_build(K, lambda.numeric);
                row["label"] = to_string(cls.label);
                if (cls.construction) {
                    const auto hr = verify_hyperelliptic(*cls.construction, o.tol);
                    ++curves;
                    curves_ok += hr.pass;
                    row["curve"] = to_json(hr);
                    text << "\n    " << to_string(cls.label) << " curve " << report_line(hr);
                }
            }
            text << "\n";
            rows.push_back(row);
        }
    }
    const bool ok = models == models_ok && curves == curves_ok;
    text << "models " << models_ok << "/" << models << " pass, curves " << curves_ok << "/" << curves << " pass\n";
    if (o.format == "json")
        out << json{{"p", ct.p()},
                    {"n", ct.n()},
                    {"samples", o.samples},
                    {"seed", o.seed},
                    {"rows", rows},
                    {"pass", ok}}
                   .dump(2)
            << "\n";
    else
        out << text.str();
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free quotients of generalized Fermat curves", "gfc"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* sub, bool needs_type) {
        if (needs_type) {
            sub->add_option("-p", o.p, "prime p")->required();
            sub->add_option("-n", o.n, "n, so the curve has n+1 cone points")->required();
        }
        sub->add_option("--lambda", o.lambda, "lambda values: re[,im] or num/den")->expected(0, -1);
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", o.seed, "sampling seed");
        sub->add_option("--tol", o.tol, "verification tolerance");
    };

    auto* en = app.add_subcommand("enumerate", "list freely acting subgroups");
    common(en, true);
    en->add_option("-m", o.m, "rank");
    auto* qu = app.add_subcommand("quotient", "cyclic p-gonal model of S/K");
    common(qu, true);
    qu->add_option("--k", o.k, "generators, e.g. a1*a2,a1^-1*a3");
    qu->add_option("--samples", o.samples, "verification samples");
    qu->add_flag("--pair-sums", o.pair_sums, "also emit sums of lattice basis pairs");
    auto* cl = app.add_subcommand("classify", "hyperelliptic classification of all free quotients");
    common(cl, true);
    cl->add_option("-m", o.m, "rank");
    auto* hu = app.add_subcommand("humbert-demo", "the (2,4) tables");
    common(hu, false);
    auto* mo = app.add_subcommand("moduli", "orbit of lambda under the symmetric group");
    common(mo, false);
    mo->add_option("-n", o.n, "n")->required();
    mo->add_option("--delta", o.delta, "second tuple")->expected(0, -1);
    auto* ve = app.add_subcommand("verify", "verify models and curves for every free subgroup");
    common(ve, true);
    ve->add_option("-m", o.m, "rank");
    ve->add_option("--samples", o.samples, "samples per model");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (*en) return cmd_enumerate(o, out);
        if (*qu) return cmd_quotient(o, out);
        if (*cl) return cmd_classify(o, out);
        if (*hu) return cmd_humbert(o, out);
        if (*mo) return cmd_moduli(o, out);
        if (*ve) return cmd_verify(o, out);
    } catch (const NotFreeError& e) {
        err << "error: " << e.what() << "\n";
        std::vector<int> w = e.witness();
        err << "witness: " << GroupElement(CurveType(o.p, o.n), w).word() << "\n";
        return kNotFree;
    } catch (const VerificationFailure& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const MalformedPartition& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const NotApplicable& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInvalid;
}

}  // namespace gfc::cli
