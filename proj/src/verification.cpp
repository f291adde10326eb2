#include "gfc/verification.hpp"

#include "gfc/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gfc {

namespace {

double rel(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

Complex zeta(int p, int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / p); }

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 of (seed, stream)
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + stream + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return std::mt19937_64(z ^ (z >> 31));
}

FiberPoint sample_fiber(const std::vector<Complex>& lambda, int p, const Complex& t1,
                        const std::vector<int>& root_choice) {
    const auto slopes = t_slopes(lambda);
    const std::size_t n = slopes.size();
    if (root_choice.size() != n) throw DomainError("root_choice must have n entries");
    FiberPoint pt;
    pt.t1 = t1;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex t = slopes[j](t1);
        if (std::abs(t) < 1e-12) throw DomainError("t1 is a branch point; resample");
        pt.x.push_back(root_of(t, p, root_choice[j]));
    }
    pt.x.emplace_back(1.0);
    return pt;
}

double fiber_residual(const FiberPoint& pt, const std::vector<Complex>& lambda, int p) {
    auto pw = [p](const Complex& z) { return std::pow(z, p); };
    const Complex X1 = pw(pt.x[0]), X2 = pw(pt.x[1]);
    double worst = 0.0;
    auto term = [&](const Complex& a, const Complex& b, const Complex& c) {
        const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
        worst = std::max(worst, std::abs(a + b + c) / scale);
    };
    term(X1, X2, pw(pt.x[2]));
    for (std::size_t j = 0; j < lambda.size(); ++j) term(lambda[j] * X1, X2, pw(pt.x[j + 3]));
    return worst;
}

void require_pass(const VerificationReport& r) {
    if (r.pass) return;
    std::string msg = "verification failed:";
    for (const auto& c : r.checks)
        if (!c.pass) msg += " " + c.check + " (max residual " + std::to_string(c.max_residual) + ")";
    if (r.failing_sample) msg += " at sample " + std::to_string(*r.failing_sample);
    throw VerificationFailure(msg);
}

namespace {

struct SampleResult {
    double fiber = 0.0, equation = 0.0, invariance = 0.0;
};

Complex monomial(const std::vector<Complex>& x, const std::vector<int>& e) {
    Complex s(1.0);
    for (std::size_t j = 0; j < e.size(); ++j)
        for (int k = 0; k < e[j]; ++k) s *= x[j];
    return s;
}

SampleResult run_sample(const CyclicGonalModel& model, const std::vector<Complex>& lambda, std::uint64_t seed,
                        int i) {
    const int p = model.p;
    const std::size_t n = model.slopes.size();
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    std::uniform_real_distribution<double> radius(0.3, 3.0), angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> choice(0, p - 1);

    std::vector<Complex> branch{0.0};
    for (const auto& s : model.slopes)
        if (std::abs(s.c1) > 0) branch.push_back(-s.c0 / s.c1);
    Complex t1;
    for (int attempt = 0;; ++attempt) {
        t1 = std::polar(radius(rng), angle(rng));
        bool ok = std::all_of(branch.begin(), branch.end(), [&](const Complex& b) { return std::abs(t1 - b) > 1e-3; });
        if (ok) break;
        if (attempt > 1000) throw DomainError("could not sample away from branch values");
    }
    std::vector<int> roots(n);
    for (auto& r : roots) r = choice(rng);

    SampleResult res;
    const FiberPoint pt = sample_fiber(lambda, p, t1, roots);
    res.fiber = fiber_residual(pt, lambda, p);
    std::vector<Complex> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = model.slopes[j](t1);

    for (const auto& eq : model.equations) {
        const Complex s = monomial(pt.x, eq.exponents);
        Complex rhs(1.0);
        for (std::size_t j = 0; j < n; ++j)
            for (int k = 0; k < eq.exponents[j]; ++k) rhs *= t[j];
        res.equation = std::max(res.equation, rel(std::pow(s, p), rhs));

        for (const auto& row : model.subgroup_rows) {
            std::vector<Complex> y = pt.x;
            for (std::size_t j = 0; j < n; ++j) y[j] *= zeta(p, row[j]);
            res.invariance = std::max(res.invariance, rel(monomial(y, eq.exponents), s));
            res.invariance = std::max(res.invariance, rel(std::pow(y[0], p), t1));
        }
    }
    return res;
}

VerificationReport summarize(const std::vector<SampleResult>& r, double tol) {
    CheckResult fib{"fiber_residual", 0.0, static_cast<int>(r.size()), true};
    CheckResult eq{"equation_residual", 0.0, static_cast<int>(r.size()), true};
    CheckResult inv{"k_invariance", 0.0, static_cast<int>(r.size()), true};
    VerificationReport rep;
    for (std::size_t i = 0; i < r.size(); ++i) {
        fib.max_residual = std::max(fib.max_residual, r[i].fiber);
        eq.max_residual = std::max(eq.max_residual, r[i].equation);
        inv.max_residual = std::max(inv.max_residual, r[i].invariance);
        const bool bad = !(r[i].fiber < 1e-10) || !(r[i].equation < tol) || !(r[i].invariance < tol);
        if (bad && !rep.failing_sample) rep.failing_sample = static_cast<int>(i);
    }
    fib.pass = fib.max_residual < 1e-10;
    eq.pass = eq.max_residual < tol;
    inv.pass = inv.max_residual < tol;
    rep.checks = {fib, eq, inv};
    rep.pass = fib.pass && eq.pass && inv.pass;
    return rep;
}

void check_model(const CyclicGonalModel& model, const std::vector<Complex>& lambda) {
    if (model.slopes.size() != lambda.size() + 2) throw DomainError("model and lambda disagree on n");
    for (const auto& eq : model.equations)
        if (eq.exponents.size() != model.slopes.size()) throw DomainError("exponent vector has wrong length");
}

}  // namespace

VerificationReport verify_quotient_model(const CyclicGonalModel& model, const std::vector<Complex>& lambda,
                                         int samples, std::uint64_t seed, double tol) {
    check_model(model, lambda);
    std::vector<SampleResult> r(samples);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) r[i] = run_sample(model, lambda, seed, i);
    return summarize(r, tol);
}

VerificationReport verify_quotient_model_serial(const CyclicGonalModel& model, const std::vector<Complex>& lambda,
                                                int samples, std::uint64_t seed, double tol) {
    check_model(model, lambda);
    std::vector<SampleResult> r(samples);
    for (int i = 0; i < samples; ++i) r[i] = run_sample(model, lambda, seed, i);
    return summarize(r, tol);
}

double sphere_distance(const SpherePointC& a, const SpherePointC& b) {
    if (a.is_infinity() && b.is_infinity()) return 0.0;
    if (a.is_infinity()) return 1.0 / std::max(1.0, std::abs(b.value()));
    if (b.is_infinity()) return 1.0 / std::max(1.0, std::abs(a.value()));
    return rel(a.value(), b.value());
}

namespace {

double nearest(const SpherePointC& z, const std::vector<SpherePointC>& set, std::size_t* which = nullptr) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
        double d = sphere_distance(z, set[i]);
        if (d < best) {
            best = d;
            if (which) *which = i;
        }
    }
    return best;
}

Complex q3(const Complex& l1, const Complex& s, const Complex& z) {
    return (z * z - (l1 + 1.0) * z + l1) / ((2.0 * s - l1 - 1.0) * z);
}

}  // namespace

VerificationReport verify_hyperelliptic(const HyperellipticConstruction& c, double tol) {
    VerificationReport rep;
    const auto& roots = c.curve.roots;

    CheckResult count{"root_count", 0.0, static_cast<int>(roots.size()), true};
    const std::size_t expected = 2 * static_cast<std::size_t>(c.curve.genus) + 2;
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) min_sep = std::min(min_sep, sphere_distance(roots[i], roots[j]));
    count.max_residual = std::abs(static_cast<double>(roots.size()) - static_cast<double>(expected));
    count.pass = roots.size() == expected && min_sep > 1e-8;
    rep.checks.push_back(count);

    if (c.cover.kind != QuotientMap::Kind::Identity) {
        CheckResult fib{"q_fiber", 0.0, static_cast<int>(roots.size()), true};
        std::vector<SpherePointC> tpts;
        for (const auto& [pt, k] : c.targets) tpts.push_back(pt);
        std::vector<int> hits(tpts.size(), 0);
        for (const auto& r : roots) {
            std::size_t w = 0;
            fib.max_residual = std::max(fib.max_residual, nearest(c.cover(r), tpts, &w));
            ++hits[w];
        }
        bool full = true;
        for (std::size_t i = 0; i < tpts.size(); ++i) full = full && hits[i] == c.targets[i].second;
        fib.pass = full && fib.max_residual < tol;
        rep.checks.push_back(fib);

        CheckResult deck{"deck_symmetry", 0.0, static_cast<int>(roots.size()), true};
        for (const auto& g : c.cover.deck())
            for (const auto& r : roots) deck.max_residual = std::max(deck.max_residual, nearest(g(r), roots));
        deck.pass = deck.max_residual < tol;
        rep.checks.push_back(deck);
    }

    if (c.label == CaseLabel::Case3 && c.normalized_lambda.size() == 3) {
        const auto& l = c.normalized_lambda;
        CheckResult br{"branch_values", 0.0, 3, true};
        const std::vector<SpherePointC> want{SpherePointC(1.0 + l[0]), SpherePointC(l[1] + l[0] / l[1]),
                                             SpherePointC::infinity()};
        const std::vector<SpherePointC> got{c.cover(SpherePointC(1.0)), c.cover(SpherePointC(Complex(0.0, 1.0))),
                                            c.cover(SpherePointC(0.0))};
        for (std::size_t i = 0; i < 3; ++i) br.max_residual = std::max(br.max_residual, sphere_distance(got[i], want[i]));
        br.pass = br.max_residual < tol;
        rep.checks.push_back(br);
    }

    if (c.label == CaseLabel::Case5ii && c.normalized_lambda.size() == 1) {
        const Complex l1 = c.normalized_lambda[0];
        const Complex s = std::sqrt(l1);
        CheckResult sig{"signature", 0.0, 4, true};
        auto upd = [&](const SpherePointC& got, const SpherePointC& want) {
            sig.max_residual = std::max(sig.max_residual, sphere_distance(got, want));
        };
        // inf and 0 go to inf by the shape of the map; 1 and l1 must go to 0
        upd(SpherePointC(q3(l1, s, 1.0)), SpherePointC(0.0));
        upd(SpherePointC(q3(l1, s, l1)), SpherePointC(0.0));
        // fixed points of z -> l1/z land on the images of the Weierstrass points
        upd(SpherePointC(q3(l1, s, s)), SpherePointC(1.0));
        upd(SpherePointC(q3(l1, s, -s)), c.targets[1].first);
        sig.pass = sig.max_residual < tol;
        rep.checks.push_back(sig);
    }

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& r) { return r.pass; });
    return rep;
}

bool roots_moebius_equivalent(const std::vector<SpherePointC>& a, const std::vector<SpherePointC>& b, double tol) {
    if (a.size() != b.size()) return false;
    if (a.size() < 3) return true;
    const auto Ma = MoebiusC::from_three_points(a[0], a[1], a[2]);
    const std::size_t N = b.size();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k) {
                if (i == j || j == k || i == k) continue;
                const auto g = MoebiusC::from_three_points(b[i], b[j], b[k]).inverse().compose(Ma);
                std::vector<bool> used(N, false);
                bool ok = true;
                for (const auto& z : a) {
                    const auto w = g(z);
                    std::size_t hit = N;
                    for (std::size_t t = 0; t < N && hit == N; ++t)
                        if (!used[t] && sphere_distance(w, b[t]) < tol) hit = t;
                    if (hit == N) {
                        ok = false;
                        break;
                    }
                    used[hit] = true;
                }
                if (ok) return true;
            }
    return false;
}

std::vector<Rational> random_rational_lambda(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
    while (true) {
        std::vector<Rational> l;
        for (int j = 0; j < n - 2; ++j) l.emplace_back(num(rng), den(rng));
        try {
            validate_lambda(l);
            return l;
        } catch (const DomainError&) {
        }
    }
}

std::vector<Complex> to_complex(const std::vector<Rational>& v) {
    std::vector<Complex> out;
    for (const auto& r : v) out.push_back(ScalarTraits<Rational>::to_complex(r));
    return out;
}

bool poly_identity_equal(const PolyFamily& f, const PolyFamily& g, int n, int lambda_samples, std::uint64_t seed,
                         double tol) {
    for (int s = 0; s < lambda_samples; ++s) {
        auto rng = sample_rng(seed, static_cast<std::uint64_t>(s));
        const auto lambda = to_complex(random_rational_lambda(n, rng));
        const Poly a = poly_monic(f(lambda));
        const Poly b = poly_monic(g(lambda));
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (rel(a[i], b[i]) > tol) return false;
    }
    return true;
}

}  // namespace gfc
