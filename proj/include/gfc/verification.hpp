#pragma once

#include "gfc/hyperelliptic.hpp"
#include "gfc/quotient_equations.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gfc {

// Point of the affine chart x_{n+1} = 1.
struct FiberPoint {
    std::vector<Complex> x;  // x_1..x_{n+1}
    Complex t1;
};

// x_j = root_choice[j]-th p-th root of t_j(t1). Throws DomainError at branch points.
FiberPoint sample_fiber(const std::vector<Complex>& lambda, int p, const Complex& t1,
                        const std::vector<int>& root_choice);

// Largest relative residual of the defining equations.
double fiber_residual(const FiberPoint& pt, const std::vector<Complex>& lambda, int p);

struct CheckResult {
    std::string check;
    double max_residual = 0.0;
    int samples = 0;
    bool pass = true;
    bool operator==(const CheckResult&) const = default;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool pass = true;
    std::optional<int> failing_sample;
    bool operator==(const VerificationReport&) const = default;
};

void require_pass(const VerificationReport& r);

VerificationReport verify_quotient_model(const CyclicGonalModel& model, const std::vector<Complex>& lambda,
                                         int samples = 100, std::uint64_t seed = 1, double tol = 1e-9);
VerificationReport verify_quotient_model_serial(const CyclicGonalModel& model, const std::vector<Complex>& lambda,
                                                int samples = 100, std::uint64_t seed = 1, double tol = 1e-9);

VerificationReport verify_hyperelliptic(const HyperellipticConstruction& c, double tol = 1e-9);

// Distance used by all sphere comparisons: relative for finite points, 1/|z| against infinity.
double sphere_distance(const SpherePointC& a, const SpherePointC& b);

// Is there a Moebius map taking the set a onto the set b?
bool roots_moebius_equivalent(const std::vector<SpherePointC>& a, const std::vector<SpherePointC>& b,
                              double tol = 1e-7);

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream);

// Random (lambda_1..lambda_{n-2}) in V_n with small numerators and denominators.
std::vector<Rational> random_rational_lambda(int n, std::mt19937_64& rng);
std::vector<Complex> to_complex(const std::vector<Rational>& v);

using PolyFamily = std::function<Poly(const std::vector<Complex>&)>;

bool poly_identity_equal(const PolyFamily& f, const PolyFamily& g, int n, int lambda_samples = 5,
                         std::uint64_t seed = 7, double tol = 1e-9);

}  // namespace gfc
