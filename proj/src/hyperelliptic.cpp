#include "gfc/hyperelliptic.hpp"

#include "gfc/free_action.hpp"
#include "gfc/moduli.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <set>

namespace gfc {

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        case CaseLabel::Case4: return "Case4";
        case CaseLabel::Case5i: return "Case5i";
        case CaseLabel::Case5ii: return "Case5ii";
        case CaseLabel::NotHyperelliptic: return "NotHyperelliptic";
        case CaseLabel::Unknown: return "Unknown";
    }
    return "Unknown";
}

CaseLabel case_label_from_string(const std::string& s) {
    for (auto c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4, CaseLabel::Case5i,
                   CaseLabel::Case5ii, CaseLabel::NotHyperelliptic, CaseLabel::Unknown})
        if (to_string(c) == s) return c;
    throw DomainError("unknown case label '" + s + "'");
}

Poly HyperellipticCurve::polynomial() const {
    std::vector<Complex> finite;
    for (const auto& r : roots)
        if (!r.is_infinity()) finite.push_back(r.value());
    return poly_from_roots(finite);
}

bool HyperellipticCurve::has_infinite_root() const {
    return std::any_of(roots.begin(), roots.end(), [](const SpherePointC& r) { return r.is_infinity(); });
}

namespace {

const MoebiusC kNegate(-1.0, 0.0, 0.0, 1.0);
const MoebiusC kInvert(0.0, 1.0, 1.0, 0.0);

// Q as a Moebius map in w = z^2.
MoebiusC even_map(const SpherePointC& b1, const SpherePointC& b2) {
    if (b1.is_infinity()) return MoebiusC(1.0, b2.value(), 0.0, 1.0);
    if (b2.is_infinity()) return MoebiusC(-1.0, b1.value(), 0.0, 1.0);
    return MoebiusC(-b2.value(), b1.value(), -1.0, 1.0);
}

SpherePointC square(const SpherePointC& x) {
    if (x.is_infinity()) return x;
    return SpherePointC(x.value() * x.value());
}

void require_p2(const CurveType& ct) {
    if (ct.p() != 2) throw DomainError("this construction needs p = 2");
}

void require_lambda(const CurveType& ct, const std::vector<Complex>& lambda) {
    if (static_cast<int>(lambda.size()) != ct.n() - 2)
        throw DomainError("expected " + std::to_string(ct.n() - 2) + " lambda values");
    validate_lambda(lambda);
}

std::vector<int> complement(int N, const std::vector<int>& idx) {
    std::vector<int> out;
    for (int j = 1; j <= N; ++j)
        if (std::find(idx.begin(), idx.end(), j) == idx.end()) out.push_back(j);
    return out;
}

void check_indices(int N, const std::vector<int>& idx, std::size_t expected) {
    std::set<int> s(idx.begin(), idx.end());
    if (idx.size() != expected || s.size() != expected || *s.begin() < 1 || *s.rbegin() > N)
        throw DomainError("bad index set");
}

bool distinct_roots(const std::vector<SpherePointC>& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (r[i].near(r[j], 1e-9)) return false;
    return true;
}

}  // namespace

SpherePointC QuotientMap::operator()(const SpherePointC& x) const {
    switch (kind) {
        case Kind::Identity: return x;
        case Kind::Even: return even_map(b1, b2)(square(x));
        case Kind::Klein: {
            if (x.is_infinity() || x.value() == Complex(0.0)) return T->inverse()(SpherePointC::infinity());
            const Complex z = x.value();
            const Complex u = (1.0 + z * z) / (2.0 * z);
            return T->inverse()(SpherePointC(u * u));
        }
        case Kind::Case3: {
            if (x.is_infinity() || x.value() == Complex(0.0)) return SpherePointC::infinity();
            const Complex z2 = x.value() * x.value();
            return SpherePointC(alpha * (z2 + 1.0 / z2) + beta);
        }
        case Kind::Cyclic: {
            if (x.is_infinity()) return x;
            return SpherePointC(std::pow(x.value(), p));
        }
    }
    return x;
}

std::vector<MoebiusC> QuotientMap::deck() const {
    switch (kind) {
        case Kind::Identity: return {};
        case Kind::Even: return {kNegate};
        case Kind::Klein:
        case Kind::Case3: return {kNegate, kInvert};
        case Kind::Cyclic: return {MoebiusC(std::polar(1.0, 2.0 * std::numbers::pi / p), 0.0, 0.0, 1.0)};
    }
    return {};
}

HyperellipticConstruction curve_case1(const CurveType& ct, const std::vector<Complex>& lambda) {
    require_p2(ct);
    require_lambda(ct, lambda);
    if (ct.n() % 2 == 0) throw DomainError("case 1 needs n odd");
    HyperellipticConstruction c;
    c.label = CaseLabel::Case1;
    c.curve.genus = (ct.n() - 1) / 2;
    c.curve.roots = cone_points(lambda);
    for (const auto& r : c.curve.roots) c.targets.emplace_back(r, 1);
    return c;
}

HyperellipticConstruction curve_case2(const CurveType& ct, const std::vector<Complex>& lambda,
                                      const std::vector<int>& kept, std::optional<std::pair<int, int>> omitted) {
    require_p2(ct);
    require_lambda(ct, lambda);
    const int N = ct.n() + 1;
    check_indices(N, kept, ct.n() - 1);
    auto rest = complement(N, kept);
    std::pair<int, int> om{rest[0], rest[1]};
    if (omitted) {
        std::set<int> a{omitted->first, omitted->second}, b{rest[0], rest[1]};
        if (a != b) throw DomainError("omitted pair does not complement the kept indices");
        om = *omitted;
    }
    const auto pts = cone_points(lambda);
    HyperellipticConstruction c;
    c.label = CaseLabel::Case2;
    c.cover.kind = QuotientMap::Kind::Even;
    c.cover.b1 = pts[om.first - 1];
    c.cover.b2 = pts[om.second - 1];
    const MoebiusC Qinv = even_map(c.cover.b1, c.cover.b2).inverse();
    std::vector<int> sorted_kept = kept;
    std::sort(sorted_kept.begin(), sorted_kept.end());
    for (int j : sorted_kept) {
        const SpherePointC w = Qinv(pts[j - 1]);
        const Complex mu = std::sqrt(w.value());
        c.curve.roots.emplace_back(mu);
        c.curve.roots.emplace_back(-mu);
        c.targets.emplace_back(pts[j - 1], 2);
    }
    c.curve.genus = ct.n() - 2;
    return c;
}

std::pair<Complex, Complex> case3_coefficients(const Complex& l1, const Complex& l2, const Complex& l3,
                                               Case3Constant constant) {
    const Complex alpha = 0.25 * (1.0 + l1 - l2 - l3);
    const Complex s = 1.0 + l1 + l2 + l3;
    return {alpha, constant == Case3Constant::Halved ? 0.5 * s : s};
}

std::vector<SpherePointC> case3_branch_values(const Complex& l1, const Complex& l2, const Complex& l3,
                                              Case3Constant constant) {
    auto [alpha, beta] = case3_coefficients(l1, l2, l3, constant);
    return {SpherePointC(2.0 * alpha + beta), SpherePointC(-2.0 * alpha + beta), SpherePointC::infinity()};
}

HyperellipticConstruction curve_case3(const CurveType& ct, const std::vector<Complex>& lambda,
                                      const std::vector<std::pair<int, int>>& pairs, Case3Constant constant) {
    require_p2(ct);
    if (ct.n() != 5) throw DomainError("case 3 needs n = 5");
    require_lambda(ct, lambda);
    std::vector<int> flat;
    for (auto [a, b] : pairs) {
        flat.push_back(a);
        flat.push_back(b);
    }
    check_indices(6, flat, 6);
    const auto pts = cone_points(lambda);
    const auto M = MoebiusC::from_three_points(pts[flat[0] - 1], pts[flat[1] - 1], pts[flat[2] - 1]);
    const Complex l1 = M(pts[flat[3] - 1]).value();
    const Complex l2 = M(pts[flat[4] - 1]).value();
    const Complex l3 = M(pts[flat[5] - 1]).value();
    if (std::abs(l2 * l3 - l1) > 1e-9 * std::max(1.0, std::abs(l1)))
        throw NotApplicable("cross condition lambda2' lambda3' = lambda1' fails for this split");

    Complex s1 = std::sqrt(l1), s2 = std::sqrt(l2), s3 = std::sqrt(l3);
    if (std::abs(s2 * s3 - s1) > std::abs(s2 * s3 + s1)) s3 = -s3;

    auto [alpha, beta] = case3_coefficients(l1, l2, l3, constant);
    if (std::abs(alpha) < 1e-12) throw NotApplicable("degenerate case 3 parameters");

    HyperellipticConstruction c;
    c.label = CaseLabel::Case3;
    c.normalized_lambda = {l1, l2, l3};
    c.cover.kind = QuotientMap::Kind::Case3;
    c.cover.alpha = alpha;
    c.cover.beta = beta;
    for (int sign : {1, -1}) {
        const Complex target = 2.0 * static_cast<double>(sign) * s1;
        const Complex v = (target - beta) / alpha;
        const Complex w = 0.5 * (v + std::sqrt(v * v - 4.0));
        (sign > 0 ? c.a2 : c.b2) = w;
        const Complex r = std::sqrt(w);
        for (Complex x : {r, -r, 1.0 / r, -1.0 / r}) c.curve.roots.emplace_back(x);
        c.targets.emplace_back(SpherePointC(target), 4);
    }
    c.curve.genus = 3;
    if (!distinct_roots(c.curve.roots)) throw NotApplicable("degenerate case 3 parameters");
    return c;
}

HyperellipticConstruction curve_case4(const CurveType& ct, const std::vector<Complex>& lambda,
                                      const std::vector<int>& big, std::optional<std::vector<int>> remaining,
                                      KleinOrientation orientation) {
    require_p2(ct);
    require_lambda(ct, lambda);
    const int N = ct.n() + 1;
    check_indices(N, big, ct.n() - 2);
    auto rest = complement(N, big);
    if (remaining) {
        std::vector<int> r = *remaining;
        std::sort(r.begin(), r.end());
        if (r != rest) throw DomainError("remaining indices do not complement the big part");
        rest = *remaining;
    }
    const auto pts = cone_points(lambda);
    const auto T = MoebiusC::from_three_points(pts[rest[0] - 1], pts[rest[1] - 1], pts[rest[2] - 1]);
    HyperellipticConstruction c;
    c.label = CaseLabel::Case4;
    c.cover.kind = QuotientMap::Kind::Klein;
    c.cover.T = T;
    std::vector<int> sorted_big = big;
    std::sort(sorted_big.begin(), sorted_big.end());
    for (int j : sorted_big) {
        const SpherePointC q = orientation == KleinOrientation::Forward ? T(pts[j - 1]) : T.inverse()(pts[j - 1]);
        const Complex qv = q.value();
        const Complex d = 2.0 * std::sqrt(qv * qv - qv);
        for (Complex w : {2.0 * qv - 1.0 + d, 2.0 * qv - 1.0 - d}) {
            const Complex x = std::sqrt(w);
            c.curve.roots.emplace_back(x);
            c.curve.roots.emplace_back(-x);
        }
        c.targets.emplace_back(pts[j - 1], 4);
        c.normalized_lambda.push_back(qv);
    }
    c.curve.genus = 2 * ct.n() - 5;
    return c;
}

HyperellipticConstruction curve_case5(const CurveType& ct, const std::vector<Complex>& lambda) {
    const int p = ct.p();
    if (p < 3) throw DomainError("case 5 needs p >= 3");
    HyperellipticConstruction c;
    c.cover.kind = QuotientMap::Kind::Cyclic;
    c.cover.p = p;
    if (ct.n() == 2) {
        c.label = CaseLabel::Case5i;
        for (int k = 0; k < p; ++k) c.curve.roots.emplace_back(std::polar(1.0, 2.0 * std::numbers::pi * k / p));
        c.curve.roots.push_back(SpherePointC::infinity());
        c.curve.genus = (p - 1) / 2;
        c.targets = {{SpherePointC(1.0), p}, {SpherePointC::infinity(), 1}};
        return c;
    }
    if (ct.n() != 3) throw DomainError("case 5 needs n = 2 or n = 3");
    if (lambda.size() != 1) throw DomainError("expected one lambda value");
    if (std::abs(lambda[0] - 1.0) < 1e-12) throw DomainError("lambda1 = 1 is degenerate");
    validate_lambda(lambda);
    c.label = CaseLabel::Case5ii;
    const Complex s = std::sqrt(lambda[0]);
    const Complex q = (s + 1.0) / (s - 1.0);
    const Complex ap = q * q;
    for (int k = 0; k < p; ++k) c.curve.roots.emplace_back(root_of(1.0, p, k));
    for (int k = 0; k < p; ++k) c.curve.roots.emplace_back(root_of(ap, p, k));
    c.curve.genus = p - 1;
    c.targets = {{SpherePointC(1.0), p}, {SpherePointC(ap), p}};
    c.a2 = ap;
    c.normalized_lambda = {lambda[0]};
    return c;
}

namespace {

struct Classes {
    std::vector<std::vector<int>> parts;  // nonempty classes, each sorted, ordered by first element
    std::vector<std::vector<int>> images;  // image of each class
};

Classes classes_of(const Subgroup& K) {
    auto img = quotient_images(K);
    std::map<std::vector<int>, std::vector<int>> by_image;
    for (std::size_t j = 0; j < img.size(); ++j) by_image[img[j]].push_back(static_cast<int>(j) + 1);
    Classes c;
    for (auto& [u, idx] : by_image) {
        c.parts.push_back(idx);
        c.images.push_back(u);
    }
    std::vector<std::size_t> order(c.parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return c.parts[a][0] < c.parts[b][0]; });
    Classes s;
    for (auto i : order) {
        s.parts.push_back(c.parts[i]);
        s.images.push_back(c.images[i]);
    }
    return s;
}

const std::vector<int>* class_of_size(const Classes& c, std::size_t size) {
    for (const auto& part : c.parts)
        if (part.size() == size) return &part;
    return nullptr;
}

bool case3_condition(const std::vector<Complex>& lambda, const Classes& c) {
    const auto pts = cone_points(lambda);
    const auto& P = c.parts;
    const auto M = MoebiusC::from_three_points(pts[P[0][0] - 1], pts[P[0][1] - 1], pts[P[1][0] - 1]);
    const Complex l1 = M(pts[P[1][1] - 1]).value();
    const Complex l2 = M(pts[P[2][0] - 1]).value();
    const Complex l3 = M(pts[P[2][1] - 1]).value();
    return std::abs(l2 * l3 - l1) <= 1e-9 * std::max(1.0, std::abs(l1));
}

// Two classes of size two with opposite images.
bool opposite_pairs(const Classes& c, int p) {
    if (c.parts.size() != 2 || c.parts[0].size() != 2 || c.parts[1].size() != 2) return false;
    return fp::add(c.images[0], c.images[1], p) == std::vector<int>(c.images[0].size(), 0);
}

CaseLabel classify_classes(const Subgroup& K, const std::vector<Complex>& lambda, const Classes& c) {
    const CurveType& ct = K.curve_type();
    const int n = ct.n(), r = n - K.rank();
    if (ct.p() == 2) {
        if (r == 1) return CaseLabel::Case1;
        if (r == 2) {
            if (class_of_size(c, n - 1)) return CaseLabel::Case2;
            if (n == 5 && c.parts.size() == 3 && !class_of_size(c, 1) && !class_of_size(c, 3))
                return case3_condition(lambda, c) ? CaseLabel::Case3 : CaseLabel::NotHyperelliptic;
            return CaseLabel::NotHyperelliptic;
        }
        if (r == 3) return class_of_size(c, n - 2) ? CaseLabel::Case4 : CaseLabel::NotHyperelliptic;
        return CaseLabel::NotHyperelliptic;
    }
    if (n == 2) return c.parts.size() == 2 ? CaseLabel::Case5i : CaseLabel::NotHyperelliptic;
    if (n == 3 && r == 1 && opposite_pairs(c, ct.p())) return CaseLabel::Case5ii;
    return CaseLabel::NotHyperelliptic;
}

void require_free(const Subgroup& K) {
    if (auto w = K.fixed_point_witness())
        throw NotFreeError("subgroup " + K.words() + " contains " + w->word() + " which has fixed points",
                           w->exponents());
}

}  // namespace

CaseLabel classify(const Subgroup& K, const std::vector<Complex>& lambda) {
    require_free(K);
    require_lambda(K.curve_type(), lambda);
    return classify_classes(K, lambda, classes_of(K));
}

Classification classify_and_build(const Subgroup& K, const std::vector<Complex>& lambda) {
    require_free(K);
    const CurveType& ct = K.curve_type();
    require_lambda(ct, lambda);
    const Classes c = classes_of(K);
    Classification out;
    out.label = classify_classes(K, lambda, c);
    const int n = ct.n();
    switch (out.label) {
        case CaseLabel::Case1: out.construction = curve_case1(ct, lambda); break;
        case CaseLabel::Case2: out.construction = curve_case2(ct, lambda, *class_of_size(c, n - 1)); break;
        case CaseLabel::Case3: {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& part : c.parts) pairs.emplace_back(part[0], part[1]);
            out.construction = curve_case3(ct, lambda, pairs);
            break;
        }
        case CaseLabel::Case4: out.construction = curve_case4(ct, lambda, *class_of_size(c, n - 2)); break;
        case CaseLabel::Case5i: out.construction = curve_case5(ct, lambda); break;
        case CaseLabel::Case5ii: {
            const auto pts = cone_points(lambda);
            const auto& P = c.parts;
            const auto M = MoebiusC::from_three_points(pts[P[0][0] - 1], pts[P[0][1] - 1], pts[P[1][0] - 1]);
            out.construction = curve_case5(ct, {M(pts[P[1][1] - 1]).value()});
            break;
        }
        default: break;
    }
    return out;
}

Z2n1Split hyperelliptic_z2n1_subgroups(const CurveType& ct) {
    if (ct.p() != 2 || ct.n() < 4 || ct.n() % 2) throw DomainError("needs p = 2 and even n >= 4");
    const int n = ct.n();
    std::set<Subgroup> hyp, non;
    for (const auto& K : enumerate_free_subgroups(ct, n - 2)) {
        const Classes c = classes_of(K);
        const auto* big = class_of_size(c, n - 1);
        if (!big) continue;
        for (int j = 1; j <= n + 1; ++j) {
            fp::Mat rows = K.basis();
            rows.push_back(GroupElement::generator(ct, j).exponents());
            auto L = Subgroup::from_rows(ct, rows);
            if (std::find(big->begin(), big->end(), j) != big->end())
                hyp.insert(L);
            else
                non.insert(L);
        }
    }
    return {{hyp.begin(), hyp.end()}, {non.begin(), non.end()}};
}

HumbertReport humbert_demo(const Complex& lambda1, const Complex& lambda2) {
    const CurveType ct(2, 4);
    const std::vector<Complex> lambda{lambda1, lambda2};
    validate_lambda(lambda);
    const auto pts = cone_points(lambda);
    HumbertReport rep;
    rep.lambda = lambda;

    for (const auto& L : enumerate_free_subgroups(ct, 1)) {
        const auto c = classes_of(L);
        const auto* big = class_of_size(c, 2);
        HumbertGenus3 g{0, L, {(*big)[0], (*big)[1]}, complement(5, *big), {}, curve_case4(ct, lambda, *big)};
        g.ab = {g.construction.normalized_lambda[0], g.construction.normalized_lambda[1]};
        rep.genus3.push_back(std::move(g));
    }
    std::sort(rep.genus3.begin(), rep.genus3.end(), [](const auto& a, const auto& b) { return a.big < b.big; });
    for (std::size_t i = 0; i < rep.genus3.size(); ++i) rep.genus3[i].index = static_cast<int>(i) + 1;

    std::vector<std::pair<std::vector<int>, HumbertGenus2>> tmp;
    for (const auto& K : enumerate_free_subgroups(ct, 2)) {
        const auto c = classes_of(K);
        const auto* big = class_of_size(c, 3);
        auto om = complement(5, *big);
        HumbertGenus2 g{0, 0, K, {om[0], om[1]}, curve_case2(ct, lambda, *big), {}, {}};
        const MoebiusC Qinv = even_map(pts[om[0] - 1], pts[om[1] - 1]).inverse();
        const bool finite_pair = !pts[om[0] - 1].is_infinity();
        g.normalized.genus = 2;
        for (int j : *big) {
            const Complex w = Qinv(pts[j - 1]).value();
            // z -> i/z turns the table map into (b1 z^2 + b2)/(z^2 + 1)
            const Complex cval = finite_pair ? 1.0 / w : -w;
            g.c.push_back(cval);
            const Complex nu = std::sqrt(-cval);
            g.normalized.roots.emplace_back(nu);
            g.normalized.roots.emplace_back(-nu);
        }
        tmp.emplace_back(*big, std::move(g));
    }
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < tmp.size(); ++i) {
        tmp[i].second.index = static_cast<int>(i) + 1;
        rep.genus2.push_back(tmp[i].second);
    }
    std::vector<std::pair<int, int>> om_sorted;
    for (const auto& g : rep.genus2) om_sorted.push_back(g.omitted);
    std::sort(om_sorted.begin(), om_sorted.end());
    for (auto& g : rep.genus2)
        g.c_index = static_cast<int>(std::find(om_sorted.begin(), om_sorted.end(), g.omitted) - om_sorted.begin()) + 1;

    for (std::size_t i = 0; i < tmp.size(); ++i) {
        const auto& kbig = tmp[i].first;
        const auto& g2 = rep.genus2[i];
        HumbertContainment row{g2.index, {}, {}};
        for (const auto& g3 : rep.genus3) {
            std::vector<int> lb{g3.big.first, g3.big.second};
            if (!std::includes(kbig.begin(), kbig.end(), lb.begin(), lb.end())) continue;
            int b3 = 0;
            for (int j : kbig)
                if (j != lb[0] && j != lb[1]) b3 = j;
            row.l_indices.push_back(g3.index);
            row.covers.push_back(
                curve_case4(ct, lambda, lb, std::vector<int>{g2.omitted.first, g2.omitted.second, b3}));
        }
        rep.containment.push_back(std::move(row));
    }
    return rep;
}

}  // namespace gfc
