#include "gfc/errors.hpp"
#include "gfc/free_action.hpp"
#include "gfc/hyperelliptic.hpp"
#include "gfc/verification.hpp"

#include <doctest.h>

#include <map>

using namespace gfc;

namespace {

std::map<CaseLabel, int> labels(const CurveType& ct, const std::vector<Complex>& lambda, int m) {
    std::map<CaseLabel, int> out;
    for (const auto& K : enumerate_free_subgroups(ct, m)) ++out[classify(K, lambda)];
    return out;
}

}  // namespace

TEST_SUITE("hyperelliptic") {

TEST_CASE("labels round trip") {
    for (auto c : {CaseLabel::Case1, CaseLabel::Case3, CaseLabel::Case5ii, CaseLabel::NotHyperelliptic})
        CHECK(case_label_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(case_label_from_string("Case9"), DomainError);
}

TEST_CASE("(2,4) classification") {
    CurveType ct(2, 4);
    std::vector<Complex> l{3.0, 7.0};
    CHECK(labels(ct, l, 1) == std::map<CaseLabel, int>{{CaseLabel::Case4, 10}});
    CHECK(labels(ct, l, 2) == std::map<CaseLabel, int>{{CaseLabel::Case2, 10}});
}

TEST_CASE("(2,5) classification") {
    CurveType ct(2, 5);
    std::vector<Complex> l{3.0, 7.0, 11.0};
    auto top = labels(ct, l, 4);
    CHECK(top == std::map<CaseLabel, int>{{CaseLabel::Case1, 1}});
    auto r2 = labels(ct, l, 3);
    CHECK(r2[CaseLabel::Case2] == 15);
    CHECK(r2[CaseLabel::Case3] == 0);
    auto r3 = labels(ct, l, 2);
    CHECK(r3[CaseLabel::Case4] > 0);
}

TEST_CASE("every construction verifies") {
    std::vector<std::pair<CurveType, std::vector<Complex>>> cases{
        {CurveType(2, 4), {3.0, 7.0}},
        {CurveType(2, 5), {Complex(3, 1), 7.0, Complex(-2, 0.5)}},
        {CurveType(2, 6), {3.0, 7.0, 11.0, 13.0}},
        {CurveType(3, 3), {Complex(2, 1)}},
        {CurveType(5, 2), {}},
        {CurveType(7, 3), {5.0}},
    };
    for (const auto& [ct, l] : cases) {
        for (int m = 1; m < ct.n(); ++m)
            for (const auto& K : enumerate_free_subgroups(ct, m)) {
                auto cls = classify_and_build(K, l);
                if (!cls.construction) continue;
                CAPTURE(K.words());
                CHECK(cls.construction->curve.genus == quotient_genus(ct, m));
                auto rep = verify_hyperelliptic(*cls.construction);
                CHECK(rep.pass);
            }
    }
}

TEST_CASE("case 5") {
    auto c = curve_case5(CurveType(5, 2), {});
    CHECK(c.label == CaseLabel::Case5i);
    CHECK(c.curve.genus == 2);
    CHECK(verify_hyperelliptic(c).pass);
    auto d = curve_case5(CurveType(3, 3), {4.0});
    CHECK(d.label == CaseLabel::Case5ii);
    CHECK(d.curve.genus == 2);
    CHECK(d.a2 == Complex(9.0));
    CHECK(verify_hyperelliptic(d).pass);
    CHECK_THROWS_AS(curve_case5(CurveType(2, 4), {3.0, 7.0}), DomainError);
    int count5ii = 0;
    for (const auto& K : enumerate_free_subgroups(CurveType(3, 3), 2))
        count5ii += classify(K, {Complex(2, 1)}) == CaseLabel::Case5ii;
    CHECK(count5ii > 0);
}

TEST_CASE("case 3 branch values") {
    auto v = case3_branch_values(4.0, 2.0, 2.0);
    CHECK(v[0].near(SpherePointC(5.0)));
    CHECK(v[1].near(SpherePointC(4.0)));
    CHECK(v[2].is_infinity());
    auto u = case3_branch_values(4.0, 2.0, 2.0, Case3Constant::Unhalved);
    CHECK_FALSE(u[0].near(SpherePointC(5.0), 1e-6));
}

TEST_CASE("case 3 curve") {
    CurveType ct(2, 5);
    std::vector<Complex> l{6.0, 2.0, 3.0};
    auto c = curve_case3(ct, l);
    CHECK(c.curve.genus == 3);
    CHECK(verify_hyperelliptic(c).pass);
    auto bad = curve_case3(ct, l, {{1, 2}, {3, 4}, {5, 6}}, Case3Constant::Unhalved);
    CHECK_FALSE(verify_hyperelliptic(bad).pass);
    CHECK_THROWS_AS(curve_case3(ct, {3.0, 7.0, 11.0}), NotApplicable);
    int found = 0;
    for (const auto& K : enumerate_free_subgroups(ct, 3)) {
        auto cls = classify_and_build(K, l);
        if (cls.label != CaseLabel::Case3) continue;
        ++found;
        CHECK(verify_hyperelliptic(*cls.construction).pass);
    }
    CHECK(found >= 1);
}

TEST_CASE("case 4 orientation") {
    CurveType ct(2, 4);
    std::vector<Complex> l{Complex(3, 1), Complex(-2, 5)};
    auto fwd = curve_case4(ct, l, {4, 5}, std::vector<int>{2, 3, 1});
    auto inv = curve_case4(ct, l, {4, 5}, std::vector<int>{2, 3, 1}, KleinOrientation::Inverse);
    CHECK(verify_hyperelliptic(fwd).pass);
    CHECK_FALSE(verify_hyperelliptic(inv).pass);
}

TEST_CASE("Z2^(n-1) counts") {
    auto s4 = hyperelliptic_z2n1_subgroups(CurveType(2, 4));
    CHECK(s4.hyperelliptic.size() == 10);
    CHECK(s4.non_hyperelliptic.size() == 5);
    auto s6 = hyperelliptic_z2n1_subgroups(CurveType(2, 6));
    CHECK(s6.hyperelliptic.size() == 21);
    CHECK(s6.non_hyperelliptic.size() == 7);
    CHECK_THROWS_AS(hyperelliptic_z2n1_subgroups(CurveType(2, 5)), DomainError);
}

TEST_CASE("two classes of four at n = 7 are not hyperelliptic") {
    CurveType ct(2, 7);
    auto K = kernel_of_partition({ct, 2, {{1, 2, 3, 4}, {5, 6, 7, 8}, {}}});
    CHECK(K.rank() == 5);
    CHECK(quotient_genus(ct, 5) == 5);
    CHECK(classify(K, {3.0, 7.0, 11.0, 13.0, 17.0}) == CaseLabel::NotHyperelliptic);
}

TEST_CASE("preconditions") {
    CurveType ct(2, 4);
    auto bad = subgroup_from_generators(ct, {parse_word(ct, "a1")});
    CHECK_THROWS_AS(classify(bad, {3.0, 7.0}), NotFreeError);
    CHECK_THROWS_AS(curve_case1(ct, {3.0, 7.0}), DomainError);
    CHECK_THROWS_AS(curve_case2(ct, {3.0, 7.0}, {1, 2}), DomainError);
}

TEST_CASE("humbert demo shape") {
    auto rep = humbert_demo(3.0, 7.0);
    REQUIRE(rep.genus3.size() == 10);
    REQUIRE(rep.genus2.size() == 10);
    REQUIRE(rep.containment.size() == 10);
    for (const auto& row : rep.containment) CHECK(row.l_indices.size() == 3);
    CHECK(rep.containment[0].l_indices == std::vector<int>{1, 2, 5});
    for (const auto& g : rep.genus3) CHECK(verify_hyperelliptic(g.construction).pass);
    for (const auto& g : rep.genus2) CHECK(verify_hyperelliptic(g.construction).pass);
}

}
