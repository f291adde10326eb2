#include "gfc/errors.hpp"
#include "gfc/fermat_group.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace gfc;

TEST_SUITE("fermat_group") {

TEST_CASE("curve type validation") {
    CHECK_NOTHROW(CurveType(2, 4));
    CHECK_NOTHROW(CurveType(5, 2));
    CHECK_THROWS_AS(CurveType(4, 3), DomainError);
    CHECK_THROWS_AS(CurveType(2, 1), DomainError);
    CHECK_THROWS_AS(CurveType(2, 3), DomainError);
    CHECK_THROWS_AS(CurveType(3, 2), DomainError);
}

TEST_CASE("linear algebra mod p") {
    fp::Mat m{{1, 2, 0}, {2, 4, 1}};
    auto r = fp::rref(m, 5);
    CHECK(r == fp::Mat{{1, 2, 0}, {0, 0, 1}});
    CHECK(fp::rank(m, 5) == 2);
    auto ns = fp::nullspace(m, 3, 5);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) CHECK(fp::dot(row, ns[0], 5) == 0);
    CHECK(fp::inverse(3, 7) == 5);
    CHECK(fp::in_row_space(r, {2, 4, 3}, 5));
    CHECK_FALSE(fp::in_row_space(r, {0, 1, 0}, 5));
}

TEST_CASE("elements are canonical modulo the diagonal") {
    CurveType ct(3, 3);
    auto a4 = GroupElement::generator(ct, 4);
    CHECK(a4.exponents() == std::vector<int>{2, 2, 2, 0});
    auto prod = GroupElement::identity(ct);
    for (const auto& a : standard_generators(ct)) prod = prod * a;
    CHECK(prod.is_identity());
    auto a1 = GroupElement::generator(ct, 1);
    CHECK((a1.pow(3)).is_identity());
    CHECK((a1 * a1.inverse()).is_identity());
    CHECK(GroupElement(ct, {1, 1, 1, 1}).is_identity());
}

TEST_CASE("fixed points are exactly the powers of the standard generators") {
    CurveType ct(3, 3);
    int with_fixed = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                GroupElement h(ct, {a, b, c, 0});
                bool expect = h.is_identity() || oracle::is_cone_power({a, b, c});
                CHECK(has_fixed_points(h) == expect);
                with_fixed += expect && !h.is_identity();
            }
    CHECK(with_fixed == 4 * 2);
}

TEST_CASE("words round trip") {
    CurveType ct(5, 3);
    auto h = parse_word(ct, "a1*a2^-1*a3^2");
    CHECK(h.exponents() == std::vector<int>{1, 4, 2, 0});
    CHECK(parse_word(ct, h.word()) == h);
    CHECK(parse_word(ct, "1").is_identity());
    CHECK_THROWS_AS(parse_word(ct, "a7"), DomainError);
    CHECK_THROWS_AS(parse_word(ct, "b1"), DomainError);
}

TEST_CASE("subgroup canonical form and membership") {
    CurveType ct(2, 4);
    auto K1 = subgroup_from_generators(ct, {parse_word(ct, "a1*a2"), parse_word(ct, "a1*a3")});
    auto K2 = subgroup_from_generators(ct, {parse_word(ct, "a2*a3"), parse_word(ct, "a1*a2")});
    CHECK(K1 == K2);
    CHECK(K1.rank() == 2);
    CHECK(K1.order() == 4);
    CHECK(K1.contains(parse_word(ct, "a2*a3")));
    CHECK_FALSE(K1.contains(parse_word(ct, "a1")));
    CHECK(K1.elements().size() == 4);
    CHECK(K1.acts_freely());
    auto bad = subgroup_from_generators(ct, {parse_word(ct, "a1*a2"), parse_word(ct, "a3*a4")});
    CHECK_FALSE(bad.acts_freely());
    REQUIRE(bad.fixed_point_witness().has_value());
    CHECK(has_fixed_points(*bad.fixed_point_witness()));
}

TEST_CASE("genus of the Fermat curve") {
    for (int p : {2, 3, 5, 7})
        for (int n = 2; n <= 7; ++n) {
            if ((p - 1) * (n - 1) <= 2) continue;
            CHECK(genus_fermat(CurveType(p, n)) == oracle::genus_by_riemann_hurwitz(p, n));
        }
    CHECK(genus_fermat(CurveType(2, 4)) == 5);
    CHECK(genus_fermat(CurveType(2, 5)) == 17);
}

}
