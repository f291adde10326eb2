#include "gfc/errors.hpp"
#include "gfc/free_action.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace gfc;

namespace {

std::set<oracle::Basis> bases(const std::vector<Subgroup>& v) {
    std::set<oracle::Basis> s;
    for (const auto& K : v) s.insert(K.basis());
    return s;
}

}  // namespace

TEST_SUITE("free_action") {

TEST_CASE("labels are base-p digits") {
    CHECK(partition_label(2, 2, 1) == std::vector<int>{0, 1});
    CHECK(partition_label(2, 2, 2) == std::vector<int>{1, 0});
    CHECK(partition_label(3, 2, 5) == std::vector<int>{1, 2});
}

TEST_CASE("admissibility") {
    CurveType ct(2, 4);
    AdmissiblePartition P{ct, 1, {{1, 2, 3, 4, 5}}};
    CHECK_FALSE(is_admissible(P));
    AdmissiblePartition Q{ct, 1, {{1, 2, 3, 4}}};
    CHECK_THROWS_AS(is_admissible(Q), MalformedPartition);
    AdmissiblePartition R{ct, 1, {{1, 2, 3, 4, 5, 5}}};
    CHECK_THROWS_AS(is_admissible(R), MalformedPartition);
    AdmissiblePartition S{ct, 2, {{1, 2}, {3, 4}, {5}}};
    CHECK_FALSE(is_admissible(S));
    AdmissiblePartition T{ct, 3, {{1}, {2}, {}, {3}, {}, {}, {4, 5}}};
    CHECK_FALSE(is_admissible(T));
    AdmissiblePartition U{ct, 2, {{1, 2}, {3, 4}, {}}};
    CHECK_THROWS_AS(is_admissible(U), MalformedPartition);
    AdmissiblePartition V{ct, 2, {{1, 2}, {3}, {4, 5}}};
    CHECK_FALSE(is_admissible(V));
    AdmissiblePartition W{ct, 3, {{1, 2}, {3}, {}, {4}, {5}, {}, {}}};
    CHECK_FALSE(is_admissible(W));
    AdmissiblePartition X{ct, 2, {{1, 2, 3}, {4}, {5}}};
    CHECK(is_admissible(X));
    AdmissiblePartition Z{ct, 2, {{}, {1, 2}, {3, 4, 5}}};
    CHECK_FALSE(is_admissible(Z));
    AdmissiblePartition G{ct, 2, {{1, 2}, {3, 4, 5}, {}}};
    CHECK_FALSE(is_admissible(G));
    AdmissiblePartition H2{ct, 2, {{1}, {2}, {3, 4, 5}}};
    CHECK(is_admissible(H2));
}

TEST_CASE("kernel of a partition acts freely and recovers the partition") {
    CurveType ct(2, 4);
    AdmissiblePartition P{ct, 2, {{1}, {2}, {3, 4, 5}}};
    auto K = kernel_of_partition(P);
    CHECK(K.rank() == 2);
    CHECK(K.acts_freely());
    CHECK(is_free_oracle(K));
    auto back = partition_of(K);
    CHECK(kernel_of_partition(back) == K);
    CHECK(partition_shape(K) == std::vector<int>{3, 1, 1});
    AdmissiblePartition bad{ct, 1, {{1, 2, 3, 4, 5}}};
    CHECK_THROWS_AS(kernel_of_partition(bad), DomainError);
}

TEST_CASE("(2,4) counts") {
    CurveType ct(2, 4);
    CHECK(enumerate_free_subgroups(ct, 1).size() == 10);
    CHECK(enumerate_free_subgroups(ct, 2).size() == 10);
    CHECK(enumerate_free_subgroups(ct, 3).empty());
}

TEST_CASE("enumeration matches brute-force subspace filtering") {
    struct Case {
        int p, n, m;
    };
    std::vector<Case> cases;
    for (int p : {2, 3})
        for (int n = 2; n <= 5; ++n) {
            if ((p - 1) * (n - 1) <= 2) continue;
            for (int m = 1; m <= n - 1; ++m) cases.push_back({p, n, m});
        }
    for (const auto& c : cases) {
        CAPTURE(c.p);
        CAPTURE(c.n);
        CAPTURE(c.m);
        CurveType ct(c.p, c.n);
        auto got = enumerate_free_subgroups(ct, c.m);
        CHECK(bases(got) == oracle::free_subspaces(c.p, c.n, c.m));
        CHECK(got == enumerate_free_subgroups_serial(ct, c.m));
        double assignments = std::pow(std::pow(c.p, c.n - c.m) - 1.0, c.n + 1);
        if (assignments <= 1e7) CHECK(got == enumerate_free_subgroups_by_assignment(ct, c.m));
        for (const auto& K : got) CHECK(is_free_oracle(K));
    }
}

TEST_CASE("odd and even n for Z2^(n-1)") {
    CHECK(enumerate_free_subgroups(CurveType(2, 5), 4).size() == 1);
    CHECK(enumerate_free_subgroups(CurveType(2, 7), 6).size() == 1);
    CHECK(enumerate_free_subgroups(CurveType(2, 4), 3).empty());
    CHECK(enumerate_free_subgroups(CurveType(2, 6), 5).empty());
}

TEST_CASE("quotient genus") {
    CHECK(quotient_genus(CurveType(2, 4), 1) == 3);
    CHECK(quotient_genus(CurveType(2, 4), 2) == 2);
    CHECK(quotient_genus(CurveType(2, 5), 3) == 3);
    CHECK(quotient_genus(CurveType(2, 5), 4) == 2);
    for (int p : {5, 7}) CHECK(quotient_genus(CurveType(p, 2), 1) == (p - 1) / 2);
    for (int p : {3, 5, 7}) CHECK(quotient_genus(CurveType(p, 3), 2) == p - 1);
    CHECK_THROWS_AS(quotient_genus(CurveType(2, 4), 4), DomainError);
    CHECK(allowed_hyperelliptic_ranks(CurveType(2, 4)) == std::set<int>{1, 2});
}

TEST_CASE("resource cap") {
    CHECK_THROWS_AS(enumerate_free_subgroups_by_assignment(CurveType(7, 12), 2), ResourceLimit);
}

}
