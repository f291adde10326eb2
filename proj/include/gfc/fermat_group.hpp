#pragma once

#include "gfc/fp_linalg.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

// Type (p, n) of a generalized Fermat curve.
class CurveType {
public:
    CurveType(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }

    auto operator<=>(const CurveType&) const = default;

private:
    int p_;
    int n_;
};

// Element of H = Z_p^{n+1} / <(1,...,1)>, stored with last coordinate 0.
class GroupElement {
public:
    GroupElement(const CurveType& ct, std::vector<int> exponents);

    static GroupElement identity(const CurveType& ct);
    // a_j for 1 <= j <= n+1
    static GroupElement generator(const CurveType& ct, int j);

    const CurveType& curve_type() const { return ct_; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_identity() const;

    GroupElement operator*(const GroupElement& o) const;
    GroupElement pow(long long k) const;
    GroupElement inverse() const;

    // "a1*a2^2", identity prints as "1"
    std::string word() const;

    bool operator==(const GroupElement& o) const { return ct_ == o.ct_ && e_ == o.e_; }
    auto operator<=>(const GroupElement& o) const {
        if (auto c = ct_ <=> o.ct_; c != 0) return c;
        return e_ <=> o.e_;
    }

private:
    CurveType ct_;
    std::vector<int> e_;
};

std::vector<GroupElement> standard_generators(const CurveType& ct);

bool has_fixed_points(const GroupElement& h);

// Subgroup of H given by its canonical RREF basis (rows of length n+1, last entry 0).
class Subgroup {
public:
    static Subgroup from_generators(const CurveType& ct, const std::vector<GroupElement>& gens);
    static Subgroup from_rows(const CurveType& ct, const fp::Mat& rows);

    const CurveType& curve_type() const { return ct_; }
    const fp::Mat& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    std::int64_t order() const;

    bool contains(const GroupElement& h) const;
    std::vector<GroupElement> generators() const;
    // All p^m elements; throws ResourceLimit above the limit.
    std::vector<GroupElement> elements(std::int64_t limit = 1000000) const;

    // Free iff no power of any a_j lies in K.
    bool acts_freely() const;
    std::optional<GroupElement> fixed_point_witness() const;

    std::string words() const;  // "<a1*a2, a1*a3>"

    bool operator==(const Subgroup& o) const { return ct_ == o.ct_ && basis_ == o.basis_; }
    auto operator<=>(const Subgroup& o) const {
        if (auto c = ct_ <=> o.ct_; c != 0) return c;
        return basis_ <=> o.basis_;
    }

private:
    Subgroup(const CurveType& ct, fp::Mat basis) : ct_(ct), basis_(std::move(basis)) {}
    CurveType ct_;
    fp::Mat basis_;
};

Subgroup subgroup_from_generators(const CurveType& ct, const std::vector<GroupElement>& gens);

// Parse "a1*a2^-1*a3" into an element.
GroupElement parse_word(const CurveType& ct, const std::string& word);

std::int64_t genus_fermat(const CurveType& ct);

}  // namespace gfc
