#include "gfc/fermat_group.hpp"

#include "gfc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace gfc {

CurveType::CurveType(int p, int n) : p_(p), n_(n) {
    if (!fp::is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (n < 2) throw DomainError("n must be at least 2");
    if ((p - 1) * (n - 1) <= 2)
        throw DomainError("type (" + std::to_string(p) + "," + std::to_string(n) +
                          ") violates (p-1)(n-1) > 2");
    if (n > 40) throw DomainError("n too large");
}

namespace {

std::vector<int> canonical(const CurveType& ct, std::vector<int> e) {
    const int p = ct.p();
    if (static_cast<int>(e.size()) != ct.n() + 1)
        throw DomainError("exponent vector must have length n+1");
    const int shift = fp::mod(e.back(), p);
    for (auto& x : e) x = fp::mod(x - shift, p);
    return e;
}

}  // namespace

GroupElement::GroupElement(const CurveType& ct, std::vector<int> exponents)
    : ct_(ct), e_(canonical(ct, std::move(exponents))) {}

GroupElement GroupElement::identity(const CurveType& ct) {
    return GroupElement(ct, std::vector<int>(ct.n() + 1, 0));
}

GroupElement GroupElement::generator(const CurveType& ct, int j) {
    if (j < 1 || j > ct.n() + 1) throw DomainError("generator index out of range");
    std::vector<int> e(ct.n() + 1, 0);
    e[j - 1] = 1;
    return GroupElement(ct, std::move(e));
}

bool GroupElement::is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (!(ct_ == o.ct_)) throw DomainError("elements of different groups");
    return GroupElement(ct_, fp::add(e_, o.e_, ct_.p()));
}

GroupElement GroupElement::pow(long long k) const {
    return GroupElement(ct_, fp::scale(e_, fp::mod(k, ct_.p()), ct_.p()));
}

GroupElement GroupElement::inverse() const { return pow(-1); }

std::string GroupElement::word() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'a' << i + 1;
        if (e_[i] != 1) os << '^' << e_[i];
    }
    if (first) return "1";
    return os.str();
}

std::vector<GroupElement> standard_generators(const CurveType& ct) {
    std::vector<GroupElement> g;
    for (int j = 1; j <= ct.n() + 1; ++j) g.push_back(GroupElement::generator(ct, j));
    return g;
}

bool has_fixed_points(const GroupElement& h) {
    if (h.is_identity()) return true;
    const int p = h.curve_type().p();
    const auto& e = h.exponents();
    for (int c = 0; c < p; ++c) {
        int support = 0;
        for (int x : e)
            if (fp::mod(x + c, p) != 0) ++support;
        if (support <= 1) return true;
    }
    return false;
}

Subgroup Subgroup::from_rows(const CurveType& ct, const fp::Mat& rows) {
    fp::Mat canon;
    for (const auto& r : rows) canon.push_back(canonical(ct, r));
    return Subgroup(ct, fp::rref(std::move(canon), ct.p()));
}

Subgroup Subgroup::from_generators(const CurveType& ct, const std::vector<GroupElement>& gens) {
    if (gens.empty()) throw DomainError("empty generator list");
    fp::Mat rows;
    for (const auto& g : gens) {
        if (!(g.curve_type() == ct)) throw DomainError("generator from a different group");
        rows.push_back(g.exponents());
    }
    return from_rows(ct, rows);
}

Subgroup subgroup_from_generators(const CurveType& ct, const std::vector<GroupElement>& gens) {
    return Subgroup::from_generators(ct, gens);
}

std::int64_t Subgroup::order() const { return fp::ipow(ct_.p(), rank()); }

bool Subgroup::contains(const GroupElement& h) const {
    return fp::in_row_space(basis_, h.exponents(), ct_.p());
}

std::vector<GroupElement> Subgroup::generators() const {
    std::vector<GroupElement> g;
    for (const auto& r : basis_) g.emplace_back(ct_, r);
    return g;
}

std::vector<GroupElement> Subgroup::elements(std::int64_t limit) const {
    const std::int64_t total = order();
    if (total > limit) throw ResourceLimit("subgroup too large to enumerate");
    const int p = ct_.p();
    std::vector<GroupElement> out;
    out.reserve(total);
    std::vector<int> coef(rank(), 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t t = idx;
        std::vector<int> e(ct_.n() + 1, 0);
        for (int i = 0; i < rank(); ++i) {
            int c = static_cast<int>(t % p);
            t /= p;
            if (c) e = fp::add(e, fp::scale(basis_[i], c, p), p);
        }
        out.emplace_back(ct_, std::move(e));
    }
    return out;
}

std::optional<GroupElement> Subgroup::fixed_point_witness() const {
    for (int j = 1; j <= ct_.n() + 1; ++j) {
        auto a = GroupElement::generator(ct_, j);
        if (contains(a)) return a;
    }
    return std::nullopt;
}

bool Subgroup::acts_freely() const { return !fixed_point_witness().has_value(); }

std::string Subgroup::words() const {
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += GroupElement(ct_, basis_[i]).word();
    }
    return s + ">";
}

GroupElement parse_word(const CurveType& ct, const std::string& word) {
    std::vector<int> e(ct.n() + 1, 0);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
    };
    auto number = [&](bool allow_sign) {
        skip();
        bool neg = false;
        if (allow_sign && i < word.size() && (word[i] == '-' || word[i] == '+')) {
            neg = word[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
        if (start == i) throw DomainError("malformed generator word '" + word + "'");
        long long v = std::stoll(word.substr(start, i - start));
        return neg ? -v : v;
    };
    skip();
    if (word.substr(i) == "1") return GroupElement::identity(ct);
    while (true) {
        skip();
        if (i >= word.size() || word[i] != 'a') throw DomainError("malformed generator word '" + word + "'");
        ++i;
        long long idx = number(false);
        if (idx < 1 || idx > ct.n() + 1)
            throw DomainError("generator index " + std::to_string(idx) + " out of range in '" + word + "'");
        long long exp = 1;
        skip();
        if (i < word.size() && word[i] == '^') {
            ++i;
            exp = number(true);
        }
        e[idx - 1] = fp::mod(e[idx - 1] + exp, ct.p());
        skip();
        if (i >= word.size()) break;
        if (word[i] != '*') throw DomainError("malformed generator word '" + word + "'");
        ++i;
    }
    return GroupElement(ct, std::move(e));
}

std::int64_t genus_fermat(const CurveType& ct) {
    const std::int64_t pw = fp::ipow(ct.p(), ct.n() - 1);
    const std::int64_t k = static_cast<std::int64_t>(ct.n() - 1) * (ct.p() - 1) - 2;
    __int128 g = 1 + static_cast<__int128>(pw) * k / 2;
    if (g > std::numeric_limits<std::int64_t>::max()) throw ResourceLimit("genus overflows 64 bits");
    return static_cast<std::int64_t>(g);
}

}  // namespace gfc
