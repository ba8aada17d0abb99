#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace sqc {

/// Finitely generated abelian group Z^free_rank x Z/m_1 x ... x Z/m_k,
/// with every torsion order m_i >= 2.
struct AbGroup {
    std::size_t free_rank = 0;
    std::vector<long long> torsion;

    bool operator==(const AbGroup&) const = default;

    std::size_t coord_count() const { return free_rank + torsion.size(); }
    bool is_valid() const;
};

/// Group element as a coordinate vector of length free_rank + |torsion|,
/// free coordinates first, torsion coordinates reduced into [0, m_i).
struct GroupElem {
    std::vector<long long> coords;

    auto operator<=>(const GroupElem&) const = default;
};

/// Reduces torsion coordinates mod m_i. Throws dimension_mismatch when the
/// coordinate count does not match the group.
GroupElem group_normalize(const AbGroup& g, std::vector<long long> coords);

GroupElem group_identity(const AbGroup& g);
GroupElem group_add(const AbGroup& g, const GroupElem& a, const GroupElem& b);
GroupElem group_neg(const AbGroup& g, const GroupElem& a);
GroupElem group_sub(const AbGroup& g, const GroupElem& a, const GroupElem& b);
GroupElem group_pow(const AbGroup& g, const GroupElem& a, long long n);

bool group_is_identity(const AbGroup& g, const GroupElem& a);

/// Least n >= 1 with a^n = e, or nullopt for infinite order.
std::optional<long long> group_elem_order(const AbGroup& g, const GroupElem& a);

/// Direct product, free parts first. Elements embed via product_elem.
AbGroup product_group(const AbGroup& a, const AbGroup& b);
GroupElem product_elem(const AbGroup& a, const AbGroup& b, const GroupElem& ea,
                       const GroupElem& eb);

} // namespace sqc
