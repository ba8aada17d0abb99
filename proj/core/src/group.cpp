#include "sqc/group.hpp"

#include <numeric>

#include "sqc/errors.hpp"

namespace sqc {

bool AbGroup::is_valid() const {
    for (long long m : torsion)
        if (m < 2) return false;
    return true;
}

GroupElem group_normalize(const AbGroup& g, std::vector<long long> coords) {
    if (coords.size() != g.coord_count())
        throw dimension_mismatch("group element coordinate count does not match the group");
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        long long& c = coords[g.free_rank + i];
        const long long m = g.torsion[i];
        c %= m;
        if (c < 0) c += m;
    }
    return GroupElem{std::move(coords)};
}

GroupElem group_identity(const AbGroup& g) {
    return GroupElem{std::vector<long long>(g.coord_count(), 0)};
}

GroupElem group_add(const AbGroup& g, const GroupElem& a, const GroupElem& b) {
    if (a.coords.size() != g.coord_count() || b.coords.size() != g.coord_count())
        throw dimension_mismatch("group element coordinate count does not match the group");
    std::vector<long long> c(g.coord_count());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return group_normalize(g, std::move(c));
}

GroupElem group_neg(const AbGroup& g, const GroupElem& a) {
    if (a.coords.size() != g.coord_count())
        throw dimension_mismatch("group element coordinate count does not match the group");
    std::vector<long long> c(g.coord_count());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
    return group_normalize(g, std::move(c));
}

GroupElem group_sub(const AbGroup& g, const GroupElem& a, const GroupElem& b) {
    return group_add(g, a, group_neg(g, b));
}

GroupElem group_pow(const AbGroup& g, const GroupElem& a, long long n) {
    if (a.coords.size() != g.coord_count())
        throw dimension_mismatch("group element coordinate count does not match the group");
    std::vector<long long> c(g.coord_count());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] * n;
    return group_normalize(g, std::move(c));
}

bool group_is_identity(const AbGroup& g, const GroupElem& a) {
    return a == group_identity(g);
}

std::optional<long long> group_elem_order(const AbGroup& g, const GroupElem& a) {
    if (a.coords.size() != g.coord_count())
        throw dimension_mismatch("group element coordinate count does not match the group");
    for (std::size_t i = 0; i < g.free_rank; ++i)
        if (a.coords[i] != 0) return std::nullopt;
    long long order = 1;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        const long long m = g.torsion[i];
        const long long c = ((a.coords[g.free_rank + i] % m) + m) % m;
        const long long cyc = m / std::gcd(m, c == 0 ? m : c);
        order = std::lcm(order, cyc);
    }
    return order;
}

AbGroup product_group(const AbGroup& a, const AbGroup& b) {
    AbGroup p;
    p.free_rank = a.free_rank + b.free_rank;
    p.torsion = a.torsion;
    p.torsion.insert(p.torsion.end(), b.torsion.begin(), b.torsion.end());
    return p;
}

GroupElem product_elem(const AbGroup& a, const AbGroup& b, const GroupElem& ea,
                       const GroupElem& eb) {
    if (ea.coords.size() != a.coord_count() || eb.coords.size() != b.coord_count())
        throw dimension_mismatch("group element coordinate count does not match the group");
    std::vector<long long> c;
    c.reserve(a.coord_count() + b.coord_count());
    c.insert(c.end(), ea.coords.begin(), ea.coords.begin() + a.free_rank);
    c.insert(c.end(), eb.coords.begin(), eb.coords.begin() + b.free_rank);
    c.insert(c.end(), ea.coords.begin() + a.free_rank, ea.coords.end());
    c.insert(c.end(), eb.coords.begin() + b.free_rank, eb.coords.end());
    return GroupElem{std::move(c)};
}

} // namespace sqc
