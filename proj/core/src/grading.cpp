#include "sqc/grading.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sqc/errors.hpp"
#include "sqc/matrix.hpp"

namespace sqc {

namespace {

std::string degree_str(const GroupElem& d) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d.coords.size(); ++i) {
        if (i) os << ',';
        os << d.coords[i];
    }
    os << ')';
    return os.str();
}

std::vector<AlgElem> component_basis(const Subspace& s) {
    std::vector<AlgElem> out;
    out.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        out.push_back(AlgElem::from_coords(s.basis_vector(i)));
    return out;
}

// k x_i as an algebra element.
AlgElem module_x(std::size_t i, const KElem& k) {
    AlgElem a;
    a.k.at(i) = k;
    return a;
}

} // namespace

Subspace Grading::component_at(const GroupElem& degree) const {
    for (const auto& c : components)
        if (c.degree == degree) return c.space;
    return Subspace(8);
}

void Grading::canonicalize() {
    std::erase_if(components, [](const Component& c) { return c.space.dim() == 0; });
    std::sort(components.begin(), components.end(),
              [](const Component& a, const Component& b) { return a.degree < b.degree; });
}

ValidationResult grading_validate(const Grading& g) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    if (!g.group.is_valid()) return fail("group torsion orders must be at least 2");
    for (const auto& c : g.components) {
        if (c.degree.coords.size() != g.group.coord_count())
            return fail("degree " + degree_str(c.degree) + " has the wrong coordinate count");
        if (!(group_normalize(g.group, c.degree.coords) == c.degree))
            return fail("degree " + degree_str(c.degree) + " is not reduced");
        if (c.space.ambient_dim() != 8)
            return fail("component at degree " + degree_str(c.degree) +
                        " does not live in the 8-dimensional algebra");
    }
    for (std::size_t i = 0; i < g.components.size(); ++i)
        for (std::size_t j = i + 1; j < g.components.size(); ++j)
            if (g.components[i].degree == g.components[j].degree)
                return fail("duplicate degree " + degree_str(g.components[i].degree));
    std::size_t total = 0;
    Subspace sum(8);
    for (const auto& c : g.components) {
        total += c.space.dim();
        sum = subspace_sum(sum, c.space);
    }
    if (total != 8)
        return fail("component dimensions sum to " + std::to_string(total) + ", expected 8");
    if (sum.dim() != 8)
        return fail("components overlap: their span has dimension " +
                    std::to_string(sum.dim()) + " < 8");
    for (const auto& c : g.components)
        for (const auto& v : component_basis(c.space))
            if (!subspace_contains(c.space, alg_involute(v).coord_vector()))
                return fail("component at degree " + degree_str(c.degree) +
                            " is not closed under the involution");
    for (const auto& c1 : g.components)
        for (const auto& c2 : g.components) {
            const GroupElem dd = group_add(g.group, c1.degree, c2.degree);
            const Subspace target = g.component_at(dd);
            for (const auto& u : component_basis(c1.space))
                for (const auto& v : component_basis(c2.space)) {
                    const AlgElem w = alg_multiply(u, v);
                    if (w.is_zero()) continue;
                    if (!subspace_contains(target, w.coord_vector()))
                        return fail("product closure fails for degrees " +
                                    degree_str(c1.degree) + " and " + degree_str(c2.degree) +
                                    ": the product is not inside the component at " +
                                    degree_str(dd));
                }
        }
    return {};
}

Grading grading_from_homogeneous(const AbGroup& group,
                                 const std::vector<HomogeneousSeed>& seeds) {
    if (!group.is_valid())
        throw grading_inconsistency("group torsion orders must be at least 2");
    std::map<GroupElem, Subspace> comps;
    std::size_t total_dim = 0;

    auto insert = [&](const AlgElem& v, const GroupElem& d) -> bool {
        if (v.is_zero()) return false;
        const auto vec = v.coord_vector();
        auto it = comps.find(d);
        if (it != comps.end() && subspace_contains(it->second, vec)) return false;
        for (const auto& [d2, sp] : comps)
            if (!(d2 == d) && subspace_contains(sp, vec))
                throw grading_inconsistency("closure forces a vector into degrees " +
                                            degree_str(d2) + " and " + degree_str(d));
        const Subspace cur = (it != comps.end()) ? it->second : Subspace(8);
        Subspace grown = subspace_sum(cur, Subspace::span(8, {vec}));
        total_dim += grown.dim() - cur.dim();
        if (total_dim > 8)
            throw grading_inconsistency(
                "closure exceeds dimension 8; the assignments admit no grading");
        comps.insert_or_assign(d, std::move(grown));
        return true;
    };

    insert(AlgElem::one(), group_identity(group));
    for (const auto& s : seeds) insert(s.element, group_normalize(group, s.degree.coords));

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<GroupElem, std::vector<AlgElem>>> snap;
        snap.reserve(comps.size());
        for (const auto& [d, sp] : comps) snap.emplace_back(d, component_basis(sp));
        for (const auto& [d, basis] : snap)
            for (const auto& u : basis)
                if (insert(alg_involute(u), d)) changed = true;
        for (const auto& [d1, b1] : snap)
            for (const auto& [d2, b2] : snap) {
                const GroupElem dd = group_add(group, d1, d2);
                for (const auto& u : b1)
                    for (const auto& v : b2)
                        if (insert(alg_multiply(u, v), dd)) changed = true;
            }
    }
    if (total_dim < 8)
        throw completion_failure("homogeneous closure stalls at dimension " +
                                 std::to_string(total_dim));
    Grading out{group, {}};
    out.components.reserve(comps.size());
    for (const auto& [d, sp] : comps) out.components.push_back({d, sp});
    out.canonicalize();
    if (const auto check = grading_validate(out); !check.ok)
        throw grading_inconsistency("completed decomposition is not a grading: " +
                                    check.message);
    return out;
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::SQ1: return "SQ1";
        case Family::SQ2: return "SQ2";
        case Family::S3family: return "S3family";
        case Family::S1family: return "S1family";
        case Family::S2family: return "S2family";
        case Family::S3prime: return "S3prime";
        case Family::T1: return "T1";
        case Family::T2: return "T2";
    }
    throw internal_inconsistency("unknown family tag");
}

Family family_from_tag(const std::string& tag) {
    for (Family f : {Family::SQ1, Family::SQ2, Family::S3family, Family::S1family,
                     Family::S2family, Family::S3prime, Family::T1, Family::T2})
        if (family_tag(f) == tag) return f;
    throw parse_error("unknown family tag: " + tag);
}

Grading make_family(Family family, const AbGroup& group, const FamilyParams& params) {
    if (!group.is_valid())
        throw constraint_violation("group torsion orders must be at least 2");
    const std::string tag = family_tag(family);
    auto need = [&](std::size_t elems, std::size_t scalars, const char* sig) {
        if (params.elems.size() != elems || params.scalars.size() != scalars)
            throw constraint_violation(tag + " expects " + sig);
        for (const auto& p : params.elems)
            if (p.coords.size() != group.coord_count())
                throw constraint_violation(tag +
                                           ": parameter coordinate count does not match the group");
    };
    auto norm = [&](std::size_t idx) { return group_normalize(group, params.elems[idx].coords); };
    auto add = [&](const GroupElem& a, const GroupElem& b) { return group_add(group, a, b); };
    auto neg = [&](const GroupElem& a) { return group_neg(group, a); };
    auto has_order = [&](const GroupElem& a, long long n) {
        const auto o = group_elem_order(group, a);
        return o.has_value() && *o == n;
    };
    const GroupElem e = group_identity(group);
    const Scalar zeta = scalar_omega();
    std::vector<HomogeneousSeed> seeds;

    switch (family) {
        case Family::SQ1: {
            need(2, 0, "two group elements (g1, g2)");
            const GroupElem g1 = norm(0), g2 = norm(1);
            seeds = {{AlgElem::s(), e},
                     {AlgElem::basis_vector(2), g1},
                     {AlgElem::basis_vector(3), neg(g1)},
                     {AlgElem::basis_vector(4), g2},
                     {AlgElem::basis_vector(5), neg(g2)},
                     {AlgElem::basis_vector(6), neg(add(g1, g2))},
                     {AlgElem::basis_vector(7), add(g1, g2)}};
            break;
        }
        case Family::SQ2: {
            need(3, 0, "three group elements (g, g1, g2)");
            const GroupElem g = norm(0), g1 = norm(1), g2 = norm(2);
            if (!has_order(g, 2))
                throw constraint_violation("SQ2 requires g of order 2");
            seeds = {{AlgElem::s(), g},
                     {AlgElem::x(1), g1},
                     {AlgElem::x(2), g2},
                     {AlgElem::x(3), add(g1, g2)},
                     {module_x(1, KElem::s()), add(g, g1)},
                     {module_x(2, KElem::s()), add(g, g2)},
                     {module_x(3, KElem::s()), add(g, add(g1, g2))}};
            break;
        }
        case Family::S3family: {
            need(3, 1, "one scalar (lambda) and three group elements (h, g, f)");
            const Scalar lambda = params.scalars[0];
            if (lambda.is_zero())
                throw constraint_violation("S3family requires lambda != 0");
            const GroupElem h = norm(0), g = norm(1), f = norm(2);
            if (!(add(g, g) == neg(h)) || !(add(f, f) == neg(h)))
                throw constraint_violation("S3family requires g^2 = f^2 = h^-1");
            if (g == f) throw constraint_violation("S3family requires g != f");
            AlgElem u;
            u.k[2] = KElem::e_plus();
            u.k[3] = lambda * KElem::e_plus();
            AlgElem v;
            v.k[2] = -scalar_inv(lambda) * KElem::e_plus();
            v.k[3] = KElem::e_plus();
            seeds = {{AlgElem::s(), e},
                     {AlgElem::basis_vector(2), h},
                     {AlgElem::basis_vector(3), neg(h)},
                     {u, g},
                     {v, f}};
            break;
        }
        case Family::S1family: {
            need(2, 0, "two group elements (h, g)");
            const GroupElem h = norm(0), g = norm(1);
            if (!has_order(h, 2))
                throw constraint_violation("S1family requires h of order 2");
            AlgElem u;
            u.k[2] = KElem::e_plus();
            u.k[3] = KElem::e_minus();
            AlgElem v;
            v.k[2] = KElem::e_minus();
            v.k[3] = KElem::e_plus();
            seeds = {{AlgElem::s(), h}, {u, g}, {v, neg(g)}};
            break;
        }
        case Family::S2family: {
            need(2, 0, "two group elements (h, g)");
            const GroupElem h = norm(0), g = norm(1);
            if (!has_order(h, 2))
                throw constraint_violation("S2family requires h of order 2");
            if (!has_order(g, 4))
                throw constraint_violation("S2family requires g of order 4");
            AlgElem u;
            u.k[2] = KElem::one();
            u.k[3] = KElem::from_scalar(scalar_i());
            seeds = {{AlgElem::s(), h}, {AlgElem::x(1), add(g, g)}, {u, g}};
            break;
        }
        case Family::S3prime: {
            need(3, 0, "three group elements (h, g, f)");
            const GroupElem h = norm(0), g = norm(1), f = norm(2);
            if (!has_order(h, 2) || !has_order(g, 2) || !has_order(f, 2))
                throw constraint_violation("S3prime requires h, g, f of order 2");
            seeds = {{AlgElem::s(), h},
                     {AlgElem::x(2) + AlgElem::x(3), g},
                     {AlgElem::x(2) - AlgElem::x(3), f}};
            break;
        }
        case Family::T1: {
            need(2, 0, "two group elements (g1, g2)");
            const GroupElem g1 = norm(0), g2 = norm(1);
            if (!has_order(g1, 3) || !has_order(g2, 3))
                throw constraint_violation("T1 requires g1 and g2 of order 3");
            if (g1 == g2) throw constraint_violation("T1 requires g1 != g2");
            if (g2 == neg(add(g1, g2)))
                throw constraint_violation("T1 requires g2 != (g1 g2)^-1");
            auto eplus_combo = [](const Scalar& c1, const Scalar& c2, const Scalar& c3) {
                AlgElem a;
                a.k[1] = c1 * KElem::e_plus();
                a.k[2] = c2 * KElem::e_plus();
                a.k[3] = c3 * KElem::e_plus();
                return a;
            };
            seeds = {{AlgElem::s(), e},
                     {eplus_combo(Scalar(1), zeta, zeta * zeta), g1},
                     {eplus_combo(Scalar(1), zeta * zeta, zeta), g2},
                     {eplus_combo(Scalar(1), Scalar(1), Scalar(1)), neg(add(g1, g2))}};
            break;
        }
        case Family::T2: {
            need(2, 0, "two group elements (h, g)");
            const GroupElem h = norm(0), g = norm(1);
            if (!has_order(h, 2))
                throw constraint_violation("T2 requires h of order 2");
            if (!has_order(g, 3))
                throw constraint_violation("T2 requires g of order 3");
            AlgElem u;
            u.k[1] = KElem::one();
            u.k[2] = KElem::from_scalar(zeta);
            u.k[3] = KElem::from_scalar(zeta * zeta);
            seeds = {{AlgElem::s(), h}, {u, g}};
            break;
        }
    }
    return grading_from_homogeneous(group, seeds);
}

Grading gamma_sq() {
    const AbGroup z22{0, {2, 2}};
    Grading g{z22, {}};
    const auto comp = [&](std::vector<long long> deg, CanonicalSpace sp) {
        g.components.push_back({group_normalize(z22, std::move(deg)), canonical_subspace(sp)});
    };
    comp({0, 0}, CanonicalSpace::K);
    comp({0, 1}, CanonicalSpace::Kx1);
    comp({1, 0}, CanonicalSpace::Kx2);
    comp({1, 1}, CanonicalSpace::Kx3);
    g.canonicalize();
    return g;
}

Grading gamma_s(std::size_t i) {
    if (i < 1 || i > 3) throw internal_inconsistency("module generator index must be 1, 2, or 3");
    const AbGroup z2{0, {2}};
    const std::array<CanonicalSpace, 4> lines = {CanonicalSpace::Kx1, CanonicalSpace::Kx1,
                                                 CanonicalSpace::Kx2, CanonicalSpace::Kx3};
    Subspace even = subspace_sum(canonical_subspace(CanonicalSpace::K),
                                 canonical_subspace(lines[i]));
    Subspace odd(8);
    for (std::size_t j = 1; j <= 3; ++j)
        if (j != i) odd = subspace_sum(odd, canonical_subspace(lines[j]));
    Grading g{z2, {{group_normalize(z2, {0}), even}, {group_normalize(z2, {1}), odd}}};
    g.canonicalize();
    return g;
}

GroupElem deg_of_s(const Grading& g) {
    const auto s = AlgElem::s().coord_vector();
    for (const auto& c : g.components)
        if (subspace_contains(c.space, s)) {
            if (!group_is_identity(g.group, group_add(g.group, c.degree, c.degree)))
                throw internal_inconsistency("the degree of s does not square to the identity");
            return c.degree;
        }
    throw internal_inconsistency("s is not homogeneous in the given decomposition");
}

bool compatibility_check(const Grading& a, const Grading& b) {
    std::size_t total = 0;
    for (const auto& ca : a.components)
        for (const auto& cb : b.components)
            total += subspace_intersection(ca.space, cb.space).dim();
    return total == 8;
}

Grading joint_grading(const Grading& a, const Grading& b) {
    if (!compatibility_check(a, b))
        throw group_mismatch("gradings are not compatible; no joint grading exists");
    const AbGroup pg = product_group(a.group, b.group);
    Grading out{pg, {}};
    for (const auto& ca : a.components)
        for (const auto& cb : b.components) {
            Subspace meet = subspace_intersection(ca.space, cb.space);
            if (meet.dim() == 0) continue;
            out.components.push_back(
                {product_elem(a.group, b.group, ca.degree, cb.degree), std::move(meet)});
        }
    out.canonicalize();
    return out;
}

bool coarsening_check(const Grading& coarse, const Grading& fine) {
    for (const auto& cf : fine.components) {
        bool inside = false;
        for (const auto& cc : coarse.components)
            if (subspace_contains_all(cc.space, cf.space.basis())) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool m_sign_components_graded(const Grading& g) {
    for (CanonicalSpace name : {CanonicalSpace::Mplus, CanonicalSpace::Mminus}) {
        const Subspace w = canonical_subspace(name);
        std::size_t covered = 0;
        for (const auto& c : g.components)
            covered += subspace_intersection(w, c.space).dim();
        if (covered != w.dim()) return false;
    }
    return true;
}

bool b_homogeneity_check(const Grading& g) {
    const Subspace m = canonical_subspace(CanonicalSpace::M);
    std::vector<std::pair<GroupElem, Subspace>> m_parts;
    for (const auto& c : g.components)
        m_parts.emplace_back(c.degree, subspace_intersection(m, c.space));
    for (const auto& [dg, mg] : m_parts)
        for (const auto& [dh, mh] : m_parts) {
            const bool pair_to_identity =
                group_is_identity(g.group, group_add(g.group, dg, dh));
            Matrix pairing(mg.dim(), mh.dim());
            for (std::size_t i = 0; i < mg.dim(); ++i)
                for (std::size_t j = 0; j < mh.dim(); ++j)
                    pairing.at(i, j) =
                        bilinear_b(AlgElem::from_coords(mg.basis_vector(i)),
                                   AlgElem::from_coords(mh.basis_vector(j)))
                            .b;
            if (pair_to_identity) {
                if (mg.dim() != mh.dim() || rank(pairing) != mg.dim()) return false;
            } else {
                if (!pairing.is_zero()) return false;
            }
        }
    return true;
}

} // namespace sqc
