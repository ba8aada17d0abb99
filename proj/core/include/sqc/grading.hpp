#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqc/algebra.hpp"
#include "sqc/group.hpp"
#include "sqc/subspace.hpp"

namespace sqc {

/// One homogeneous piece of a grading.
struct Component {
    GroupElem degree;
    Subspace space;

    bool operator==(const Component&) const = default;
};

/// Decomposition of the 8-dimensional algebra into homogeneous pieces indexed
/// by elements of an abelian group. Canonical form keeps components sorted by
/// degree with nonzero echelonized spaces.
struct Grading {
    AbGroup group;
    std::vector<Component> components;

    bool operator==(const Grading&) const = default;

    /// The component space at the given degree (the zero subspace if absent).
    Subspace component_at(const GroupElem& degree) const;
    /// Sorts components by degree and drops zero-dimensional ones.
    void canonicalize();
};

/// Result of grading_validate; message names the first violated condition.
struct ValidationResult {
    bool ok = true;
    std::string message;
};

/// Checks that the components form a direct sum of the whole algebra, that
/// each is closed under the involution, and that products of components land
/// in the component of the product degree.
ValidationResult grading_validate(const Grading& g);

/// A homogeneous element with its assigned degree.
struct HomogeneousSeed {
    AlgElem element;
    GroupElem degree;
};

/// Completes a partial degree assignment to a full grading: starting from the
/// seeds (plus the unit in degree e), repeatedly adjoins products of
/// homogeneous vectors in the product degree and involutions in the same
/// degree, until the homogeneous span is the whole algebra. Throws
/// grading_inconsistency when closure forces a nonzero vector into two
/// distinct degrees (or otherwise breaks the direct sum), and
/// completion_failure when the span stalls below dimension 8.
Grading grading_from_homogeneous(const AbGroup& group,
                                 const std::vector<HomogeneousSeed>& seeds);

/// The eight catalogued isomorphism families.
enum class Family { SQ1, SQ2, S3family, S1family, S2family, S3prime, T1, T2 };

std::string family_tag(Family f);
Family family_from_tag(const std::string& tag);

/// Group-element and field parameters of a family constructor, in the
/// family's canonical order (S3family: scalars = {lambda}, elems = {h, g, f};
/// all other families use elems only).
struct FamilyParams {
    std::vector<GroupElem> elems;
    std::vector<Scalar> scalars;
};

/// Builds the canonical grading of the given family over the given group.
/// Parameter constraints (element orders, distinctness, nonzero scalar) are
/// checked first; violations raise constraint_violation naming the failure.
///   SQ1(g1, g2):            deg(s)=e, deg(e+x1)=g1, deg(e+x2)=g2, ...
///   SQ2(g, g1, g2):         g of order 2; deg(s)=g, deg(x_i)=g_i, ...
///   S3family(lambda; h,g,f): lambda != 0, g^2=f^2=h^-1, g != f
///   S1family(h, g):         h of order 2
///   S2family(h, g):         h of order 2, g of order 4
///   S3prime(h, g, f):       h, g, f of order 2
///   T1(g1, g2):             g1, g2 of order 3, g1 != g2 != (g1 g2)^-1
///   T2(h, g):               h of order 2, g of order 3
Grading make_family(Family family, const AbGroup& group, const FamilyParams& params);

/// The standard Z2 x Z2 grading: K in degree (0,0) and Kx_i on the three
/// nonzero degrees.
Grading gamma_sq();

/// The Z2 grading with K + Kx_i in degree 0 and Kx_j + Kx_k in degree 1,
/// for i in {1, 2, 3}.
Grading gamma_s(std::size_t i);

/// Degree of s (s spans the skew part, so it is homogeneous in every valid
/// grading). Throws internal_inconsistency if s is not homogeneous or its
/// degree does not square to the identity.
GroupElem deg_of_s(const Grading& g);

/// True iff the pairwise intersections of the two gradings' components sum to
/// dimension 8, i.e. the joint decomposition is again a grading.
bool compatibility_check(const Grading& a, const Grading& b);

/// The joint grading by the product group, defined when compatibility_check
/// holds; throws group_mismatch otherwise.
Grading joint_grading(const Grading& a, const Grading& b);

/// True iff every component of fine lies inside some component of coarse.
bool coarsening_check(const Grading& coarse, const Grading& fine);

/// True iff the +1 and -1 eigenspaces of left multiplication by s on M are
/// graded subspaces. Equivalent to deg_of_s being the identity.
bool m_sign_components_graded(const Grading& g);

/// Checks the pairing behaviour of b on M: for degrees g, h with gh != e the
/// restriction of b to (M n A_g) x (M n A_h) must vanish, and for gh = e it
/// must be a perfect pairing.
bool b_homogeneity_check(const Grading& g);

} // namespace sqc
