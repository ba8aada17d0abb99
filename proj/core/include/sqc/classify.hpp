#pragma once

#include <optional>
#include <vector>

#include "sqc/grading.hpp"
#include "sqc/maps.hpp"

namespace sqc {

/// Result of classifying a grading: the catalogued family it belongs to, the
/// canonical constructor parameters, an automorphism (in factored form)
/// mapping the input grading onto make_family(family, group, params), and the
/// input's support (the sorted degrees with nonzero component).
struct Classification {
    Family family;
    FamilyParams params;
    AutFactors witness;
    std::vector<GroupElem> support;
};

/// Sorted degrees of the nonzero components.
std::vector<GroupElem> grading_support(const Grading& g);

/// Searches for an automorphism phi with phi(A_d) = B_d for every degree d.
/// Enumerates the 12 discrete (sigma, psi) choices; for each, the component
/// constraints are affine-linear in the four torus unknowns and are solved
/// exactly, with the norm-one side conditions handled by a small structured
/// polynomial solver over the exact field. Any returned witness is fully
/// re-verified. Returns nullopt when no witness is found (the solver extracts
/// roots only in the coefficient field, so absence of a witness over that
/// field is reported honestly). Throws group_mismatch when the gradings use
/// different groups.
std::optional<AutFactors> grading_isomorphism(const Grading& a, const Grading& b);

/// Decides which catalogued family the grading belongs to, mirroring the
/// compatibility decision tree: first gradings compatible with the standard
/// quartic grading, then those compatible with one of the three coarsenings
/// gamma_s(i), then the rest; each branch splits on the degree of s. Candidate
/// parameters are read off the homogeneous structure and every candidate is
/// confirmed by an explicit verified witness. Throws unclassifiable if no
/// candidate verifies (which signals a bug, not a property of valid input).
Classification classify(const Grading& g);

} // namespace sqc
