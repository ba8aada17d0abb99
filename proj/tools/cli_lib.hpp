#pragma once

#include <string>
#include <vector>

#include "sqc/grading.hpp"
#include "sqc/json_io.hpp"

namespace sqc::cli {

/// Outcome of one command: the JSON payload for standard output (or, for the
/// markdown table variant, a plain-text payload), the diagnostics destined
/// for standard error, and the process exit code.
struct CommandResult {
    int exit_code = 0;
    Json payload;
    std::string text_payload;
    std::vector<std::string> diagnostics;
};

/// One catalogued family instance over its minimal admissible group; used by
/// the verification suite and the acceptance tests.
struct MinimalInstance {
    Family family;
    AbGroup group;
    FamilyParams params;
};
std::vector<MinimalInstance> minimal_family_instances();

/// Parses a group spec such as "Z2xZ4" or "ZxZ3"; a bare "Z" factor
/// contributes one free rank, "Zn" a torsion factor of order n. Free factors
/// come first in the coordinate order.
AbGroup parse_group_spec(const std::string& spec);

/// Parses a group element flag: concatenated single digits ("13") or
/// comma-separated coordinates ("1,3", "-1,10").
GroupElem parse_group_elem(const std::string& text, const AbGroup& group);

/// Parses a scalar flag: a rational "p/q", or four comma-separated rationals
/// giving the coefficients of z^0..z^3.
Scalar parse_scalar_flag(const std::string& text);

/// Resolves grading input: one of the reference tags GammaSQ, GammaS1,
/// GammaS2, GammaS3, or a JSON grading document.
Grading resolve_grading_text(const std::string& text);

CommandResult cmd_table(const std::string& format);

/// Runs the named invariant checks; seed drives the randomized properties and
/// corrupt ("left,right" in table basis names) flips one structure constant
/// before the doubling-construction cross-check.
CommandResult cmd_verify(unsigned long long seed, const std::string& corrupt);

CommandResult cmd_derivations();

CommandResult cmd_aut_check(const std::string& text);
CommandResult cmd_aut_factor(const std::string& text);
CommandResult cmd_aut_compose(const std::string& text_a, const std::string& text_b);

/// Raw flag values for `grading make`; absent flags stay empty.
struct MakeFlags {
    std::string family;
    std::string group;
    std::string g;
    std::string g1;
    std::string g2;
    std::string h;
    std::string f;
    std::string lambda;
};
CommandResult cmd_grading_make(const MakeFlags& flags);
CommandResult cmd_grading_validate(const std::string& text);
CommandResult cmd_grading_classify(const std::string& text);
CommandResult cmd_grading_compare(const std::string& text_a, const std::string& text_b);
CommandResult cmd_grading_coarsen(const std::string& coarse_text, const std::string& fine_text);

} // namespace sqc::cli
