#pragma once

#include <stdexcept>
#include <string>

namespace sqc {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Inversion of a zero field element.
class division_by_zero : public error {
public:
    division_by_zero() : error("division-by-zero: inverse of zero") {}
};

/// Ambient dimensions of two subspaces (or a subspace and a vector) disagree.
class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& detail)
        : error("dimension-mismatch: " + detail) {}
};

/// A K element fails the norm-one condition r·ex(r) = 1.
class not_in_s1 : public error {
public:
    explicit not_in_s1(const std::string& detail)
        : error("not-in-S1: " + detail) {}
};

/// A linear map fails the automorphism predicate where one is required.
class not_an_automorphism : public error {
public:
    explicit not_an_automorphism(const std::string& detail)
        : error("not-an-automorphism: " + detail) {}
};

/// A structural guarantee failed; indicates a bug rather than bad input.
class internal_inconsistency : public error {
public:
    explicit internal_inconsistency(const std::string& detail)
        : error("internal-inconsistency: " + detail) {}
};

/// The doubling parameter mu of the CD construction is zero.
class zero_mu : public error {
public:
    zero_mu() : error("zero-mu: CD construction requires mu != 0") {}
};

/// A claimed square root fails verification.
class invalid_root : public error {
public:
    explicit invalid_root(const std::string& detail)
        : error("invalid-root: " + detail) {}
};

/// An argument required to lie in M has a nonzero k0 coordinate.
class not_in_m : public error {
public:
    explicit not_in_m(const std::string& detail)
        : error("not-in-M: " + detail) {}
};

/// Homogeneous closure stalled below the full dimension.
class completion_failure : public error {
public:
    explicit completion_failure(const std::string& detail)
        : error("completion-failure: " + detail) {}
};

/// Homogeneous closure forced one vector into two distinct degrees.
class grading_inconsistency : public error {
public:
    explicit grading_inconsistency(const std::string& detail)
        : error("inconsistency: " + detail) {}
};

/// A family constructor precondition failed; the message names it.
class constraint_violation : public error {
public:
    explicit constraint_violation(const std::string& detail)
        : error("constraint-violation: " + detail) {}
};

/// Two gradings live over structurally different groups.
class group_mismatch : public error {
public:
    explicit group_mismatch(const std::string& detail)
        : error("group-mismatch: " + detail) {}
};

/// The classification decision tree exhausted all candidates on a valid grading.
class unclassifiable : public error {
public:
    explicit unclassifiable(const std::string& detail)
        : error("unclassifiable: " + detail) {}
};

/// Malformed serialized input.
class parse_error : public error {
public:
    explicit parse_error(const std::string& detail)
        : error("parse-error: " + detail) {}
};

} // namespace sqc
