#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Bad user-supplied parameter (a out of range, d < 2, ...).
struct ParameterDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Shrinking or constructing a polytope left an empty interior.
struct DegeneratePolytopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested on or outside the polytope boundary, or a log
// argument went non-positive.
struct SingularEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Hessian of the potential stopped being positive definite.
struct NonConvexPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient vector and basis disagree, or incompatible bases.
struct BasisMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A root/Newton solver failed to bracket or converge.
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace toric
