#pragma once

#include <stdexcept>
#include <string>

namespace ncbell {

struct InvalidShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasiblePolytopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// facet enumeration and similar exact algorithms refuse non-exact inputs
struct UnsupportedModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// secondary-procedure LP infeasible, or its span assumption violated
struct NoSecondaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ncbell
