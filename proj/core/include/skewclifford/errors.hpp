#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skcl {

// One violated invariant, with 1-based coordinates into the offending matrix.
struct Violation {
    std::string code;
    std::vector<int> indices;
    std::string detail;
};

// Input data breaks a structural invariant (bad mu/B matrices, malformed
// rationals, ...).  CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, std::vector<Violation> violations = {})
        : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// An operation was called outside its contract (trivial algebra, degree cap
// exceeded, zero inversion, ...).  CLI maps this to exit code 3.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates an engine bug.  CLI exit code 4.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace skcl
