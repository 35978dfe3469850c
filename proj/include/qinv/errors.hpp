// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_ERRORS_HPP
#define QINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qinv {

/// Zero or otherwise degenerate input where a nonzero/nondegenerate object is required.
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of the operation (wrong field, bad place, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A structured value violates one of its documented invariants.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact computation refused because a configured size bound would be exceeded.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed literal; message names the offending token.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qinv

#endif
