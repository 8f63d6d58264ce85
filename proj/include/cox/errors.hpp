#pragma once

#include <stdexcept>
#include <string>

namespace cox {

/* User-facing error categories. CLI maps these to exit code 1; anything
 * derived from internal_error maps to exit code 2. */

struct zero_polynomial : std::domain_error {
    zero_polynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};

struct not_divisible : std::domain_error {
    explicit not_divisible(const std::string& what) : std::domain_error(what) {}
};

struct constant_divisor : std::domain_error {
    constant_divisor() : std::domain_error("divisor must be nonconstant") {}
};

struct tolerance_not_positive : std::domain_error {
    tolerance_not_positive() : std::domain_error("tolerance must be positive") {}
};

struct parameter_out_of_range : std::invalid_argument {
    explicit parameter_out_of_range(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_spec : std::invalid_argument {
    explicit invalid_spec(const std::string& what) : std::invalid_argument(what) {}
};

struct bad_vertex_index : std::invalid_argument {
    explicit bad_vertex_index(const std::string& what) : std::invalid_argument(what) {}
};

struct edge_not_found : std::invalid_argument {
    explicit edge_not_found(const std::string& what) : std::invalid_argument(what) {}
};

struct empty_tree : std::invalid_argument {
    empty_tree() : std::invalid_argument("operation requires a nonempty tree") {}
};

struct not_monic : std::invalid_argument {
    not_monic() : std::invalid_argument("polynomial must be monic") {}
};

struct constant_polynomial : std::invalid_argument {
    constant_polynomial() : std::invalid_argument("polynomial must be nonconstant") {}
};

struct syntax_error : std::invalid_argument {
    size_t position;
    syntax_error(size_t pos, const std::string& what)
        : std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

/* Violation of a mathematical identity the library relies on. Reaching one
 * of these means a bug, not bad input. */
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error("internal consistency: " + what) {}
};

} // namespace cox
