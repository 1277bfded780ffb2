#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmcount {

enum class ErrorKind {
    invalid_size,
    invalid_graph,
    not_a_tree,
    invalid_cycle,
    parity,
    size_limit,
    domain,
    not_perfect_square,
    not_pfaffian,
    not_squarish,
    precondition,
    structure,
    numerical_consistency,
    parse,
    internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pmcount
