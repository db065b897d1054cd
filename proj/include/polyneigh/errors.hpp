#pragma once

#include <stdexcept>
#include <string>

namespace polyneigh {

enum class ErrorKind {
    parse_error,
    empty_input,
    mixed_dimensions,
    degenerate_input,
    on_hyperplane,
    not_full_dimensional,
    duplicate_vertex,
    redundant_point,
    index_out_of_range,
    bad_range,
    unknown_example,
    fvector_inconsistent,
    not_m_sequence,
    non_integer,
};

/// Single exception type for the whole library; `kind()` identifies the
/// failed contract and `index()` carries the offending position where one
/// exists (redundant_point, duplicate_vertex, index_out_of_range).
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, long long index = -1)
        : std::runtime_error(std::move(message)), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    long long index() const noexcept { return index_; }

  private:
    ErrorKind kind_;
    long long index_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message, long long index = -1) {
    throw Error(kind, message, index);
}

} // namespace polyneigh
