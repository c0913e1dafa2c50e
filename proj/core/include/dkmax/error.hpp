// error.hpp
// Error type shared by every dkmax module. Each failure carries a kind so
// callers (the CLI in particular) can map it to an exit status.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dkmax {

enum class ErrorKind {
    invalid_argument,
    out_of_range,
    resource_limit,
    domain_error,
    internal_inconsistency,
    cache_error,
    io_error,
    validation_failure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace dkmax
