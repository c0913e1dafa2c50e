// error.cpp

#include "dkmax/error.hpp"

namespace dkmax {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::resource_limit: return "resource-limit";
        case ErrorKind::domain_error: return "domain-error";
        case ErrorKind::internal_inconsistency: return "internal-inconsistency";
        case ErrorKind::cache_error: return "cache-error";
        case ErrorKind::io_error: return "io-error";
        case ErrorKind::validation_failure: return "validation-failure";
    }
    return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace dkmax
