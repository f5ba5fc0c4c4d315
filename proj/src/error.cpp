#include "simplexwidth/error.hpp"

namespace simplexwidth {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_dimension: return "invalid-dimension";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::domain: return "domain";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::precondition: return "precondition-violation";
        case ErrorKind::cap_exceeded: return "cap-exceeded";
        case ErrorKind::oracle_scope: return "oracle-scope";
        case ErrorKind::empty_input: return "empty-input";
    }
    return "unknown";
}

}  // namespace simplexwidth
