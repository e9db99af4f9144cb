#pragma once

#include <stdexcept>
#include <string>

namespace hallplane {

struct NonPrimeError : std::invalid_argument {
    explicit NonPrimeError(int p)
        : std::invalid_argument("characteristic is not prime: " + std::to_string(p)) {}
};

struct UnsupportedSizeError : std::invalid_argument {
    UnsupportedSizeError(long long q, long long limit)
        : std::invalid_argument("field order " + std::to_string(q) +
                                " exceeds the configured limit " + std::to_string(limit)) {}
};

struct ZeroDivisorError : std::domain_error {
    ZeroDivisorError() : std::domain_error("right factor of zero is undefined") {}
};

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("autotopism matrix is singular") {}
};

struct CoincidentPointsError : std::invalid_argument {
    CoincidentPointsError() : std::invalid_argument("join of coincident points") {}
};

struct CoincidentLinesError : std::invalid_argument {
    CoincidentLinesError() : std::invalid_argument("meet of coincident lines") {}
};

struct DegenerateSextupleError : std::invalid_argument {
    explicit DegenerateSextupleError(const std::string& why)
        : std::invalid_argument("degenerate sextuple: " + why) {}
};

struct InfinityLineUnsupportedError : std::invalid_argument {
    InfinityLineUnsupportedError()
        : std::invalid_argument("pairs involving the line at infinity are not canonicalized; "
                                "use direct search") {}
};

struct FormulaMismatchError : std::logic_error {
    explicit FormulaMismatchError(const std::string& what) : std::logic_error(what) {}
};

struct NotFoundError : std::runtime_error {
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hallplane
