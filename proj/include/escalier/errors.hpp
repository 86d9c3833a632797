#pragma once

#include <stdexcept>
#include <string>

namespace escalier {

struct FieldMismatchError : std::runtime_error {
    explicit FieldMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : std::runtime_error {
    explicit DivisionByZeroError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : std::runtime_error {
    explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRangeError : std::runtime_error {
    explicit IndexOutOfRangeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotOrderIdealError : std::runtime_error {
    explicit NotOrderIdealError(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicatePointError : std::runtime_error {
    explicit DuplicatePointError(const std::string& what) : std::runtime_error(what) {}
};

struct NoAntecedentError : std::runtime_error {
    explicit NoAntecedentError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAdmissibleError : std::runtime_error {
    explicit NotAdmissibleError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPositionError : std::runtime_error {
    explicit InvalidPositionError(const std::string& what) : std::runtime_error(what) {}
};

struct SamePointError : std::runtime_error {
    explicit SamePointError(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentStateError : std::runtime_error {
    explicit InconsistentStateError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPivotError : std::runtime_error {
    explicit SingularPivotError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace escalier
