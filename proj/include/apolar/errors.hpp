#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Linear algebra
struct NotInSpanError : std::domain_error {
    explicit NotInSpanError(const std::string& what) : std::domain_error(what) {}
};
struct DependentBasisError : std::domain_error {
    explicit DependentBasisError(const std::string& what) : std::domain_error(what) {}
};

// Polynomials
struct AmbientMismatchError : std::invalid_argument {
    explicit AmbientMismatchError(const std::string& what) : std::invalid_argument(what) {}
};
struct NotHomogeneousError : std::invalid_argument {
    explicit NotHomogeneousError(const std::string& what) : std::invalid_argument(what) {}
};
struct DegreeOutOfRangeError : std::out_of_range {
    explicit DegreeOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};
struct DegenerateDegreeError : std::invalid_argument {
    explicit DegenerateDegreeError(const std::string& what) : std::invalid_argument(what) {}
};

// Tableaux
struct ShapeContentMismatchError : std::invalid_argument {
    explicit ShapeContentMismatchError(const std::string& what) : std::invalid_argument(what) {}
};
struct NonPartitionContentError : std::invalid_argument {
    explicit NonPartitionContentError(const std::string& what) : std::invalid_argument(what) {}
};

// Characters
struct SizeMismatchError : std::invalid_argument {
    explicit SizeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Signals an internal bug: a trace decomposition produced a multiplicity
// that is not a nonnegative integer.
struct NonIntegralMultiplicityError : std::logic_error {
    explicit NonIntegralMultiplicityError(const std::string& what) : std::logic_error(what) {}
};

// The graded-character formula requires a_1 + ... + a_n != 0.
struct ZeroCoefficientSumError : std::domain_error {
    ZeroCoefficientSumError()
        : std::domain_error("hypothesis violated: a_1 + ... + a_n != 0 is required") {}
};

}  // namespace apolar
