#ifndef DRZ_ERRORS_HPP
#define DRZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drz {

// Input/shape problems: the caller handed us something malformed.
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A square matrix was required to be invertible and is not.
struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

// Group inverse requested for a matrix of Drazin index >= 2.
struct IndexTooLarge : std::domain_error {
    explicit IndexTooLarge(const std::string& what) : std::domain_error(what) {}
};

// An additive formula needed XY = 0 (and possibly YX = 0) and the input violates it.
struct OrthogonalityViolated : std::domain_error {
    explicit OrthogonalityViolated(const std::string& what) : std::domain_error(what) {}
};

// A closed-form branch was invoked on blocks that do not satisfy its hypotheses.
struct HypothesisViolated : std::domain_error {
    explicit HypothesisViolated(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct DuplicateArc : std::runtime_error {
    explicit DuplicateArc(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroWeight : std::runtime_error {
    explicit ZeroWeight(const std::string& what) : std::runtime_error(what) {}
};

struct NotBipartiteForPartition : std::runtime_error {
    explicit NotBipartiteForPartition(const std::string& what) : std::runtime_error(what) {}
};

struct UnequalParts : std::runtime_error {
    explicit UnequalParts(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveVector : std::invalid_argument {
    explicit NonPositiveVector(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroInnerProduct : std::invalid_argument {
    explicit ZeroInnerProduct(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroEntry : std::invalid_argument {
    explicit ZeroEntry(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace drz

#endif
