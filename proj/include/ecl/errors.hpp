#ifndef ECL_ERRORS_HPP
#define ECL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecl {

// Input rejected while reading an edge-list document.
class ParseError : public std::runtime_error {
public:
    enum class Kind {
        BadHeader,
        BadLine,
        VertexRange,
        Loop,
        DuplicateEdge,
        EmptyEdgeSet,
        Disconnected,
    };

    ParseError(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// A caller violated an operation's precondition.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// An enumeration hit its configured resource cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string msg, std::size_t limit, std::size_t reached)
        : std::runtime_error(std::move(msg)), limit_(limit), reached_(reached) {}
    std::size_t limit() const { return limit_; }
    std::size_t reached() const { return reached_; }

private:
    std::size_t limit_;
    std::size_t reached_;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(std::string msg) : std::logic_error(std::move(msg)) {}
};

} // namespace ecl

#endif
