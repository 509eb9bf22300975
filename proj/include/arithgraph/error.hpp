#pragma once

#include <stdexcept>
#include <string>

namespace arithgraph {

// Input violates a documented precondition (self-loop, bad diagonal, unknown family...).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ContractError(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw InvariantError(what);
}

}  // namespace arithgraph
