#pragma once

#include <stdexcept>
#include <string>

namespace anst {

// Violated input contract. The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration bound or cache cap exceeded. The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw PreconditionError(what);
}

} // namespace anst
