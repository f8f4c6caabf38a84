#pragma once

#include <cstddef>

namespace anst {

// Largest rank for which full group enumeration is allowed.
inline constexpr int kDefaultEnumerationBound = 9;

int enumeration_bound();
void set_enumeration_bound(int n);

// Throws ResourceError when n exceeds the enumeration bound.
void check_enumeration_bound(int n);

} // namespace anst
