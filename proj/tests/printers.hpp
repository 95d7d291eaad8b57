#pragma once

// Readable gtest failure messages for library value types.

#include <ostream>

#include "symquot/symquot.hpp"

namespace symquot {

inline void PrintTo(const Partition& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const APoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const QPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const QuotElem& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const XPoly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace symquot
