#pragma once

// readable gtest failure output

#include <ostream>

#include "supermatrix/super_matrix.hpp"

namespace sgeo {

inline void PrintTo(const ScalarExpr& e, std::ostream* os) { *os << e.str(); }
inline void PrintTo(const SuperFunction& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const SuperMatrix3& m, std::ostream* os) { *os << m.str(); }

}  // namespace sgeo
