#pragma once
// gtest printers so failed comparisons show homology as text.

#include <ostream>

#include "vth/homology.hpp"

namespace vth {

inline void PrintTo(const HomologyProfile& p, std::ostream* os) { *os << p.to_tuple_string(); }

}  // namespace vth
