#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ks {

// Exact arbitrary-precision integer. Alternating sums that arise in the
// Weyl-group formula can transiently leave machine range, so every
// polynomial coefficient in this library is an Int.
using Int = boost::multiprecision::cpp_int;

}  // namespace ks
