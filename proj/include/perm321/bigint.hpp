#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace perm321 {

/// Exact arbitrary-precision signed integer used for every count.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace perm321
