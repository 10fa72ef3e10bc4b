#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace starsurg {

using Integer = boost::multiprecision::cpp_int;

}  // namespace starsurg
