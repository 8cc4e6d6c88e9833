#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

using Int = boost::multiprecision::cpp_int;

}
