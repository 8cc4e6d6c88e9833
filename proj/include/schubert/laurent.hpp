#pragma once

#include "schubert/ring.hpp"
#include "schubert/series.hpp"

namespace schubert {

using LaurentWindow = WindowedSeries<RingElement>;

// 1 - e_1 t + e_2 t^2 - ... + (-1)^r e_r t^r on the chosen axis
// (t = z when on_z, else t = w). Exact.
LaurentWindow elementary_series(int arity, bool on_z);

// Multiplicative inverse of a series in z alone with constant term 1,
// exact through z^z_max. The input window must determine all coefficients
// up to z_max; domain error otherwise or when the constant term is not 1.
LaurentWindow geometric_inverse(const LaurentWindow& f, int z_max);

}
