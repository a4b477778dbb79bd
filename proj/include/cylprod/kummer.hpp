#pragma once

#include "cylprod/numeric.hpp"

namespace cylprod {

// Confluent hypergeometric function Phi(a, b; x) = sum_k (a)_k / (b)_k x^k / k!
// by direct summation. Reliable for moderate |x| (the library only calls it
// with |x| <= 8, where the largest term is ~e^8 and no precision is lost
// beyond ~1e-13). Throws std::domain_error when b is a non-positive integer.
Complex kummer_phi(Complex a, Complex b, double x);

}  // namespace cylprod
