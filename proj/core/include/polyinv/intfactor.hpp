#ifndef POLYINV_INTFACTOR_HPP
#define POLYINV_INTFACTOR_HPP

#include <utility>
#include <vector>

#include "polyinv/int.hpp"

namespace polyinv {

bool is_probable_prime(const Int& n);

// Prime factorization of |n| as sorted (prime, exponent) pairs; n must be
// nonzero. |n| == 1 yields the empty list. Trial division below 10^4, then
// Pollard-Brent with a fixed parameter schedule.
std::vector<std::pair<Int, int>> factorize(const Int& n);

}  // namespace polyinv

#endif
