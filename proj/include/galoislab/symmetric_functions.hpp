#ifndef GALOISLAB_SYMMETRIC_FUNCTIONS_HPP
#define GALOISLAB_SYMMETRIC_FUNCTIONS_HPP

#include "galoislab/big_integer.hpp"
#include "galoislab/composition.hpp"

namespace galoislab {
namespace exact {

// e_s(k_1, ..., k_r); zero when s exceeds the number of variables.
BigInteger elementary_symmetric(unsigned s, const qcombi::Composition& k);

// p_s(k_1, ..., k_r) = sum k_i^s, with p_0 = r.
BigInteger power_sum(unsigned s, const qcombi::Composition& k);

} // namespace exact
} // namespace galoislab

#endif
