#include "galoislab/symmetric_functions.hpp"

#include <vector>

namespace galoislab {
namespace exact {

BigInteger elementary_symmetric(unsigned s, const qcombi::Composition& k) {
    const auto& parts = k.parts();
    if (s > parts.size()) return BigInteger(0);
    // Coefficients of prod (1 + k_i x), truncated at degree s.
    std::vector<BigInteger> e(s + 1);
    e[0] = BigInteger(1);
    std::size_t filled = 0;
    for (auto p : parts) {
        const BigInteger v(static_cast<unsigned long>(p));
        if (filled < s) ++filled;
        for (std::size_t d = filled; d >= 1; --d) e[d].add_mul(e[d - 1], v);
    }
    return e[s];
}

BigInteger power_sum(unsigned s, const qcombi::Composition& k) {
    BigInteger total(0);
    for (auto p : k.parts())
        total += BigInteger::pow(BigInteger(static_cast<unsigned long>(p)), s);
    return total;
}

} // namespace exact
} // namespace galoislab
