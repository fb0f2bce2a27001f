#include "galoislab/composition.hpp"

#include <limits>

#include "galoislab/errors.hpp"

namespace galoislab {
namespace qcombi {

void Composition::validate() const {
    if (parts_.empty()) throw invalid_input("composition needs at least one part");
}

void Partition::validate() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1])
            throw invalid_input("partition parts must be weakly decreasing");
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::uint64_t composition_count(std::uint32_t n, std::uint32_t r) {
    // C(n+r-1, r-1) with saturation.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    const std::uint64_t k = r - 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n + i;
        if (result > limit / num) return limit;
        result = result * num / i; // exact: running value is C(n+i, i)
    }
    return result;
}

} // namespace qcombi
} // namespace galoislab
