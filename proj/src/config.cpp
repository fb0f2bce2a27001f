#include "galoislab/config.hpp"

#include <atomic>
#include <cstdlib>

namespace galoislab {

namespace {

constexpr std::uint64_t k_default_max_cells = 10'000'000;

std::uint64_t initial_cap() {
    const char* env = std::getenv("GALOIS_LAB_MAX_CELLS");
    if (env == nullptr) return k_default_max_cells;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0) return k_default_max_cells;
    return parsed;
}

std::atomic<std::uint64_t>& cap_storage() {
    static std::atomic<std::uint64_t> cap{initial_cap()};
    return cap;
}

} // namespace

std::uint64_t max_cells() { return cap_storage().load(); }

void set_max_cells(std::uint64_t cap) {
    cap_storage().store(cap == 0 ? k_default_max_cells : cap);
}

} // namespace galoislab
