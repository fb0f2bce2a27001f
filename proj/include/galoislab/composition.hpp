#ifndef GALOISLAB_COMPOSITION_HPP
#define GALOISLAB_COMPOSITION_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace galoislab {
namespace qcombi {

// Ordered tuple (k_1, ..., k_r) of nonnegative integers. The number of
// parts r is the tuple length; r >= 1 is required.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<std::uint32_t> parts) : parts_(parts) { validate(); }
    explicit Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::uint32_t operator[](std::size_t i) const { return parts_[i]; }

    std::uint64_t sum() const {
        std::uint64_t s = 0;
        for (auto p : parts_) s += p;
        return s;
    }

    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts_ < b.parts_;
    }

private:
    void validate() const;
    std::vector<std::uint32_t> parts_;
};

// Weakly decreasing sequence of nonnegative integers.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<std::uint32_t> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    void validate() const;
    std::vector<std::uint32_t> parts_;
};

// Calls fn(parts) for every composition of n into exactly r parts, in
// lexicographic order. fn receives a reused buffer; copy to keep. r >= 1.
template <typename Fn>
void for_each_composition(std::uint32_t n, std::uint32_t r, Fn&& fn) {
    std::vector<std::uint32_t> parts(r, 0);
    if (n == 0) {
        fn(static_cast<const std::vector<std::uint32_t>&>(parts));
        return;
    }
    parts[r - 1] = n; // lexicographically first: everything in the last part
    for (;;) {
        fn(static_cast<const std::vector<std::uint32_t>&>(parts));
        std::size_t j = r - 1;
        while (parts[j] == 0) --j;
        if (j == 0) return; // (n, 0, ..., 0) is the last composition
        // Successor: move one unit left of position j, dump the rest into the tail.
        const std::uint32_t moved = parts[j];
        parts[j] = 0;
        parts[j - 1] += 1;
        parts[r - 1] = moved - 1;
    }
}

// Number of compositions of n into exactly r parts, as a double-checkable
// count: C(n+r-1, r-1). Returns UINT64_MAX on overflow.
std::uint64_t composition_count(std::uint32_t n, std::uint32_t r);

} // namespace qcombi
} // namespace galoislab

#endif
