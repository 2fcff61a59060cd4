#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weelcp {

/// Per-component bit accounting for an index structure.
struct SpaceReport {
    struct Component {
        std::string name;
        std::uint64_t bits = 0;
    };

    std::vector<Component> components;
    std::uint64_t n = 0;  // text length, for normalization

    std::uint64_t total_bits() const {
        std::uint64_t t = 0;
        for (const auto& c : components) t += c.bits;
        return t;
    }

    double bits_per_symbol() const {
        return n == 0 ? 0.0 : static_cast<double>(total_bits()) / static_cast<double>(n);
    }

    void add(std::string name, std::uint64_t bits) {
        components.push_back({std::move(name), bits});
    }
};

}  // namespace weelcp
