#pragma once

#include <string>

#include "lfoc/cat.hpp"

namespace lfoc::detail {

// Hashable encoding of a morphism's component maps. Boundaries are implied
// by the container it is used in.
using MapKey = std::u32string;

inline MapKey map_key(const Morphism& m) {
    MapKey key;
    key.reserve(m.vertex_map().size() + m.edge_map().size());
    for (auto v : m.vertex_map()) {
        key.push_back(static_cast<char32_t>(v));
    }
    for (auto e : m.edge_map()) {
        key.push_back(static_cast<char32_t>(e));
    }
    return key;
}

// Printable form of the same maps, used inside canonical keys.
inline std::string maps_text(const Morphism& m) {
    std::string out = "[";
    for (auto v : m.vertex_map()) {
        out += std::to_string(v) + ",";
    }
    out += "|";
    for (auto e : m.edge_map()) {
        out += std::to_string(e) + ",";
    }
    return out + "]";
}

} // namespace lfoc::detail
