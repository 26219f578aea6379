#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace codecid {

using ByteVec = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

// Packets enter the numeric feature extractors as real series in [0, 255].
inline std::vector<double> to_real_series(ByteSpan bytes) {
    std::vector<double> out(bytes.size());
    for (size_t i = 0; i < bytes.size(); ++i) out[i] = static_cast<double>(bytes[i]);
    return out;
}

} // namespace codecid
