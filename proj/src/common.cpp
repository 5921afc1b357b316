#include "nepsent/common.hpp"

#include <cstdio>
#include <fstream>

namespace nepsent {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t state) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        state ^= bytes[i];
        state *= 0x100000001B3ULL;
    }
    return state;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file for hashing: " + path);
    std::uint64_t state = 0xCBF29CE484222325ULL;
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        state = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), state);
    }
    return state;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(value));
    return std::string(buf);
}

}  // namespace nepsent
