#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

namespace qca {

// Compressed length is the observable of the complexity pipeline, so the
// compressor configuration is part of the contract: zlib (DEFLATE) at level 9,
// default window and strategy. Golden tests pin exact lengths.
inline constexpr int kCompressionLevel = 9;

inline std::size_t compress_len(std::string_view s) {
    uLong bound = compressBound(static_cast<uLong>(s.size()));
    thread_local std::vector<unsigned char> buf;
    if (buf.size() < bound) buf.resize(bound);
    uLongf out = static_cast<uLongf>(buf.size());
    const int rc = compress2(buf.data(), &out, reinterpret_cast<const Bytef*>(s.data()),
                             static_cast<uLong>(s.size()), kCompressionLevel);
    if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed");
    return static_cast<std::size_t>(out);
}

} // namespace qca
