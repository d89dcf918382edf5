#pragma once

#include <string>
#include <string_view>

namespace hq {

// Lowercase hex SHA-256 digest. Self-contained, used for config hashes and
// artifact checksums in the run manifest.
std::string sha256_hex(std::string_view data);

}  // namespace hq
