#pragma once

#include <string>
#include <string_view>

namespace artin {

// Hex-encoded SHA-256, used to fingerprint configurations.
std::string sha256_hex(std::string_view data);

}  // namespace artin
