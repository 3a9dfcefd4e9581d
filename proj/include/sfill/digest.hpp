#pragma once

#include <string>

namespace sfill {

// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace sfill
