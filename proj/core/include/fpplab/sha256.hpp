#pragma once

#include <string>

namespace fpplab::io {

// Lowercase hex SHA-256 digest of the bytes.
std::string sha256_hex(const std::string& bytes);

// Digest of a file's contents; throws std::runtime_error if unreadable.
std::string sha256_file_hex(const std::string& path);

}  // namespace fpplab::io
