#ifndef CIRES_HASH_HPP
#define CIRES_HASH_HPP

#include <string>
#include <string_view>

namespace cires {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

}  // namespace cires

#endif
