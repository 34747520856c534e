#pragma once

// Content-addressed on-disk cache for computed matrices.

#include "kleshchev/combinatorics.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kleshchev {

inline constexpr std::string_view kEngineVersion = "1.0.0";

class CacheCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data);

struct CacheKey {
  std::string digest;

  /// Digest of (engine version, e, charge, convention, n).
  static CacheKey make(const Multicharge& charge, int n,
                       std::string_view engine_version = kEngineVersion);
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

/// Writes the payload together with its SHA-256 digest. Throws
/// std::runtime_error on I/O failure.
void cache_store(const std::filesystem::path& dir, const CacheKey& key, std::string_view payload);

/// Returns nullopt on a miss. Throws CacheCorruption if the stored digest does
/// not match the payload.
std::optional<std::string> cache_load(const std::filesystem::path& dir, const CacheKey& key);

}  // namespace kleshchev
