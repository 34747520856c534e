#include "kleshchev/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <sstream>

namespace kleshchev {

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1)
    throw std::runtime_error("sha256 computation failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 0xf];
  }
  return out;
}

CacheKey CacheKey::make(const Multicharge& charge, int n, std::string_view engine_version) {
  std::ostringstream material;
  material << "kleshchev-matrix|" << engine_version << '|' << charge.e() << '|';
  for (int g : charge.gamma()) material << g << ',';
  material << '|' << to_string(charge.direction()) << '|' << n;
  return CacheKey{sha256_hex(material.str())};
}

namespace {
std::filesystem::path entry_path(const std::filesystem::path& dir, const CacheKey& key) {
  return dir / (key.digest + ".matrix");
}
}  // namespace

void cache_store(const std::filesystem::path& dir, const CacheKey& key, std::string_view payload) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir.string() + ": " + ec.message());
  const auto final_path = entry_path(dir, key);
  auto tmp_path = final_path;
  tmp_path += ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp_path.string());
    out << "sha256 " << sha256_hex(payload) << '\n';
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw std::runtime_error("short write on cache entry " + tmp_path.string());
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) throw std::runtime_error("cannot publish cache entry " + final_path.string() + ": " + ec.message());
}

std::optional<std::string> cache_load(const std::filesystem::path& dir, const CacheKey& key) {
  const auto path = entry_path(dir, key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header.rfind("sha256 ", 0) != 0)
    throw CacheCorruption("cache entry " + path.string() + " has no digest header");
  std::ostringstream body;
  body << in.rdbuf();
  std::string payload = body.str();
  if (header.substr(7) != sha256_hex(payload))
    throw CacheCorruption("cache entry " + path.string() + " fails its digest check");
  return payload;
}

}  // namespace kleshchev
