#include "flagcert/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace flagcert {

std::string cache_directory() {
  const char* dir = std::getenv("FLAGCERT_CACHE_DIR");
  return dir == nullptr ? std::string() : std::string(dir);
}

uint64_t fnv1a(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::optional<std::vector<std::string>> cache_load(const std::string& name,
                                                   const std::string& stamp) {
  std::string dir = cache_directory();
  if (dir.empty()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / name);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  if (header != "flagcert-cache v1 " + stamp) return std::nullopt;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

void cache_store(const std::string& name, const std::string& stamp,
                 const std::vector<std::string>& lines) {
  std::string dir = cache_directory();
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::ofstream out(std::filesystem::path(dir) / name);
  if (!out) return;
  out << "flagcert-cache v1 " << stamp << "\n";
  for (const std::string& line : lines) out << line << "\n";
}

}  // namespace flagcert
