#ifndef FLAGCERT_CACHE_HPP
#define FLAGCERT_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

namespace flagcert {

// Cache directory from FLAGCERT_CACHE_DIR; empty when unset.
std::string cache_directory();

// FNV-1a, used both for cache stamps and certificate basis hashes.
uint64_t fnv1a(const std::string& text);
std::string hex64(uint64_t value);

// Line-oriented cache files: first line "flagcert-cache v1 <stamp>", then
// payload lines. A stamp mismatch is treated as a miss.
std::optional<std::vector<std::string>> cache_load(const std::string& name,
                                                   const std::string& stamp);
void cache_store(const std::string& name, const std::string& stamp,
                 const std::vector<std::string>& lines);

}  // namespace flagcert

#endif
