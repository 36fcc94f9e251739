#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "wk/memo_table.hpp"

namespace wk::cli {

inline constexpr std::string_view kCacheHeader = "WKCACHE v1";

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes every memo entry as "g;d1,d2,...;num/den", sorted by genus, then
// point count, then exponents. Written to a temp file and renamed, so a
// crash never leaves a torn cache. Saving a loaded file reproduces it
// byte for byte.
void cache_save(const MemoTable& table, const std::filesystem::path& path);

// Loads records into the table. Throws CacheError, naming the line, on a
// version mismatch or any record that is not a canonical stable
// dimension-valid spec with a reduced positive rational.
std::size_t cache_load(MemoTable& table, const std::filesystem::path& path);

}  // namespace wk::cli
