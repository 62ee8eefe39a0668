#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "errors.hpp"
#include "serialize.hpp"

namespace hyperbranch {

struct CacheKey
{
  std::string group;
  int n = 0;
  std::string kind;
  std::string variant;

  std::string filename() const
  {
    std::string name = group + "-" + std::to_string(n) + "-" + kind;
    if (!variant.empty())
      name += "-" + variant;
    return name + ".json";
  }

  bool matches(TableDocument const& d) const
  {
    return d.group == group && d.n == n && d.kind == kind && d.variant == variant;
  }
};

inline constexpr char const* cache_env_var = "HYPERBRANCH_CACHE_DIR";

/// Directory of `{group}-{n}-{kind}.json` documents. Unreadable or
/// inconsistent files count as misses; write failures only warn.
class TableCache
{
public:
  TableCache(std::filesystem::path dir, std::ostream* warnings = nullptr)
  : dir_(std::move(dir)), warnings_(warnings)
  {}

  std::filesystem::path const& directory() const { return dir_; }

  std::optional<TableDocument> lookup(CacheKey const& key) const
  {
    auto const path = dir_ / key.filename();
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
      return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      warn("cannot read cache file " + path.string());
      return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto doc = parse_document(buf.str());
      if (!key.matches(doc)) {
        warn("cache file " + path.string() + " holds a different table; ignoring");
        return std::nullopt;
      }
      return doc;
    } catch (DomainError const& e) {
      warn("corrupted cache file " + path.string() + " (" + e.what() + "); recomputing");
      return std::nullopt;
    }
  }

  /// Writes to a temporary file in the cache directory, then renames it
  /// over the target so readers never see a partial document.
  bool store(CacheKey const& key, TableDocument const& doc) const
  {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    auto const target = dir_ / key.filename();
    std::random_device rd;
    auto const tmp = dir_ / ("." + key.filename() + "." + std::to_string(rd()) + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        warn("cache directory " + dir_.string() + " is not writable; continuing uncached");
        return false;
      }
      out << to_json(doc).dump() << '\n';
      if (!out.flush()) {
        warn("failed writing cache file " + tmp.string());
        std::filesystem::remove(tmp, ec);
        return false;
      }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      warn("failed to install cache file " + target.string() + ": " + ec.message());
      std::filesystem::remove(tmp, ec);
      return false;
    }
    return true;
  }

private:
  void warn(std::string const& msg) const
  {
    if (warnings_)
      *warnings_ << "warning: " << msg << '\n';
  }

  std::filesystem::path dir_;
  std::ostream* warnings_;
};

} // namespace hyperbranch
