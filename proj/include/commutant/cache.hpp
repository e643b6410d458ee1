#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <thread>

#include "commutant/serialize.hpp"

namespace commutant {

/// Persistent store of computed degree bases keyed by the content hash of
/// the canonical chain serialization, so a textually reordered but
/// equivalent chain file still hits. A corrupted or version-mismatched
/// payload triggers recomputation with a warning, never a wrong answer.
class BasisCache {
public:
  using Warn = std::function<void(const std::string&)>;

  explicit BasisCache(std::filesystem::path dir, Warn warn = {})
      : dir_(std::move(dir)), warn_(std::move(warn)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_))
      throw ParseError("cache-dir", "cannot create cache directory " +
                                        dir_.string());
  }

  std::optional<DegreeBasis> load(const ChainSpec& chain, int degree) {
    auto path = entry_path(chain, degree);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    try {
      DegreeBasis basis = parse_degree_basis(text, chain);
      if (basis.degree != degree)
        throw ParseError("basis-corrupt", "degree mismatch");
      ++hits_;
      return basis;
    } catch (const ParseError& pe) {
      if (warn_)
        warn_("cache entry " + path.string() + " rejected (" + pe.code() +
              "); recomputing");
      return std::nullopt;
    }
  }

  void store(const ChainSpec& chain, const DegreeBasis& basis) {
    auto path = entry_path(chain, basis.degree);
    std::filesystem::path lock = path;
    lock += ".lock";
    // one writer per entry via exclusive-create; losers wait briefly (the
    // winner writes the same canonical bytes anyway)
    std::string lockname = lock.string();
    FILE* f = fopen(lockname.c_str(), "wx");
    if (!f) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        if (!std::filesystem::exists(lock)) break;
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
      }
      if (std::filesystem::exists(path)) return;
      // stale lock or writer died; write anyway
    }
    {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      out << serialize_degree_basis(basis, chain);
      if (!out)
        warn_ ? warn_("cache write failed for " + path.string()) : void();
    }
    if (f) fclose(f);
    std::error_code ec;
    std::filesystem::remove(lock, ec);
  }

  std::filesystem::path entry_path(const ChainSpec& chain, int degree) const {
    return dir_ / (hash_hex(chain_content_hash(chain)) + "-d" +
                   std::to_string(degree) + "-v" +
                   std::to_string(kBasisFormatVersion) + ".basis");
  }

  std::size_t hits() const { return hits_; }

private:
  std::filesystem::path dir_;
  Warn warn_;
  std::size_t hits_ = 0;
};

}  // namespace commutant
