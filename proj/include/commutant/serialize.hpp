#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "commutant/chain_io.hpp"
#include "commutant/invariants.hpp"

namespace commutant {

inline constexpr int kBasisFormatVersion = 1;

/// FNV-1a over the canonical chain serialization; cache keying only.
inline std::uint64_t chain_content_hash(const ChainSpec& chain) {
  std::string doc = serialize_chain(chain);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : doc) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int k = 15; k >= 0; --k) {
    s[k] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

/// Canonical text serialization of a DegreeBasis: header (format version,
/// chain hash, degree, dimension) followed by one canonical polynomial
/// rendering per line. Byte-stable; also the cache payload format.
inline std::string serialize_degree_basis(const DegreeBasis& basis,
                                          const ChainSpec& chain) {
  std::ostringstream out;
  out << "commutant-basis v" << kBasisFormatVersion << "\n";
  out << "chain " << hash_hex(chain_content_hash(chain)) << "\n";
  out << "degree " << basis.degree << "\n";
  out << "dimension " << basis.rows.size() << "\n";
  for (const auto& row : basis.rows)
    out << row.str(chain.algebra().generators()) << "\n";
  return out.str();
}

/// Parses serialize_degree_basis output, validating the header against the
/// chain. Throws ParseError on any mismatch or corruption.
inline DegreeBasis parse_degree_basis(const std::string& text,
                                      const ChainSpec& chain) {
  std::istringstream in(text);
  std::string line;
  auto next = [&](const char* what) {
    if (!std::getline(in, line))
      throw ParseError("basis-corrupt", std::string("missing ") + what);
    return line;
  };
  if (next("version header") !=
      "commutant-basis v" + std::to_string(kBasisFormatVersion))
    throw ParseError("basis-version", "format version mismatch");
  if (next("chain hash") != "chain " + hash_hex(chain_content_hash(chain)))
    throw ParseError("basis-chain-mismatch", "chain hash mismatch");

  DegreeBasis basis;
  {
    std::string l = next("degree line");
    if (l.rfind("degree ", 0) != 0)
      throw ParseError("basis-corrupt", "bad degree line");
    basis.degree = std::stoi(l.substr(7));
  }
  std::size_t dim = 0;
  {
    std::string l = next("dimension line");
    if (l.rfind("dimension ", 0) != 0)
      throw ParseError("basis-corrupt", "bad dimension line");
    dim = std::stoul(l.substr(10));
  }
  for (std::size_t r = 0; r < dim; ++r) {
    std::string l = next("basis row");
    basis.rows.push_back(
        Polynomial::parse(l, chain.algebra().generators()));
  }
  for (std::size_t r = 0; r < basis.rows.size(); ++r)
    basis.bidegree_split[bidegree_components(basis.rows[r], chain)]
        .push_back(r);
  return basis;
}

}  // namespace commutant
