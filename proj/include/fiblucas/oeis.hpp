#pragma once

// OEIS b-file retrieval with an on-disk cache.
//
// Environment:
//   OEIS_CACHE_DIR  cache directory (default $XDG_CACHE_HOME or ~/.cache,
//                   then fiblucas-matrix/oeis)
//   OEIS_BASE_URL   server root, default https://oeis.org; the b-file for
//                   A000045 is fetched from <base>/A000045/b000045.txt
//   NO_NETWORK=1    never touch the network

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fiblucas/catalog.hpp"

namespace fiblucas {

struct OfflineError : Error {
  using Error::Error;
};

struct NotFoundError : Error {
  using Error::Error;
};

struct NetworkError : Error {
  using Error::Error;
};

inline constexpr std::string_view kDefaultOeisBaseUrl = "https://oeis.org";

struct OeisConfig {
  std::filesystem::path cache_dir;
  std::string base_url{kDefaultOeisBaseUrl};
  bool offline = false;

  static OeisConfig from_environment();
};

/// Throws ParseError unless the accession is 'A' followed by six digits.
void validate_accession(std::string_view accession);

/// <cache_dir>/<accession>.bfile
std::filesystem::path cache_path(const OeisConfig& config, std::string_view accession);

/// Returns at most max_terms terms (0 means all). A warm cache never touches
/// the network. Downloads are stored canonically via write-to-temp-then-rename.
SequenceFixture fetch_oeis(std::string_view accession, std::size_t max_terms, const OeisConfig& config);

/// Fixtures shipped with the source tree.
std::filesystem::path bundled_fixture_dir();

/// Reads <dir>/<accession>.bfile if present.
std::optional<SequenceFixture> load_fixture(const std::filesystem::path& dir, std::string_view accession);

SequenceFixture truncate(SequenceFixture fx, std::size_t max_terms);

}  // namespace fiblucas
