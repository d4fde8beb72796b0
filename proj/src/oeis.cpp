#include "fiblucas/oeis.hpp"

#include <httplib.h>

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace fiblucas {
namespace fs = std::filesystem;

namespace {

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return (v && *v) ? v : nullptr;
}

fs::path default_cache_dir() {
  fs::path root;
  if (const char* xdg = env("XDG_CACHE_HOME")) {
    root = xdg;
  } else if (const char* home = env("HOME")) {
    root = fs::path(home) / ".cache";
  } else {
    root = fs::temp_directory_path();
  }
  return root / "fiblucas-matrix" / "oeis";
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomically(const fs::path& target, const std::string& contents) {
  fs::create_directories(target.parent_path());
  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << '.' << counter++;
  const fs::path tmp = target.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

// Splits "scheme://host[:port][/prefix]" into the client address and path prefix.
std::pair<std::string, std::string> split_base_url(std::string_view base) {
  while (!base.empty() && base.back() == '/') base.remove_suffix(1);
  const auto scheme_end = base.find("://");
  const auto host_start = scheme_end == std::string_view::npos ? 0 : scheme_end + 3;
  const auto path_start = base.find('/', host_start);
  if (path_start == std::string_view::npos) return {std::string(base), ""};
  return {std::string(base.substr(0, path_start)), std::string(base.substr(path_start))};
}

std::string download(const OeisConfig& config, std::string_view accession) {
  const auto [address, prefix] = split_base_url(config.base_url);
  const std::string path =
      prefix + "/" + std::string(accession) + "/b" + std::string(accession.substr(1)) + ".txt";

  httplib::Client client(address);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(path);
  if (!res) {
    throw NetworkError("GET " + address + path + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 404) throw NotFoundError(std::string(accession) + " not found at " + address + path);
  if (res->status != 200) {
    throw NetworkError("GET " + address + path + " returned HTTP " + std::to_string(res->status));
  }
  return res->body;
}

}  // namespace

OeisConfig OeisConfig::from_environment() {
  OeisConfig c;
  c.cache_dir = env("OEIS_CACHE_DIR") ? fs::path(env("OEIS_CACHE_DIR")) : default_cache_dir();
  if (const char* base = env("OEIS_BASE_URL")) c.base_url = base;
  if (const char* nn = env("NO_NETWORK")) c.offline = std::string_view(nn) == "1";
  return c;
}

void validate_accession(std::string_view accession) {
  bool ok = accession.size() == 7 && accession[0] == 'A';
  for (std::size_t i = 1; ok && i < accession.size(); ++i) {
    ok = std::isdigit(static_cast<unsigned char>(accession[i])) != 0;
  }
  if (!ok) throw ParseError("invalid accession '" + std::string(accession) + "', expected A followed by 6 digits", 0);
}

fs::path cache_path(const OeisConfig& config, std::string_view accession) {
  return config.cache_dir / (std::string(accession) + ".bfile");
}

SequenceFixture truncate(SequenceFixture fx, std::size_t max_terms) {
  if (max_terms != 0 && fx.terms.size() > max_terms) fx.terms.resize(max_terms);
  return fx;
}

SequenceFixture fetch_oeis(std::string_view accession, std::size_t max_terms, const OeisConfig& config) {
  validate_accession(accession);
  const fs::path cached = cache_path(config, accession);
  if (fs::exists(cached)) {
    return truncate(parse_bfile(read_file(cached), std::string(accession)), max_terms);
  }
  if (config.offline) {
    throw OfflineError(std::string(accession) + " is not cached in " + config.cache_dir.string() +
                       " and network access is disabled");
  }
  SequenceFixture fx = parse_bfile(download(config, accession), std::string(accession));
  write_atomically(cached, write_bfile(fx));
  return truncate(std::move(fx), max_terms);
}

fs::path bundled_fixture_dir() { return FIBLUCAS_FIXTURE_DIR; }

std::optional<SequenceFixture> load_fixture(const fs::path& dir, std::string_view accession) {
  validate_accession(accession);
  const fs::path p = dir / (std::string(accession) + ".bfile");
  if (!fs::exists(p)) return std::nullopt;
  return parse_bfile(read_file(p), std::string(accession));
}

}  // namespace fiblucas
