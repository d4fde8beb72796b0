#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>
#include <thread>

#include "fiblucas/catalog.hpp"
#include "fiblucas/oeis.hpp"

using namespace fiblucas;
namespace fs = std::filesystem;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("fiblucas_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

// Minimal stand-in for the OEIS b-file endpoint.
class FakeOeis {
 public:
  FakeOeis() {
    server_.Get(R"(/prefix/(A\d{6})/b(\d{6})\.txt)", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits_;
      const std::string acc = req.matches[1];
      if (acc == "A000045") {
        res.set_content("# Fibonacci\r\n0 0\r\n1 1\r\n2 1\r\n3 2\r\n  4 3  \r\n5 5\r\n6 8\r\n7 13\r\n8 21\r\n9 34\r\n10 55\r\n",
                        "text/plain");
      } else if (acc == "A000032") {
        res.set_content("0 2\n1 1\n2 3\n3 4\n4 7\n5 11\n6 18\n7 29\n8 47\n", "text/plain");
      } else if (acc == "A123456") {
        res.set_content("0 1\n1 2\nbogus line\n", "text/plain");
      } else {
        res.status = 404;
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeOeis() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/prefix/"; }
  int hits() const { return hits_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
};

}  // namespace

TEST_CASE("emit_sequence examples") {
  CHECK(emit_sequence({SequenceKind::det, 2}, 3) == big({6, 348, 23656}));
  CHECK(emit_sequence({SequenceKind::trace, 5}, 2) == big({27, 18929}));
  CHECK(emit_sequence({SequenceKind::lambda2, 1}, 4) == big({3, 15, 103, 712}));
  CHECK(emit_sequence({SequenceKind::kfib, 3}, 5) == big({0, 1, 3, 10, 33}));
  CHECK(emit_sequence({SequenceKind::klucas, 2}, 8) == big({2, 2, 6, 14, 34, 82, 198, 478}));
  CHECK_THROWS_AS(emit_sequence({SequenceKind::det, 2}, 0), InvalidParameter);
  CHECK_THROWS_AS(emit_sequence({SequenceKind::det, 0}, 2), InvalidParameter);
  CHECK_THROWS_AS(sequence_term({SequenceKind::trace, 1}, 0), InvalidParameter);
}

TEST_CASE("sequence kinds parse") {
  CHECK(parse_kind("fib") == SequenceKind::kfib);
  CHECK(parse_kind("klucas") == SequenceKind::klucas);
  CHECK(parse_kind("lambda2") == SequenceKind::lambda2);
  CHECK_FALSE(parse_kind("eigs").has_value());
  for (auto k : {SequenceKind::kfib, SequenceKind::klucas, SequenceKind::det, SequenceKind::trace,
                 SequenceKind::lambda2}) {
    CHECK(parse_kind(to_string(k)) == k);
  }
}

TEST_CASE("bundled fixtures match the generated sequences") {
  for (const auto& acc : known_accessions()) {
    CAPTURE(acc);
    const auto fx = load_fixture(bundled_fixture_dir(), acc);
    REQUIRE(fx.has_value());
    CHECK(fx->terms.size() >= 20);
    const MatchReport r = check_fixture(*oeis_counterpart(acc), *fx);
    CHECK(r.matched());
    CHECK(r.compared == fx->terms.size());
  }
}

TEST_CASE("bundled fixtures start with the published listings") {
  const std::vector<std::pair<std::string, std::vector<BigInt>>> listings{
      {"A000045", big({0, 1, 1, 2, 3, 5, 8})},
      {"A000129", big({0, 1, 2, 5, 12, 29})},
      {"A006190", big({0, 1, 3, 10, 33, 109})},
      {"A000032", big({2, 1, 3, 4, 7, 11, 18, 29})},
      {"A002203", big({2, 2, 6, 14, 34, 82, 198, 478})},
      {"A006497", big({2, 3, 11, 36, 119, 393, 1298, 4287})},
  };
  for (const auto& [acc, prefix] : listings) {
    const auto fx = load_fixture(bundled_fixture_dir(), acc);
    REQUIRE(fx.has_value());
    CHECK(fx->offset == 0);
    CHECK(std::vector<BigInt>(fx->terms.begin(), fx->terms.begin() + static_cast<long>(prefix.size())) == prefix);
  }
}

TEST_CASE("check_fixture reports the first mismatch at the fixture's index") {
  SequenceFixture det2{"det-k2", big({6, 348, 23657, 1607504}), 1};
  const MatchReport r = check_fixture({SequenceKind::det, 2}, det2);
  CHECK_FALSE(r.matched());
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->index == 3);
  CHECK(r.first_mismatch->expected == 23657);
  CHECK(r.first_mismatch->actual == 23656);

  det2.terms[2] = 23656;
  CHECK(check_fixture({SequenceKind::det, 2}, det2).matched());
  CHECK(check_fixture({SequenceKind::det, 2}, det2, 2).compared == 2);

  // Offset 0 is outside the det sequence.
  const SequenceFixture early{"x", big({1}), 0};
  CHECK_FALSE(check_fixture({SequenceKind::det, 2}, early).matched());
}

TEST_CASE("b-file parser tolerates comments, whitespace and CRLF") {
  const auto fx = parse_bfile("# header\r\n\r\n  5 8\t\r\n6 13\n# mid comment\n7   21  \n", "A000045");
  CHECK(fx.offset == 5);
  CHECK(fx.terms == big({8, 13, 21}));
  CHECK(parse_bfile("-1 1\n0 0\n1 1", "x").offset == -1);
  CHECK(parse_bfile("0 -7\n", "x").terms == big({-7}));
}

TEST_CASE("b-file parser errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_bfile(text, "x");
    } catch (const ParseError& e) {
      return e.line;
    }
    return std::size_t{999};
  };
  CHECK(line_of("0 1\n1 1\n2\n") == 3);
  CHECK(line_of("# c\n0 1\n1 x2\n") == 3);
  CHECK(line_of("0 1\n2 1\n") == 2);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("# only comments\n") == 0);
}

TEST_CASE("write_bfile output parses back to the same fixture") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> val(-1000000, 1000000), off(-5, 5), len(1, 30);
  for (int rep = 0; rep < 50; ++rep) {
    SequenceFixture fx{"A000001", {}, off(rng)};
    const long n = len(rng);
    for (long i = 0; i < n; ++i) fx.terms.push_back(BigInt(val(rng)) * BigInt(val(rng)) * BigInt(val(rng)));
    const auto back = parse_bfile(write_bfile(fx), fx.name);
    REQUIRE(back.offset == fx.offset);
    REQUIRE(back.terms == fx.terms);
  }
}

TEST_CASE("accession validation") {
  CHECK_NOTHROW(validate_accession("A000045"));
  CHECK_THROWS_AS(validate_accession("A00"), ParseError);
  CHECK_THROWS_AS(validate_accession("B000045"), ParseError);
  CHECK_THROWS_AS(validate_accession("A00004x"), ParseError);
  OeisConfig cfg{fresh_dir("validate"), "http://127.0.0.1:1", true};
  CHECK_THROWS_AS(fetch_oeis("A00", 5, cfg), ParseError);
}

TEST_CASE("offline fetch with a cold cache fails") {
  OeisConfig cfg{fresh_dir("offline"), "http://127.0.0.1:1", true};
  CHECK_THROWS_AS(fetch_oeis("A000045", 10, cfg), OfflineError);
}

TEST_CASE("fetch_oeis downloads, caches and serves from cache") {
  FakeOeis server;
  OeisConfig cfg{fresh_dir("fetch"), server.base_url(), false};

  const SequenceFixture fx = fetch_oeis("A000045", 10, cfg);
  CHECK(fx.terms == big({0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
  CHECK(server.hits() == 1);
  const fs::path cached = cache_path(cfg, "A000045");
  REQUIRE(fs::exists(cached));
  CHECK(cached.filename() == "A000045.bfile");
  const std::string first_bytes = slurp(cached);

  // Warm cache: no network, even when offline.
  cfg.offline = true;
  const SequenceFixture again = fetch_oeis("A000045", 0, cfg);
  CHECK(again.terms.size() == 11);
  CHECK(server.hits() == 1);

  // Re-downloading yields a byte-identical cache file.
  cfg.offline = false;
  fs::remove(cached);
  fetch_oeis("A000045", 3, cfg);
  CHECK(server.hits() == 2);
  CHECK(slurp(cached) == first_bytes);

  const SequenceFixture lucas = fetch_oeis("A000032", 8, cfg);
  CHECK(lucas.terms == big({2, 1, 3, 4, 7, 11, 18, 29}));
  CHECK(check_fixture(*oeis_counterpart("A000032"), lucas).matched());
}

TEST_CASE("fetch_oeis error paths") {
  FakeOeis server;
  OeisConfig cfg{fresh_dir("errors"), server.base_url(), false};
  CHECK_THROWS_AS(fetch_oeis("A999999", 5, cfg), NotFoundError);
  try {
    fetch_oeis("A123456", 5, cfg);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_FALSE(fs::exists(cache_path(cfg, "A123456")));
  CHECK_FALSE(fs::exists(cache_path(cfg, "A999999")));

  OeisConfig dead{fresh_dir("dead"), "http://127.0.0.1:1", false};
  CHECK_THROWS_AS(fetch_oeis("A000045", 5, dead), NetworkError);
}

TEST_CASE("concurrent fetches of one accession leave a valid cache") {
  FakeOeis server;
  const OeisConfig cfg{fresh_dir("concurrent"), server.base_url(), false};
  std::atomic<int> ok{0};
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([&] {
        if (fetch_oeis("A000045", 0, cfg).terms.size() == 11) ++ok;
      });
    }
  }
  CHECK(ok == 8);
  CHECK(parse_bfile(slurp(cache_path(cfg, "A000045")), "A000045").terms.size() == 11);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(cfg.cache_dir)) ++files;
  CHECK(files == 1);
}

TEST_CASE("configuration comes from the environment") {
  ::setenv("OEIS_CACHE_DIR", "/tmp/some/cache", 1);
  ::setenv("OEIS_BASE_URL", "http://example.invalid", 1);
  ::setenv("NO_NETWORK", "1", 1);
  OeisConfig c = OeisConfig::from_environment();
  CHECK(c.cache_dir == fs::path("/tmp/some/cache"));
  CHECK(c.base_url == "http://example.invalid");
  CHECK(c.offline);

  ::unsetenv("OEIS_CACHE_DIR");
  ::unsetenv("OEIS_BASE_URL");
  ::unsetenv("NO_NETWORK");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  c = OeisConfig::from_environment();
  CHECK(c.cache_dir == fs::path("/tmp/xdg/fiblucas-matrix/oeis"));
  CHECK(c.base_url == kDefaultOeisBaseUrl);
  CHECK_FALSE(c.offline);
  ::unsetenv("XDG_CACHE_HOME");
}
