#include "fiblucas/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "fiblucas/catalog.hpp"
#include "fiblucas/family.hpp"
#include "fiblucas/oeis.hpp"
#include "fiblucas/sequence.hpp"
#include "fiblucas/verify.hpp"

namespace fiblucas::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum class Format { plain, json, csv, markdown };

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}, {"markdown", Format::markdown}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(what + ": '" + std::string(s) + "' is not an integer");
  }
  return v;
}

// "a..b", inclusive, a <= b, a >= 1.
IndexRange parse_range(const std::string& s, const std::string& what) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError(what + ": expected a..b, got '" + s + "'");
  IndexRange r{parse_int(std::string_view(s).substr(0, dots), what),
               parse_int(std::string_view(s).substr(dots + 2), what)};
  if (r.lo > r.hi) throw UsageError(what + ": inverted range '" + s + "'");
  if (r.lo < 1) throw UsageError(what + ": values must be >= 1");
  return r;
}

std::string range_str(IndexRange r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

template <class T>
json matrix_json(const Matrix<T>& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.order(); ++i) {
    json row = json::array();
    for (const auto& x : a.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string coeff_list(const Polynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + p.coeffs()[i].get_str();
  return s + "]";
}

void emit_pairs(std::ostream& out, Format fmt, const std::vector<std::pair<std::string, std::string>>& rows,
                const std::string& key_header, const std::string& value_header) {
  switch (fmt) {
    case Format::plain:
      for (const auto& [k, v] : rows) out << k << '=' << v << '\n';
      break;
    case Format::csv:
      out << key_header << ',' << value_header << '\n';
      for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
      break;
    case Format::markdown:
      out << "| " << key_header << " | " << value_header << " |\n|---|---|\n";
      for (const auto& [k, v] : rows) out << "| " << k << " | " << v << " |\n";
      break;
    case Format::json:
      break;
  }
}

// ---------------------------------------------------------------- seq

struct SeqArgs {
  std::string kind;
  std::int64_t k = 1;
  std::optional<std::int64_t> from;
  std::int64_t to = 0;
  std::string format = "plain";
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
  const auto kind = parse_kind(a.kind);
  if (!kind) throw UsageError("unknown sequence kind '" + a.kind + "'");
  if (a.k < 1) throw UsageError("--k must be >= 1");
  const std::int64_t from = a.from.value_or(first_index(*kind));
  if (from > a.to) throw UsageError("--from must not exceed --to");
  if (from < first_index(*kind)) {
    throw UsageError(to_string(*kind) + " starts at index " + std::to_string(first_index(*kind)));
  }
  const SequenceId id{*kind, a.k};
  const auto terms = emit_range(id, from, static_cast<std::size_t>(a.to - from + 1));

  switch (kFormats.at(a.format)) {
    case Format::plain:
      for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << terms[i].get_str();
      out << '\n';
      break;
    case Format::csv:
      out << "index,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i) out << from + static_cast<std::int64_t>(i) << ',' << terms[i].get_str() << '\n';
      break;
    case Format::markdown:
      out << "| index | value |\n|---|---|\n";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out << "| " << from + static_cast<std::int64_t>(i) << " | " << terms[i].get_str() << " |\n";
      }
      break;
    case Format::json: {
      json j{{"kind", to_string(*kind)}, {"k", a.k}, {"from", from}, {"to", a.to}, {"terms", json::array()}};
      for (std::size_t i = 0; i < terms.size(); ++i) {
        j["terms"].push_back({{"index", from + static_cast<std::int64_t>(i)}, {"value", terms[i].get_str()}});
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- invariants

struct InvariantArgs {
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::string what = "det,trace,eigs";
  std::string format = "plain";
};

int cmd_invariants(const InvariantArgs& a, std::ostream& out) {
  if (a.k < 1 || a.n < 1) throw UsageError("--k and --n must be >= 1");
  const FamilyParams p{a.k, a.n};

  std::vector<std::string> items;
  std::stringstream ss(a.what);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw UsageError("--what is empty");

  // Validate everything before computing anything.
  std::vector<std::optional<unsigned>> power_exp(items.size());
  static const std::set<std::string> kNames{"det", "trace", "eigs", "radius", "energy", "inverse", "charpoly", "matrix"};
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].rfind("power:", 0) == 0) {
      const auto m = parse_int(std::string_view(items[i]).substr(6), "power exponent");
      if (m < 0) throw UsageError("power exponent must be >= 0");
      power_exp[i] = static_cast<unsigned>(m);
    } else if (!kNames.contains(items[i])) {
      throw UsageError("unknown invariant '" + items[i] + "'");
    }
  }

  const SpectrumReport spec = spectrum(p);
  std::vector<std::pair<std::string, std::string>> rows;
  json j{{"k", a.k}, {"n", a.n}};

  auto add = [&](const std::string& name, const std::string& text, json value) {
    rows.emplace_back(name, text);
    j[name] = std::move(value);
  };

  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string& item = items[i];
    if (power_exp[i]) {
      const IntMatrix pw = closed_power(p, *power_exp[i]);
      add(item, format_matrix(pw), matrix_json(pw));
    } else if (item == "det") {
      const BigInt d = closed_det(p);
      add(item, d.get_str(), d.get_str());
    } else if (item == "trace") {
      const BigInt t = closed_trace(p);
      add(item, t.get_str(), t.get_str());
    } else if (item == "eigs") {
      std::string text = "(";
      json list = json::array();
      if (spec.mult1 > 0) {
        text += spec.lambda1.get_str() + "×" + std::to_string(spec.mult1) + ", ";
        list.push_back({{"value", spec.lambda1.get_str()}, {"multiplicity", spec.mult1}});
      }
      text += spec.lambda2.get_str() + "×" + std::to_string(spec.mult2) + ")";
      list.push_back({{"value", spec.lambda2.get_str()}, {"multiplicity", spec.mult2}});
      add(item, text, std::move(list));
    } else if (item == "radius") {
      add(item, spec.spectral_radius.get_str(), spec.spectral_radius.get_str());
    } else if (item == "energy") {
      add(item, spec.energy.get_str(), spec.energy.get_str());
    } else if (item == "inverse") {
      const RatMatrix inv = closed_inverse(p);
      add(item, format_matrix(inv), matrix_json(inv));
    } else if (item == "charpoly") {
      const Polynomial cp = closed_charpoly(p);
      json coeffs = json::array();
      for (const auto& c : cp.coeffs()) coeffs.push_back(c.get_str());
      add(item, coeff_list(cp), std::move(coeffs));
    } else if (item == "matrix") {
      const IntMatrix m = build_matrix(p);
      add(item, format_matrix(m), matrix_json(m));
    }
  }

  const Format fmt = kFormats.at(a.format);
  if (fmt == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    emit_pairs(out, fmt, rows, "invariant", "value");
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string k_range;
  std::string n_range;
  unsigned power_max = 6;
  std::string format = "plain";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const IndexRange kr = parse_range(a.k_range, "--k-range");
  const IndexRange nr = parse_range(a.n_range, "--n-range");
  const VerificationReport report = verify_grid(kr, nr, a.power_max);
  const auto first_fail = std::find_if(report.records.begin(), report.records.end(),
                                       [](const CheckRecord& r) { return r.status == CheckStatus::fail; });

  switch (kFormats.at(a.format)) {
    case Format::plain:
      out << "verified k=" << range_str(kr) << " n=" << range_str(nr) << " m=0.." << a.power_max << ": "
          << report.checks() << " checks, " << report.failures() << " failures\n";
      for (const auto& r : report.records) {
        if (r.status == CheckStatus::fail) {
          out << "FAIL k=" << r.k << " n=" << r.n << " " << r.check << ": " << r.witness << '\n';
        }
      }
      break;
    case Format::csv:
      out << "k,n,check,status,witness\n";
      for (const auto& r : report.records) {
        out << r.k << ',' << r.n << ',' << r.check << ',' << to_string(r.status) << ',' << csv_field(r.witness) << '\n';
      }
      break;
    case Format::markdown:
      out << "| k | n | check | status | witness |\n|---|---|---|---|---|\n";
      for (const auto& r : report.records) {
        out << "| " << r.k << " | " << r.n << " | " << r.check << " | " << to_string(r.status) << " | " << r.witness
            << " |\n";
      }
      break;
    case Format::json: {
      json j{{"k_range", range_str(kr)},
             {"n_range", range_str(nr)},
             {"power_max", a.power_max},
             {"checks", report.checks()},
             {"failures", report.failures()},
             {"records", json::array()}};
      if (first_fail != report.records.end()) {
        j["first_failure"] = {{"k", first_fail->k}, {"n", first_fail->n}, {"check", first_fail->check},
                              {"witness", first_fail->witness}};
      }
      for (const auto& r : report.records) {
        json rec{{"k", r.k}, {"n", r.n}, {"check", r.check}, {"status", to_string(r.status)}};
        if (!r.witness.empty()) rec["witness"] = r.witness;
        j["records"].push_back(std::move(rec));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return report.all_pass() ? kOk : kFailed;
}

// ---------------------------------------------------------------- tables

struct TableArgs {
  std::string which;
  std::string k_range;
  std::string n_range = "1..7";
  std::string format = "markdown";
};

int cmd_tables(const TableArgs& a, std::ostream& out) {
  const auto kind = parse_kind(a.which);
  if (!kind || first_index(*kind) != 1) throw UsageError("--which must be one of det, trace, lambda2");
  const IndexRange kr = parse_range(a.k_range, "--k-range");
  const IndexRange nr = parse_range(a.n_range, "--n-range");
  const auto count = static_cast<std::size_t>(nr.hi - nr.lo + 1);

  std::vector<std::pair<std::int64_t, std::vector<BigInt>>> rows;
  for (auto k = kr.lo; k <= kr.hi; ++k) rows.emplace_back(k, emit_range({*kind, k}, nr.lo, count));

  auto joined = [](const std::vector<BigInt>& terms, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? sep : "") + terms[i].get_str();
    return s;
  };
  static const std::map<SequenceKind, std::string> kTitles{
      {SequenceKind::det, "Sequence det(A_{k,n})"},
      {SequenceKind::trace, "Sequence Tr(A_{k,n})"},
      {SequenceKind::lambda2, "Sequence of lambda_2"}};

  switch (kFormats.at(a.format)) {
    case Format::plain:
      for (const auto& [k, terms] : rows) out << "k=" << k << ": " << joined(terms, ", ") << '\n';
      break;
    case Format::markdown:
      out << "| k | " << kTitles.at(*kind) << " |\n|---|---|\n";
      for (const auto& [k, terms] : rows) out << "| " << k << " | " << joined(terms, ", ") << ", ... |\n";
      break;
    case Format::csv:
      out << 'k';
      for (auto n = nr.lo; n <= nr.hi; ++n) out << ",n=" << n;
      out << '\n';
      for (const auto& [k, terms] : rows) out << k << ',' << joined(terms, ",") << '\n';
      break;
    case Format::json: {
      json j{{"which", to_string(*kind)}, {"k_range", range_str(kr)}, {"n_range", range_str(nr)}, {"rows", json::array()}};
      for (const auto& [k, terms] : rows) {
        json t = json::array();
        for (const auto& x : terms) t.push_back(x.get_str());
        j["rows"].push_back({{"k", k}, {"terms", std::move(t)}});
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- oeis

struct OeisArgs {
  std::string accession;
  std::size_t terms = 20;
  bool offline = false;
  std::string fixtures;  // empty: bundled directory
  bool no_bundled = false;
  std::string format = "plain";
};

int cmd_oeis(const OeisArgs& a, std::ostream& out, std::ostream& err) {
  try {
    validate_accession(a.accession);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (a.terms == 0) throw UsageError("--terms must be >= 1");

  OeisConfig config = OeisConfig::from_environment();
  config.offline = config.offline || a.offline;

  std::optional<SequenceFixture> fixture;
  std::string source;
  try {
    if (!a.no_bundled) {
      const fs::path dir = a.fixtures.empty() ? bundled_fixture_dir() : fs::path(a.fixtures);
      if ((fixture = load_fixture(dir, a.accession))) {
        *fixture = truncate(std::move(*fixture), a.terms);
        source = "bundled";
      }
    }
    if (!fixture) {
      source = fs::exists(cache_path(config, a.accession)) ? "cache" : "network";
      fixture = fetch_oeis(a.accession, a.terms, config);
    }
  } catch (const OfflineError& e) {
    err << "error: " << e.what() << '\n';
    return kUnavailable;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << '\n';
    return kUnavailable;
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << '\n';
    return kUnavailable;
  } catch (const ParseError& e) {
    err << "error: malformed b-file for " << a.accession << ": " << e.what() << '\n';
    return kFailed;
  }

  const auto counterpart = oeis_counterpart(a.accession);
  std::optional<MatchReport> report;
  if (counterpart) report = check_fixture(*counterpart, *fixture, a.terms);
  const bool ok = !report || report->matched();

  const std::string label =
      counterpart ? to_string(counterpart->kind) + " k=" + std::to_string(counterpart->k) : "no local counterpart";
  const Format fmt = kFormats.at(a.format);
  if (fmt == Format::json) {
    json j{{"accession", a.accession}, {"source", source}, {"offset", fixture->offset}, {"terms", json::array()}};
    for (const auto& t : fixture->terms) j["terms"].push_back(t.get_str());
    if (counterpart) {
      j["counterpart"] = {{"kind", to_string(counterpart->kind)}, {"k", counterpart->k}};
      j["compared"] = report->compared;
      j["match"] = report->matched();
      if (report->first_mismatch) {
        j["first_mismatch"] = {{"index", report->first_mismatch->index},
                               {"fixture", report->first_mismatch->expected.get_str()},
                               {"generated", report->first_mismatch->actual.get_str()}};
      }
    }
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows{
        {"accession", a.accession}, {"source", source}, {"counterpart", label}};
    if (report) {
      rows.emplace_back("compared", std::to_string(report->compared));
      rows.emplace_back("status", report->matched() ? "match" : "mismatch");
      if (report->first_mismatch) {
        const auto& m = *report->first_mismatch;
        rows.emplace_back("first_mismatch", "index " + std::to_string(m.index) + ": fixture " + m.expected.get_str() +
                                                ", generated " + m.actual.get_str());
      }
    } else {
      std::string terms;
      for (std::size_t i = 0; i < fixture->terms.size(); ++i) terms += (i ? " " : "") + fixture->terms[i].get_str();
      rows.emplace_back("terms", terms);
    }
    emit_pairs(out, fmt, rows, "field", "value");
  }
  if (!ok && report->first_mismatch) {
    err << a.accession << ": mismatch at index " << report->first_mismatch->index << '\n';
  }
  return ok ? kOk : kFailed;
}

void add_format(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv", "markdown"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of the k-Fibonacci/k-Lucas product matrices A(k,n)", "fiblucas"};
  app.require_subcommand(1);

  SeqArgs seq;
  auto* s = app.add_subcommand("seq", "Print terms of a sequence");
  s->add_option("--kind", seq.kind, "fib, lucas, det, trace or lambda2")->required();
  s->add_option("--k", seq.k, "Sequence parameter k >= 1")->required();
  s->add_option("--from", seq.from, "First index (default: start of the sequence)");
  s->add_option("--to", seq.to, "Last index, inclusive")->required();
  add_format(s, seq.format);

  InvariantArgs inv;
  auto* i = app.add_subcommand("invariants", "Closed-form invariants of A(k,n)");
  i->add_option("--k", inv.k)->required();
  i->add_option("--n", inv.n, "Matrix order")->required();
  i->add_option("--what", inv.what,
                "Comma list of det, trace, eigs, radius, energy, inverse, power:m, charpoly, matrix")
      ->capture_default_str();
  add_format(i, inv.format);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check every closed form against brute-force oracles");
  v->add_option("--k-range", ver.k_range, "Inclusive range a..b")->required();
  v->add_option("--n-range", ver.n_range, "Inclusive range a..b")->required();
  v->add_option("--power-max", ver.power_max, "Largest matrix power checked")->capture_default_str();
  add_format(v, ver.format);

  TableArgs tab;
  auto* t = app.add_subcommand("tables", "Tables of det, trace or lambda2 by k and n");
  t->add_option("--which", tab.which, "det, trace or lambda2")->required();
  t->add_option("--k-range", tab.k_range, "Inclusive range a..b")->required();
  t->add_option("--n-range", tab.n_range, "Inclusive range a..b")->capture_default_str();
  add_format(t, tab.format);

  OeisArgs oe;
  auto* o = app.add_subcommand("oeis", "Compare a generated sequence with OEIS b-file data");
  o->add_option("--check", oe.accession, "Accession, e.g. A000129")->required();
  o->add_option("--terms", oe.terms, "Number of terms to compare")->capture_default_str();
  o->add_flag("--offline", oe.offline, "Never use the network");
  o->add_option("--fixtures", oe.fixtures, "Directory of <accession>.bfile fixtures (default: bundled)");
  o->add_flag("--no-bundled", oe.no_bundled, "Ignore bundled fixtures; use the cache or network only");
  add_format(o, oe.format);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_seq(seq, out);
    if (i->parsed()) return cmd_invariants(inv, out);
    if (v->parsed()) return cmd_verify(ver, out);
    if (t->parsed()) return cmd_tables(tab, out);
    if (o->parsed()) return cmd_oeis(oe, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace fiblucas::cli
