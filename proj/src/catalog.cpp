#include "fiblucas/catalog.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "fiblucas/family.hpp"
#include "fiblucas/sequence.hpp"

namespace fiblucas {
namespace {

struct Counterpart {
  std::string_view accession;
  SequenceId id;
};

constexpr std::array<Counterpart, 6> kCounterparts{{
    {"A000032", {SequenceKind::klucas, 1}},
    {"A000045", {SequenceKind::kfib, 1}},
    {"A000129", {SequenceKind::kfib, 2}},
    {"A002203", {SequenceKind::klucas, 2}},
    {"A006190", {SequenceKind::kfib, 3}},
    {"A006497", {SequenceKind::klucas, 3}},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view tok, std::size_t line) {
  if (!is_integer_token(tok)) throw ParseError("not an integer: '" + std::string(tok) + "'", line);
  if (tok.front() == '+') tok.remove_prefix(1);
  return BigInt(std::string(tok), 10);
}

}  // namespace

std::optional<SequenceKind> parse_kind(std::string_view s) {
  if (s == "fib" || s == "kfib") return SequenceKind::kfib;
  if (s == "lucas" || s == "klucas") return SequenceKind::klucas;
  if (s == "det") return SequenceKind::det;
  if (s == "trace") return SequenceKind::trace;
  if (s == "lambda2") return SequenceKind::lambda2;
  return std::nullopt;
}

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kfib: return "kfib";
    case SequenceKind::klucas: return "klucas";
    case SequenceKind::det: return "det";
    case SequenceKind::trace: return "trace";
    case SequenceKind::lambda2: return "lambda2";
  }
  return "?";
}

std::int64_t first_index(SequenceKind kind) {
  return (kind == SequenceKind::kfib || kind == SequenceKind::klucas) ? 0 : 1;
}

BigInt sequence_term(const SequenceId& id, std::int64_t index) {
  if (id.k < 1) throw InvalidParameter("k must be >= 1, got " + std::to_string(id.k));
  if (index < first_index(id.kind)) {
    throw InvalidParameter(to_string(id.kind) + " is defined from index " +
                           std::to_string(first_index(id.kind)) + ", got " + std::to_string(index));
  }
  switch (id.kind) {
    case SequenceKind::kfib: return kfib(id.k, index);
    case SequenceKind::klucas: return klucas(id.k, index);
    case SequenceKind::det: return closed_det({id.k, index});
    case SequenceKind::trace: return closed_trace({id.k, index});
    case SequenceKind::lambda2: return lambda2({id.k, index});
  }
  throw InvalidParameter("unknown sequence kind");
}

std::vector<BigInt> emit_range(const SequenceId& id, std::int64_t from, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sequence_term(id, from + static_cast<std::int64_t>(i)));
  return out;
}

std::vector<BigInt> emit_sequence(const SequenceId& id, std::size_t count) {
  if (count == 0) throw InvalidParameter("count must be >= 1");
  return emit_range(id, first_index(id.kind), count);
}

SequenceFixture parse_bfile(std::string_view text, std::string name) {
  SequenceFixture fx{std::move(name), {}, 0};
  std::size_t line_no = 0;
  std::optional<std::int64_t> expect_index;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) throw ParseError("expected 'index value'", line_no);
    const std::string_view idx_tok = line.substr(0, sep);
    const std::string_view val_tok = trim(line.substr(sep));
    if (val_tok.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError("trailing data after value", line_no);
    }
    const BigInt idx = parse_integer(idx_tok, line_no);
    if (!idx.fits_slong_p()) throw ParseError("index out of range", line_no);
    const std::int64_t index = idx.get_si();
    if (!expect_index) {
      fx.offset = index;
    } else if (index != *expect_index) {
      throw ParseError("expected index " + std::to_string(*expect_index) + ", got " + std::to_string(index),
                       line_no);
    }
    expect_index = index + 1;
    fx.terms.push_back(parse_integer(val_tok, line_no));
  }
  if (fx.terms.empty()) throw ParseError("b-file contains no terms", 0);
  return fx;
}

std::string write_bfile(const SequenceFixture& fixture) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fixture.terms.size(); ++i) {
    os << fixture.offset + static_cast<std::int64_t>(i) << ' ' << fixture.terms[i].get_str() << '\n';
  }
  return os.str();
}

MatchReport check_fixture(const SequenceId& id, const SequenceFixture& fixture, std::size_t max_terms) {
  MatchReport report;
  std::size_t n = fixture.terms.size();
  if (max_terms != 0 && max_terms < n) n = max_terms;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t index = fixture.offset + static_cast<std::int64_t>(i);
    BigInt actual;
    try {
      actual = sequence_term(id, index);
    } catch (const InvalidParameter&) {
      // Index outside the generated sequence's domain.
      report.first_mismatch = Mismatch{index, fixture.terms[i], 0};
      return report;
    }
    ++report.compared;
    if (actual != fixture.terms[i]) {
      report.first_mismatch = Mismatch{index, fixture.terms[i], actual};
      return report;
    }
  }
  return report;
}

std::optional<SequenceId> oeis_counterpart(std::string_view accession) {
  for (const auto& c : kCounterparts) {
    if (c.accession == accession) return c.id;
  }
  return std::nullopt;
}

std::vector<std::string> known_accessions() {
  std::vector<std::string> out;
  for (const auto& c : kCounterparts) out.emplace_back(c.accession);
  return out;
}

}  // namespace fiblucas
