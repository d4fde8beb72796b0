#include "fiblucas/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "fiblucas/sequence.hpp"

namespace fiblucas {
namespace {

std::string join(std::span<const BigInt> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ']';
  return os.str();
}

std::string join(const Polynomial& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i].get_str();
  os << ']';
  return os.str();
}

class CellChecker {
 public:
  explicit CellChecker(const ClosedForms& f) : f_(f) {}

  void expect(const std::string& check, bool ok, const std::string& witness) {
    auto it = std::find_if(out_.begin(), out_.end(), [&](const CheckRecord& r) { return r.check == check; });
    if (it == out_.end()) {
      out_.push_back({f_.params.k, f_.params.n, check, CheckStatus::pass, {}});
      it = out_.end() - 1;
    }
    // Keep only the first counterexample.
    if (!ok && it->status == CheckStatus::pass) {
      it->status = CheckStatus::fail;
      it->witness = witness;
    }
  }

  std::vector<CheckRecord> take() {
    std::sort(out_.begin(), out_.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.check < b.check; });
    return std::move(out_);
  }

 private:
  const ClosedForms& f_;
  std::vector<CheckRecord> out_;
};

std::string mismatch(const std::string& closed, const std::string& oracle) {
  return "closed=" + closed + " oracle=" + oracle;
}

}  // namespace

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](const CheckRecord& r) { return r.status == CheckStatus::fail; }));
}

std::string to_string(CheckStatus s) { return s == CheckStatus::pass ? "pass" : "fail"; }

ClosedForms evaluate_closed_forms(const FamilyParams& p, unsigned m_max) {
  ClosedForms f{p,
                decompose(p),
                closed_det(p),
                closed_trace(p),
                lambda2(p),
                spectrum(p),
                closed_charpoly(p),
                closed_inverse(p),
                {}};
  f.powers.reserve(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) f.powers.push_back(closed_power(p, m));
  return f;
}

std::vector<CheckRecord> check_cell(const ClosedForms& f) {
  const FamilyParams& p = f.params;
  const IntMatrix a = build_matrix(p);
  const auto n = a.order();
  CellChecker c(f);

  c.expect("structure", f.form.d == 2 && f.form.reconstruct() == a,
           "A=" + format_matrix(a) + " d=" + f.form.d.get_str() + " v=" + join(f.form.v));

  const BigInt det_oracle = det_bareiss(a);
  c.expect("det", f.det == det_oracle, mismatch(f.det.get_str(), det_oracle.get_str()));
  if (n <= kCofactorMaxOrder) {
    const BigInt det_cof = det_cofactor(a);
    c.expect("det", f.det == det_cof, "cofactor " + mismatch(f.det.get_str(), det_cof.get_str()));
  }

  const BigInt trace_oracle = a.trace();
  c.expect("trace", f.trace == trace_oracle, mismatch(f.trace.get_str(), trace_oracle.get_str()));

  const BigInt l2_oracle = 2 + product_sum(p.k, p.n);
  c.expect("lambda2", f.lambda2 == l2_oracle, mismatch(f.lambda2.get_str(), l2_oracle.get_str()));
  c.expect("lambda2", f.spectrum.lambda2 == f.lambda2 && f.spectrum.spectral_radius == f.lambda2,
           "spectrum lambda2=" + f.spectrum.lambda2.get_str() + " radius=" + f.spectrum.spectral_radius.get_str());

  if (p.k == 1) {
    const BigInt d1 = closed_det_k1(p.n), t1 = closed_trace_k1(p.n), l1 = lambda2_k1(p.n);
    c.expect("k1_formulas", d1 == f.det && t1 == f.trace && l1 == f.lambda2,
             "det=" + d1.get_str() + " trace=" + t1.get_str() + " lambda2=" + l1.get_str());
  }

  const Polynomial cp_oracle = char_poly(a);
  c.expect("charpoly", f.charpoly == cp_oracle, mismatch(join(f.charpoly), join(cp_oracle)));

  const IntMatrix shifted = a - BigInt(2) * IntMatrix::identity(n);
  // A - 2I = 1 v^T with v != 0, so its nullity n - 1 must equal mult1.
  const std::size_t rank = rank_exact(shifted);
  c.expect("rank", rank == 1 && static_cast<std::int64_t>(n - rank) == f.spectrum.mult1,
           "rank(A-2I)=" + std::to_string(rank) + " mult1=" + std::to_string(f.spectrum.mult1));

  const IntVector ones(n, BigInt(1));
  const IntVector a_ones = times_column(a, ones);
  const IntVector l2_ones(n, f.lambda2);
  c.expect("eigen_right", a_ones == l2_ones, "A*1=" + join(a_ones));

  const IntVector vt_a = row_times(f.form.v, a);
  IntVector l2_v = f.form.v;
  for (auto& x : l2_v) x *= f.lambda2;
  c.expect("eigen_left", vt_a == l2_v, "v^T*A=" + join(vt_a) + " lambda2*v^T=" + join(l2_v));

  c.expect("energy", f.spectrum.energy == trace_oracle && f.spectrum.mult1 + f.spectrum.mult2 == p.n,
           mismatch(f.spectrum.energy.get_str(), trace_oracle.get_str()));

  const RatMatrix ar = to_rational(a);
  const RatMatrix id = RatMatrix::identity(n);
  c.expect("inverse", f.inverse * ar == id && ar * f.inverse == id, "A^-1*A != I, A^-1=" + format_matrix(f.inverse));
  const RatMatrix inv_oracle = rat_inverse(a);
  c.expect("inverse", f.inverse == inv_oracle, mismatch(format_matrix(f.inverse), format_matrix(inv_oracle)));

  IntMatrix acc = IntMatrix::identity(n);
  for (std::size_t m = 0; m < f.powers.size(); ++m) {
    if (m > 0) acc = acc * a;
    c.expect("power", f.powers[m] == acc,
             "m=" + std::to_string(m) + " " + mismatch(format_matrix(f.powers[m]), format_matrix(acc)));
  }

  return c.take();
}

VerificationReport verify_grid(IndexRange k_range, IndexRange n_range, unsigned m_max) {
  std::vector<FamilyParams> cells;
  if (!k_range.empty() && !n_range.empty()) {
    for (auto k = k_range.lo; k <= k_range.hi; ++k) {
      for (auto n = n_range.lo; n <= n_range.hi; ++n) cells.push_back({k, n});
    }
  }
  std::vector<std::vector<CheckRecord>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = check_cell(evaluate_closed_forms(cells[i], m_max));
      } catch (const Error& e) {
        results[i] = {{cells[i].k, cells[i].n, "evaluate", CheckStatus::fail, e.what()}};
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(cells.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  // Cells were enumerated in (k, n) order and each cell is sorted by check.
  VerificationReport report;
  for (auto& r : results) {
    for (auto& rec : r) report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace fiblucas
