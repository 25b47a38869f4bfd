#include "sgspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "sgspec/linalg.hpp"

namespace sgspec::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<NamedCheck> evaluate_invariants(const family::FamilyParams& params, const IntMatrix& s,
                                            const UniPoly& oracle, const closed::FactoredCharPoly& f,
                                            const std::vector<double>& eig) {
  const int n = params.n();
  const Int nn = n;
  std::vector<NamedCheck> checks;

  checks.push_back({"trace_zero", sgn(s.trace()) == 0});

  // Coefficient of lambda^(n-2) in det(S - lambda I) is (-1)^n e_2 with
  // e_2 = -n(n-1)/2 for a zero-diagonal +-1 matrix, so sum lambda^2 = n(n-1).
  Int expected_e2 = -(nn * (nn - 1)) / 2;
  if (n % 2 != 0) expected_e2 = -expected_e2;
  checks.push_back({"sum_squares_exact", n < 2 || oracle.coeff(n - 2) == expected_e2});

  double sq = 0.0;
  for (double v : eig) sq += v * v;
  checks.push_back({"sum_squares_numeric", std::fabs(sq - static_cast<double>(n) * (n - 1)) <= 1e-6});

  // Closed form: (1-2p)^2 e1 + e2 + sum r_i^2 with sum r_i^2 from Vieta.
  const Int& c3 = f.cubic[3];
  const Int root_sum = -f.cubic[2] / c3;  // c3 = -1 so the division is exact
  const Int pair_sum = f.cubic[1] / c3;
  const Int cubic_sq = root_sum * root_sum - 2 * pair_sum;
  const Int closed_sq = f.root1 * f.root1 * f.e1 + f.root2 * f.root2 * f.e2 + cubic_sq;
  checks.push_back({"sum_squares_closed", closed_sq == nn * (nn - 1)});

  const int sign = n % 2 == 0 ? 1 : -1;
  checks.push_back({"degree", f.degree() == n && oracle.degree() == n && oracle.leading() == sign});

  const Int stated_root_sum = nn + 3 - 2 * params.h() - 2 * params.p();
  const Int closed_trace = f.root1 * f.e1 + f.root2 * f.e2 + root_sum;
  checks.push_back({"vieta_trace", root_sum == stated_root_sum && sgn(closed_trace) == 0});
  return checks;
}

ForcedEigenvalueAudit audit_forced(const family::FamilyParams& params, const closed::FactoredCharPoly& f,
                                   const std::vector<double>& eig) {
  ForcedEigenvalueAudit a;
  const int p = params.p();
  a.factor_root = 1 - 2 * p;
  a.factor_exponent = f.e1;
  a.observed_factor_root = count_near(eig, a.factor_root);
  a.stated_label = 2 * p - 1;
  a.observed_stated_label = count_near(eig, a.stated_label);
  a.label_sign_inconsistent = a.stated_label != a.factor_root;
  a.stated_multiplicity_violated = a.observed_stated_label < f.e1;
  a.one_stated_bound = (params.n() - params.h()) - params.private_blocks();
  a.one_factor_exponent = f.e2;
  a.observed_one = count_near(eig, 1.0);
  return a;
}

}  // namespace

int count_near(const std::vector<double>& eig, double value, double window) {
  return static_cast<int>(
      std::count_if(eig.begin(), eig.end(), [&](double v) { return std::fabs(v - value) <= window; }));
}

bool VerificationReport::invariants_hold() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const NamedCheck& c) { return c.passed; });
}

bool VerificationReport::passed(double tol) const {
  return charpoly_exact_match && invariants_hold() && spectrum_max_deviation <= tol;
}

VerificationReport verify_instance(const family::FamilyParams& params, double tol) {
  const auto start = Clock::now();
  VerificationReport report{.params = params};
  report.closed_form = closed::charpoly_closed(params);

  const IntMatrix s = family::seidel_matrix(params);
  report.oracle_charpoly = linalg::charpoly_oracle(s);
  const UniPoly expanded = report.closed_form.expand();
  const int top = std::max(expanded.degree(), report.oracle_charpoly.degree());
  for (int d = 0; d <= top; ++d) {
    Int a = expanded.coeff(d);
    Int b = report.oracle_charpoly.coeff(d);
    if (a != b) report.coefficient_diffs.push_back({d, std::move(a), std::move(b)});
  }
  report.charpoly_exact_match = report.coefficient_diffs.empty();

  const std::vector<double> eig = eig_numeric(s, tol);
  const std::vector<double> predicted = closed::spectrum_closed(params, tol).expanded();
  if (predicted.size() != eig.size()) {
    report.spectrum_max_deviation = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < eig.size(); ++i) {
      report.spectrum_max_deviation = std::max(report.spectrum_max_deviation, std::fabs(eig[i] - predicted[i]));
    }
  }

  report.invariants = evaluate_invariants(params, s, report.oracle_charpoly, report.closed_form, eig);
  report.forced = audit_forced(params, report.closed_form, eig);
  report.elapsed = Clock::now() - start;
  return report;
}

const SweepPoint* SweepSummary::first_failure() const {
  for (const auto& pt : points) {
    if (pt.status == SweepPoint::Status::error) return &pt;
    if (pt.status == SweepPoint::Status::verified && !pt.report->charpoly_exact_match) return &pt;
  }
  return nullptr;
}

std::string SweepSummary::summary_line() const {
  return std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
         " skipped";
}

SweepSummary sweep(int h_max, int k_max, double tol, int n_cap, unsigned threads) {
  SweepSummary summary{.h_max = h_max, .k_max = k_max, .n_cap = n_cap, .tol = tol};
  for (int h = 2; h <= h_max; ++h)
    for (int p = 1; p <= h; ++p)
      for (int k = 2; k <= k_max; ++k) {
        const int n = h + (k - 1) * p;
        summary.points.push_back({h, p, k, n, n > n_cap ? SweepPoint::Status::skipped : SweepPoint::Status::verified,
                                  std::nullopt, {}});
      }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < summary.points.size(); i = next.fetch_add(1)) {
      SweepPoint& pt = summary.points[i];
      if (pt.status == SweepPoint::Status::skipped) continue;
      try {
        pt.report = verify_instance(family::make_params(pt.h, pt.p, pt.k), tol);
      } catch (const std::exception& e) {
        pt.status = SweepPoint::Status::error;
        pt.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, summary.points.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& pt : summary.points) {
    switch (pt.status) {
      case SweepPoint::Status::skipped:
        ++summary.skipped;
        break;
      case SweepPoint::Status::error:
        ++summary.failed;
        break;
      case SweepPoint::Status::verified:
        pt.report->charpoly_exact_match ? ++summary.passed : ++summary.failed;
        break;
    }
  }
  return summary;
}

BlockMultiplicityAudit audit_block_multiplicity(std::size_t m, std::size_t t) {
  return {m * t, 1 + (t - 1) + t * (m - 1), 1 + (t - 1) + m * (t - 1)};
}

}  // namespace sgspec::verify
