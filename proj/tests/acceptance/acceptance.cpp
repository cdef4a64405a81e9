#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/golden.hpp"
#include "cli/tables.hpp"
#include "ramanujan/abelian.hpp"
#include "ramanujan/bounds.hpp"
#include "ramanujan/census.hpp"
#include "ramanujan/classify.hpp"
#include "ramanujan/numtheory.hpp"
#include "ramanujan/oracle.hpp"
#include "support/dense_oracle.hpp"

using namespace ramanujan;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome small_order_table() {
  const auto start = Clock::now();
  const auto rows = tables::table1(true);
  const double elapsed = seconds_since(start);
  std::ostringstream why;
  bool ok = rows.size() == golden::kSmallOrders.size();
  for (const auto& r : rows) {
    if (!r.pass) {
      ok = false;
      why << " m=" << r.m << " got " << r.hat_l << "/" << r.l0;
    }
  }
  ok = ok && elapsed < 60.0;
  why << " oracle over " << rows.size() << " orders in " << elapsed << " s (limit 60 s)";
  return {ok, why.str()};
}

Outcome full_ramanujan_threshold() {
  std::ostringstream why;
  bool ok = true;
  for (int m = 3; m <= 13; m += 2) {
    const int h = hat_l_exhaustive(Modulus(m));
    if (h != m - 2) {
      ok = false;
      why << " m=" << m << " gave " << h;
    }
  }
  const int h15 = hat_l_exhaustive(Modulus(15));
  ok = ok && h15 < 13;
  why << " hat_l = m-2 for 3..13; hat_l(15) = " << h15;
  return {ok, why.str()};
}

Outcome marker_table() {
  const auto start = Clock::now();
  const auto rows = tables::table3(golden::kMarkerLastK);
  const double elapsed = seconds_since(start);
  std::ostringstream why;
  bool ok = rows.size() == static_cast<std::size_t>(golden::kMarkerLastK - golden::kMarkerFirstK + 1) * 6;
  int mismatches = 0;
  for (const auto& r : rows) {
    if (!r.pass) {
      ++mismatches;
      why << " (k=" << r.k << ",c=" << r.c << ": " << r.marker << " vs " << r.expected << ")";
    }
  }
  auto marker_of = [&](int k, int c) {
    for (const auto& r : rows) {
      if (r.k == k && r.c == c) return r.marker;
    }
    return '?';
  };
  // Row k=4: 35 type II, 37 and 41 type I. Row k=5: 47 I, 49 square, 53 I, 55 II.
  ok = ok && marker_of(4, -1) == '2' && marker_of(4, 1) == '1' && marker_of(4, 5) == '1';
  ok = ok && marker_of(5, -3) == '1' && marker_of(5, -1) == '3' && marker_of(5, 3) == '1' && marker_of(5, 5) == '2';
  ok = ok && mismatches == 0 && elapsed < 5.0;
  why << " " << rows.size() << " cells, " << mismatches << " mismatches, " << elapsed << " s (limit 5 s)";
  return {ok, why.str()};
}

Outcome margins(const golden::MarginTable& table, int digits, bool check_signs) {
  const auto rows = tables::margin_table(table, digits);
  std::ostringstream why;
  bool ok = rows.size() == table.rows.size();
  int matched = 0;
  for (const auto& r : rows) {
    ok = ok && r.pq_match;
    for (int i = 0; i < 3; ++i) matched += r.match[i];
    if (!r.pass) {
      ok = false;
      why << " y=" << r.y;
    }
    if (check_signs && !(r.margins[0] > 0 && r.margins[1] < 0 && r.margins[2] < 0)) {
      ok = false;
      why << " sign(y=" << r.y << ")";
    }
  }
  why << " " << matched << "/" << 3 * rows.size() << " margins within one display unit at " << digits << " digits";
  return {ok, why.str()};
}

Outcome constants() {
  const auto rows = tables::table2();
  std::ostringstream why;
  bool ok = rows.size() == 4 + 6 * 4;
  for (const auto& r : rows) {
    if (!r.pass) {
      ok = false;
      why << " " << r.name << "=" << r.value;
    }
  }
  why << " " << rows.size() << " values and orderings checked to 4 decimals";
  return {ok, why.str()};
}

Outcome d_windows() {
  std::ostringstream why;
  bool ok = true;
  std::size_t checked = 0;
  for (wide_int k = 1; k <= 200; ++k) {
    const auto range = interval_orders(k);
    const wide_int base = k * k + 5 * k;
    const wide_int lo = base - (k <= 18 ? 3 : 5);
    const wide_int hi = base + 5;
    for (wide_int m = range.lo; m <= range.hi; m += 2) {
      if (m < 7) continue;
      ++checked;
      const bool negative = d_sign(m).sign < 0;
      const bool expected = k <= 3 || (m >= lo && m <= hi);
      if (negative != expected) {
        ok = false;
        why << " m=" << to_string(m);
      }
    }
  }
  why << " " << checked << " odd orders over 1 <= k <= 200";
  return {ok, why.str()};
}

Outcome avoiding_primes() {
  std::vector<std::uint64_t> found;
  for (std::uint64_t p = 3; found.size() < 5; p += 2) {
    if (is_prime(p) && avoids_J(p)) found.push_back(p);
  }
  const std::vector<std::uint64_t> expected(golden::kFirstAvoidingPrimes.begin(), golden::kFirstAvoidingPrimes.end());
  std::ostringstream why;
  why << " first five:";
  for (auto p : found) why << ' ' << p;
  return {found == expected, why.str()};
}

Outcome euler_products() {
  std::ostringstream why;
  bool ok = true;
  for (const auto& row : golden::kHardyLittlewood) {
    const auto r = hl_constant(row.c, 10'000'000);
    const bool close = std::abs(r.value - row.value) <= golden::kHardyLittlewoodTolerance;
    ok = ok && close;
    why << " c=" << row.c << ":" << r.value << (close ? "" : "(printed " + std::to_string(row.value) + ")");
  }
  return {ok, why.str()};
}

Outcome square_groups() {
  std::ostringstream why;
  bool ok = true;
  auto offset = [](std::int64_t p) {
    const auto r = abelian_hat_l(AbelianGroup({p, p}));
    return r.hat_l - (2 * p - 3);
  };
  const auto z3 = abelian_hat_l(AbelianGroup({3, 3}));
  ok = ok && z3.all_ramanujan && z3.hat_l == 7;
  ok = ok && offset(5) == golden::kSquareGroupOffset5;
  for (std::size_t i = 0; i < golden::kSquareGroupOffsetTwo.size(); ++i) {
    const int p = golden::kSquareGroupOffsetTwo[i];
    if (offset(p) != 2) {
      ok = false;
      why << " p=" << p;
    }
  }
  int large = 0;
  for (std::int64_t p = 19; p <= 199; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    ++large;
    if (offset(p) != 0) {
      ok = false;
      why << " p=" << p;
    }
  }
  for (std::int64_t p : {5, 7}) {
    const AbelianGroup g({p, p});
    const auto oracle = abelian_oracle(g);
    const auto closed = abelian_hat_l(g).hat_l;
    if (oracle != closed) {
      ok = false;
      why << " oracle(Z" << p << "^2)=" << oracle;
    }
  }
  why << " Z3^2 all Ramanujan, Z5^2 +4, p in {7,11,13,17} +2, " << large
      << " primes 19..199 +0, enumeration agrees for p = 5, 7";
  return {ok, why.str()};
}

Outcome property_suite() {
  std::ostringstream why;
  bool ok = true;
  for (int m : {15, 21, 35, 55}) {
    const auto r = lemma43_crosscheck(m);
    if (!r.passed() || r.delta > 1e-9) {
      ok = false;
      why << " m=" << m << ": " << r.diagnostic;
    }
  }

  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> pick_m(1, 150);
  int instances = 0, dense = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 * pick_m(rng) + 1;
    std::uniform_int_distribution<int> pick_l(0, (m - 3) / 2);
    const int l = 2 * pick_l(rng) + 1;
    const auto comp = oracle_support::random_complement(m, l, rng);
    const auto t = CayleySet::from_complement(Modulus(m), std::vector<wide_int>(comp.begin(), comp.end()));
    const auto s = spectrum<double>(t);
    bool good = std::abs(s.values.sum()) <= 1e-8 * m;
    good = good && std::abs(s.values.squaredNorm() - double(m) * (m - l)) <= 1e-6 * m * m;
    for (int j = 1; j < m && good; ++j) good = s.values(j) == s.values(m - j);
    const auto sl = sl_complement(Modulus(m), l);
    for (int j = 1; 2 * j < m && good; ++j) {
      good = std::abs(mu_sl_closed<double>(m, l, j) - eigenvalue<double>(sl, j)) <= 1e-9;
    }
    if (good && m <= 101 && dense < 200) {
      ++dense;
      good = std::abs(oracle_support::dense_mu_max(oracle_support::circulant_adjacency(m, comp)) - s.mu_max) <= 1e-8;
    }
    if (!good) {
      ok = false;
      why << " instance m=" << m << " l=" << l;
    }
    ++instances;
  }
  why << " cross-check at 15, 21, 35, 55; " << instances << " random spectra (" << dense
      << " against dense diagonalisation)";
  return {ok, why.str()};
}

Outcome census() {
  const auto orders = exceptional_orders(100);
  std::set<std::int64_t> printed;
  for (const auto& row : golden::kSmallOrders) {
    if (row.m >= 15 && row.hat_l == row.l0 + 2) printed.insert(row.m);
  }
  for (const auto& col : golden::kExceptionalMarkers) {
    for (int k = golden::kMarkerFirstK; k <= 7; ++k) {
      const char mark = col.markers[static_cast<std::size_t>(k - golden::kMarkerFirstK)];
      if (mark == '1' || mark == '2' || mark == '3') printed.insert(std::int64_t(k) * k + 5 * k + col.c);
    }
  }
  const std::vector<std::int64_t> expected(printed.begin(), printed.end());
  std::ostringstream why;
  why << " " << orders.size() << " exceptional odd orders up to 100; printed union has " << expected.size();
  return {orders.size() == 18 && orders == expected, why.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"small-order l-hat table by enumeration", small_order_table},
      {"l-hat = m-2 exactly for m <= 13", full_ramanujan_threshold},
      {"exceptional markers for 4 <= k <= 50", marker_table},
      {"margins a=1 c=-5", [] { return margins(golden::kTable4, 50, false); }},
      {"margins of the comparison family", [] { return margins(golden::kTable5, 50, true); }},
      {"margins a=64 c=5 at 40 digits", [] { return margins(golden::kTable6, 40, false); }},
      {"regime constants", constants},
      {"sign windows of d(m)", d_windows},
      {"primes avoiding every family", avoiding_primes},
      {"Euler products at 10^7 within 0.02", euler_products},
      {"l-hat of Z_p + Z_p", square_groups},
      {"oracle equivalence properties", property_suite},
      {"exceptional census up to 100", census},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string(" threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
