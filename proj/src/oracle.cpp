#include "ramanujan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "ramanujan/bounds.hpp"
#include "ramanujan/classify.hpp"
#include "ramanujan/detail/pair_search.hpp"
#include "ramanujan/numtheory.hpp"

namespace ramanujan {
namespace {

constexpr std::int64_t kMaxOracleOrder = 1'000'001;

struct CyclicClass {
  std::int64_t m;
  int pairs;
  int choose;
  std::vector<std::int64_t> blocking;  // primes d whose non-multiples can all be removed
};

CyclicClass make_class(Modulus modulus, int l, const OracleOptions& options) {
  const wide_int mw = modulus.value();
  if (mw > kMaxOracleOrder) throw InvalidInput("order too large for exhaustive enumeration");
  if (l < 1 || l % 2 == 0 || wide_int(l) > mw - 2) {
    throw InvalidInput("covalency must be odd with 1 <= l <= m-2, got " + std::to_string(l));
  }
  CyclicClass c{static_cast<std::int64_t>(mw), static_cast<int>((mw - 1) / 2), (l - 1) / 2, {}};
  const std::uint64_t size = binomial_saturating(c.pairs, c.choose);
  if (size > options.budget) {
    throw BudgetExceeded("class of covalency " + std::to_string(l) + " in Z_" + std::to_string(c.m) + " has " +
                             std::to_string(size) + " complements, budget is " + std::to_string(options.budget),
                         size);
  }
  for (const auto& f : factorize(static_cast<std::uint64_t>(c.m)).factors) {
    const auto d = static_cast<std::int64_t>(f.prime);
    if ((c.m - c.m / d) / 2 <= c.choose) c.blocking.push_back(d);
  }
  return c;
}

// Pair i stands for the residues +-(i+1).
bool generates(const CyclicClass& c, std::span<const int> chosen) {
  for (std::int64_t d : c.blocking) {
    const std::int64_t needed = (c.m - c.m / d) / 2;
    std::int64_t removed = 0;
    for (int i : chosen) removed += (i + 1) % d != 0;
    if (removed == needed) return false;
  }
  return true;
}

CayleySet to_set(const CyclicClass& c, std::span<const int> chosen) {
  std::vector<wide_int> t{0};
  for (int i : chosen) {
    t.push_back(i + 1);
    t.push_back(-(i + 1));
  }
  return CayleySet::from_complement(Modulus(c.m), t);
}

// Rows: characters j = 1..(m-1)/2. Columns: pairs.
Eigen::MatrixXd cyclic_weights(const CyclicClass& c) {
  Eigen::MatrixXd w(c.pairs, c.pairs);
  for (int i = 0; i < c.pairs; ++i) {
    for (int j = 0; j < c.pairs; ++j) {
      w(j, i) = 2.0 * cos_2pi_frac<double>(wide_int(i + 1) * (j + 1), c.m);
    }
  }
  return w;
}

int worker_count(const OracleOptions& options) {
  if (options.workers > 0) return options.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<int> pairs_of(const CayleySet& set) {
  std::vector<int> out;
  for (wide_int b : set.complement()) {
    if (b != 0 && 2 * b < set.m()) out.push_back(static_cast<int>(b - 1));
  }
  return out;
}

std::vector<std::vector<int>> hints(const CyclicClass& c) {
  std::vector<std::vector<int>> out;
  std::vector<int> sl(c.choose);
  std::iota(sl.begin(), sl.end(), 0);
  out.push_back(sl);
  for (const auto& f : factorize(static_cast<std::uint64_t>(c.m)).factors) {
    const auto d = static_cast<std::int64_t>(f.prime);
    if ((c.m / d - 1) / 2 < c.choose) continue;
    std::vector<int> mult;
    for (int i = 1; i <= c.choose; ++i) mult.push_back(static_cast<int>(i * d - 1));
    out.push_back(std::move(mult));
  }
  if (c.m >= 15 && 2 * c.choose + 1 == trivial_bound(c.m) + 2) {
    try {
      out.push_back(pairs_of(ordinary_witness(c.m).complement));
    } catch (const InvalidInput&) {
    }
  }
  return out;
}

}  // namespace

std::uint64_t class_size(Modulus m, int l) {
  if (l < 1 || l % 2 == 0 || wide_int(l) > m.value() - 2) {
    throw InvalidInput("covalency must be odd with 1 <= l <= m-2, got " + std::to_string(l));
  }
  const wide_int pairs = (m.value() - 1) / 2;
  return binomial_saturating(fits_int64(pairs) ? static_cast<std::uint64_t>(pairs) : UINT64_MAX,
                             static_cast<std::uint64_t>((l - 1) / 2));
}

std::uint64_t for_each_in_class(Modulus m, int l, const std::function<void(const CayleySet&)>& visit,
                                const OracleOptions& options) {
  const CyclicClass c = make_class(m, l, options);
  std::vector<int> idx(c.choose);
  std::iota(idx.begin(), idx.end(), 0);
  std::uint64_t emitted = 0;
  while (true) {
    if (generates(c, idx)) {
      visit(to_set(c, idx));
      ++emitted;
    }
    int pos = c.choose - 1;
    while (pos >= 0 && idx[pos] == c.pairs - c.choose + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int k = pos + 1; k < c.choose; ++k) idx[k] = idx[k - 1] + 1;
  }
  return emitted;
}

std::vector<CayleySet> enumerate_class(Modulus m, int l, const OracleOptions& options) {
  std::vector<CayleySet> out;
  for_each_in_class(m, l, [&](const CayleySet& s) { out.push_back(s); }, options);
  return out;
}

ClassMax class_max(Modulus m, int l, const OracleOptions& options) {
  const CyclicClass c = make_class(m, l, options);
  const Eigen::MatrixXd w = cyclic_weights(c);
  detail::SearchRequest req;
  req.weights = &w;
  req.choose = c.choose;
  if (!c.blocking.empty()) req.generates = [&c](std::span<const int> s) { return generates(c, s); };
  req.mode = detail::SearchMode::maximum;
  req.workers = worker_count(options);
  auto res = detail::pair_search(req);
  if (res.best_set.size() != static_cast<std::size_t>(c.choose)) {
    throw InvariantViolation("class contains no generating set");
  }
  CayleySet witness = to_set(c, res.best_set);
  std::int64_t j = 0;
  const double mu = mu_max<double>(witness, &j);
  return ClassMax{mu, std::move(witness), j, res.examined};
}

ClassScan scan_class(Modulus m, int l, const OracleOptions& options) {
  options.policy.validate();
  const CyclicClass c = make_class(m, l, options);
  ClassScan scan;
  for (const auto& h : hints(c)) {
    if (static_cast<int>(h.size()) != c.choose || !generates(c, h)) continue;
    const CayleySet set = to_set(c, h);
    const auto d = is_ramanujan(set, options.policy);
    ++scan.examined;
    scan.escalations += d.escalated;
    if (!d.holds) {
      scan.all_ramanujan = false;
      scan.violator = set;
      return scan;
    }
  }

  const Eigen::MatrixXd w = cyclic_weights(c);
  const double rb = ramanujan_bound<double>(c.m - l);
  detail::SearchRequest req;
  req.weights = &w;
  req.choose = c.choose;
  if (!c.blocking.empty()) req.generates = [&c](std::span<const int> s) { return generates(c, s); };
  req.mode = detail::SearchMode::find_violation;
  req.rb = rb;
  req.band = options.policy.escalation_band(rb);
  req.workers = worker_count(options);
  auto res = detail::pair_search(req);
  scan.examined += res.examined;
  if (res.violation) {
    scan.all_ramanujan = false;
    scan.violator = to_set(c, res.violation_set);
    return scan;
  }
  for (const auto& b : res.borderline) {
    const CayleySet set = to_set(c, b);
    const auto d = is_ramanujan(set, options.policy);
    ++scan.escalations;
    if (!d.holds) {
      scan.all_ramanujan = false;
      scan.violator = set;
      return scan;
    }
  }
  return scan;
}

int hat_l_exhaustive(Modulus m, const OracleOptions& options) {
  const wide_int mv = m.value();
  if (mv <= 13) {
    for (int l = 1; l <= mv - 2; l += 2) {
      if (!scan_class(m, l, options).all_ramanujan) return l - 2;
    }
    return static_cast<int>(mv - 2);
  }
  const int l0 = static_cast<int>(trivial_bound(mv));
  if (!scan_class(m, l0 + 2, options).all_ramanujan) return l0;
  if (!scan_class(m, l0 + 4, options).all_ramanujan) return l0 + 2;
  throw InvariantViolation("class l0+4 of Z_" + to_string(mv) + " contains no violator");
}

Lemma43Report lemma43_crosscheck(wide_int m, const OracleOptions& options) {
  if (m < 15 || !fits_int64(m)) throw InvalidInput("order out of range for the cross-check");
  const auto f = factorize(static_cast<std::uint64_t>(m));
  if (!f.is_distinct_semiprime()) throw InvalidInput("order must be a product of two distinct primes");
  Lemma43Report r;
  r.m = m;
  r.p = f.factors[0].prime;
  r.q = f.factors[1].prime;
  r.l0 = static_cast<int>(trivial_bound(m));
  const auto cand = mu_candidates<double>(r.p, r.q, r.l0);
  const int l = r.l0 + 2;
  const ClassMax cm = class_max(Modulus(m), l, options);
  r.class_mu = cm.mu;
  r.candidate_mu = cand.max();
  r.delta = std::abs(r.class_mu - r.candidate_mu);
  r.value_ok = r.delta <= 1e-9;
  r.witness = cm.witness.to_string();
  r.gcd_class = gcd(cm.j, m);

  // Residue of u*b in the quotient of order n, centred in (-n/2, n/2].
  auto histogram = [&](wide_int n, wide_int u) {
    std::vector<wide_int> count(static_cast<std::size_t>(n), 0);
    for (wide_int b : cm.witness.complement()) ++count[static_cast<std::size_t>(mod_floor(u * b, n))];
    return count;
  };
  auto expect = [&](const std::vector<wide_int>& count, const std::vector<std::pair<wide_int, wide_int>>& shape) {
    const wide_int n = static_cast<wide_int>(count.size());
    std::vector<wide_int> want(count.size(), 0);
    for (auto [res, k] : shape) want[static_cast<std::size_t>(mod_floor(res, n))] += k;
    return want == count;
  };

  std::ostringstream why;
  if (r.gcd_class == 1) {
    std::vector<wide_int> image;
    for (wide_int b : cm.witness.complement()) image.push_back(mod_floor(b * cm.j, m));
    std::sort(image.begin(), image.end());
    const CayleySet sl = sl_complement(Modulus(m), l);
    r.structure_ok = image == sl.complement();
    if (!r.structure_ok) why << "j*T is not the consecutive set S^(" << l << ")";
  } else if (r.gcd_class == r.q) {
    const auto count = histogram(r.p, cm.j / r.q);
    const wide_int side = (l - r.q) / 2;
    r.structure_ok = expect(count, {{0, r.q}, {1, side}, {-1, side}});
    if (!r.structure_ok) why << "T is not inside T0(p,q) u T1(p,q)";
  } else if (r.gcd_class == r.p) {
    const auto count = histogram(r.q, cm.j / r.p);
    if (l <= 3 * r.p) {
      const wide_int side = (l - r.p) / 2;
      r.structure_ok = expect(count, {{0, r.p}, {1, side}, {-1, side}});
    } else {
      const wide_int side = (l - 3 * r.p) / 2;
      r.structure_ok = expect(count, {{0, r.p}, {1, r.p}, {-1, r.p}, {2, side}, {-2, side}});
    }
    if (!r.structure_ok) why << "T is not inside T0(q,p) u T1(q,p) u T2(q,p)";
  } else {
    why << "maximising character has gcd " << to_string(r.gcd_class);
  }
  if (!r.value_ok) why << (why.tellp() ? "; " : "") << "class maximum " << r.class_mu << " vs candidates " << r.candidate_mu;
  r.diagnostic = why.str();
  return r;
}

}  // namespace ramanujan
