#include "ramanujan/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "ramanujan/bounds.hpp"
#include "ramanujan/classify.hpp"
#include "ramanujan/detail/pair_search.hpp"
#include "ramanujan/numtheory.hpp"

namespace ramanujan {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidInput("group needs at least one cyclic factor");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t m = orders_[i];
    if (m < 3 || m % 2 == 0) throw InvalidInput("cyclic factors must be odd and at least 3, got " + std::to_string(m));
    if (i > 0 && m % orders_[i - 1] != 0) {
      throw InvalidInput("orders must form a divisibility chain: " + std::to_string(orders_[i - 1]) + " does not divide " +
                         std::to_string(m));
    }
    if (order_ > INT64_MAX / m) throw InvalidInput("group order exceeds 64 bits");
    order_ *= m;
  }
}

std::int64_t AbelianGroup::index(const Element& g) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    idx = idx * orders_[i] + static_cast<std::int64_t>(mod_floor(g[i], orders_[i]));
  }
  return idx;
}

AbelianGroup::Element AbelianGroup::element(std::int64_t idx) const {
  if (idx < 0 || idx >= order_) throw InvalidInput("element index out of range");
  Element g(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    g[i] = idx % orders_[i];
    idx /= orders_[i];
  }
  return g;
}

AbelianGroup::Element AbelianGroup::reduce(const Element& g) const {
  if (g.size() != orders_.size()) throw InvalidInput("element has the wrong rank");
  Element r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = static_cast<std::int64_t>(mod_floor(g[i], orders_[i]));
  return r;
}

AbelianGroup::Element AbelianGroup::negate(const Element& g) const {
  Element r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = static_cast<std::int64_t>(mod_floor(-g[i], orders_[i]));
  return r;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::int64_t>(mod_floor(wide_int(a[i]) + b[i], orders_[i]));
  return r;
}

std::int64_t AbelianGroup::pairing(const Element& chi, const Element& g) const {
  const std::int64_t e = exponent();
  wide_int phase = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    phase += mul_mod(mul_mod(chi[i], g[i], orders_[i]), e / orders_[i], e);
  }
  return static_cast<std::int64_t>(mod_floor(phase, e));
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) out << (i ? "+" : "") << 'Z' << orders_[i];
  return out.str();
}

namespace {

// Order of the subgroup generated by the elements not in `removed`.
std::int64_t generated_order(const AbelianGroup& g, const std::vector<char>& removed) {
  const std::int64_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::int64_t> frontier{0};
  seen[0] = 1;
  std::vector<AbelianGroup::Element> gens;
  for (std::int64_t i = 1; i < n; ++i) {
    if (!removed[i]) gens.push_back(g.element(i));
  }
  std::int64_t count = 1;
  while (!frontier.empty()) {
    const auto x = g.element(frontier.back());
    frontier.pop_back();
    for (const auto& s : gens) {
      const std::int64_t y = g.index(g.add(x, s));
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

}  // namespace

AbelianCayleySet AbelianCayleySet::from_complement(const AbelianGroup& g, const std::vector<AbelianGroup::Element>& t) {
  if (g.order() > kMaxAbelianSetOrder) throw InvalidInput("group too large for explicit Cayley sets");
  std::vector<char> in_t(g.order(), 0);
  for (const auto& e : t) in_t[g.index(g.reduce(e))] = 1;
  if (!in_t[0]) throw InvalidInput("complement must contain the identity");
  std::vector<AbelianGroup::Element> canon;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (!in_t[i]) continue;
    auto e = g.element(i);
    if (!in_t[g.index(g.negate(e))]) throw InvalidInput("complement is not closed under negation");
    canon.push_back(std::move(e));
  }
  if (static_cast<std::int64_t>(canon.size()) > g.order() - 2) {
    throw InvalidInput("complement leaves fewer than two generators");
  }
  if (generated_order(g, in_t) != g.order()) throw InvalidInput("S does not generate " + g.to_string());
  return AbelianCayleySet(g, std::move(canon));
}

std::string AbelianCayleySet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < complement_.size(); ++i) {
    out << (i ? "," : "") << '(';
    for (std::size_t j = 0; j < complement_[i].size(); ++j) out << (j ? "," : "") << complement_[i][j];
    out << ')';
  }
  out << '}';
  return out.str();
}

AbelianHatL abelian_hat_l(const AbelianGroup& g, const NumericPolicy& policy) {
  AbelianHatL r;
  const std::int64_t m = g.order();
  r.l0 = static_cast<std::int64_t>(trivial_bound(m));
  if (g.is_cyclic()) {
    const Verdict v = classify(m, policy);
    r.hat_l = static_cast<std::int64_t>(v.hat_l);
    r.all_ramanujan = v.verdict == Decision::all_ramanujan;
    r.reason = "cyclic: " + to_string(v.verdict);
    return r;
  }
  const auto& o = g.orders();
  if (o.size() == 2 && o[0] == 3 && o[1] == 3) {
    r.hat_l = m - 2;
    r.all_ramanujan = true;
    r.reason = "every Cayley graph of Z3+Z3 is Ramanujan";
    return r;
  }
  if (o.size() == 2 && o[0] == o[1] && is_prime(static_cast<std::uint64_t>(o[0]))) {
    const std::int64_t p = o[0];
    std::int64_t h = 0;
    while (h < 3) {
      const double d = d_ph<double>(p, h + 1);
      const bool positive = std::abs(d) >= policy.escalation_band(2.0 * p)
                                ? d > 0
                                : [&] {
                                    PrecisionScope scope(policy.extended_digits);
                                    return d_ph<Extended>(p, h + 1) > 0;
                                  }();
      if (positive) break;
      ++h;
    }
    r.hat_l = r.l0 + 2 * h;
    r.reason = "Z_p+Z_p with d(p,h) <= 0 up to h = " + std::to_string(h);
    return r;
  }
  r.hat_l = r.l0;
  r.reason = "non-cyclic, ordinary";
  return r;
}

namespace {

struct AbelianClass {
  AbelianGroup g;
  std::vector<std::int64_t> pair_rep;                 // representative element index per pair
  std::vector<std::vector<char>> blocking_outside;    // per maximal subgroup: pair lies outside it
  std::vector<int> blocking_needed;
};

AbelianClass make_abelian_class(const AbelianGroup& g) {
  AbelianClass c{g, {}, {}, {}};
  const std::int64_t n = g.order();
  for (std::int64_t i = 1; i < n; ++i) {
    if (i < g.index(g.negate(g.element(i)))) c.pair_rep.push_back(i);
  }
  // Maximal subgroups are the kernels of characters of prime order.
  std::vector<std::vector<char>> kernels;
  for (std::int64_t x = 1; x < n; ++x) {
    const auto chi = g.element(x);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < chi.size(); ++i) {
      const std::int64_t oi = g.orders()[i] / std::gcd(chi[i], g.orders()[i]);
      ord = std::lcm(ord, oi);
    }
    if (!is_prime(static_cast<std::uint64_t>(ord))) continue;
    std::vector<char> outside(c.pair_rep.size());
    for (std::size_t k = 0; k < c.pair_rep.size(); ++k) outside[k] = g.pairing(chi, g.element(c.pair_rep[k])) != 0;
    if (std::find(kernels.begin(), kernels.end(), outside) == kernels.end()) kernels.push_back(outside);
  }
  for (auto& k : kernels) {
    c.blocking_needed.push_back(static_cast<int>(std::count(k.begin(), k.end(), 1)));
    c.blocking_outside.push_back(std::move(k));
  }
  return c;
}

bool abelian_generates(const AbelianClass& c, std::span<const int> chosen) {
  for (std::size_t k = 0; k < c.blocking_outside.size(); ++k) {
    if (c.blocking_needed[k] > static_cast<int>(chosen.size())) continue;
    int hit = 0;
    for (int i : chosen) hit += c.blocking_outside[k][i];
    if (hit == c.blocking_needed[k]) return false;
  }
  return true;
}

AbelianCayleySet abelian_set(const AbelianClass& c, std::span<const int> chosen) {
  std::vector<AbelianGroup::Element> t{c.g.element(0)};
  for (int i : chosen) {
    const auto e = c.g.element(c.pair_rep[i]);
    t.push_back(e);
    t.push_back(c.g.negate(e));
  }
  return AbelianCayleySet::from_complement(c.g, t);
}

bool abelian_class_clean(const AbelianClass& c, const Eigen::MatrixXd& w, int l, const OracleOptions& options) {
  const int r = (l - 1) / 2;
  const std::uint64_t size = binomial_saturating(c.pair_rep.size(), r);
  if (size > options.budget) {
    throw BudgetExceeded("class of covalency " + std::to_string(l) + " in " + c.g.to_string() + " has " +
                             std::to_string(size) + " complements, budget is " + std::to_string(options.budget),
                         size);
  }
  const std::int64_t valency = c.g.order() - l;
  const double rb = ramanujan_bound<double>(valency);
  detail::SearchRequest req;
  req.weights = &w;
  req.choose = r;
  if (!c.blocking_outside.empty()) req.generates = [&c](std::span<const int> s) { return abelian_generates(c, s); };
  req.mode = detail::SearchMode::find_violation;
  req.rb = rb;
  req.band = options.policy.escalation_band(rb);
  req.workers = options.workers > 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  const auto res = detail::pair_search(req);
  if (res.violation) return false;
  for (const auto& b : res.borderline) {
    const auto set = abelian_set(c, b);
    const auto d = decide_nonnegative(0.0, rb, options.policy, [&] {
      const auto s = abelian_spectrum<Extended>(set);
      return Extended(s.rb - s.mu_max);
    });
    if (!d.holds) return false;
  }
  return true;
}

}  // namespace

std::int64_t abelian_oracle(const AbelianGroup& g, const OracleOptions& options) {
  options.policy.validate();
  const std::int64_t m = g.order();
  if (m > 49) throw InvalidInput("exhaustive verification is limited to groups of order at most 49");
  const AbelianClass c = make_abelian_class(g);
  // Rows: characters up to conjugation, which are indexed like the pairs.
  const auto n = static_cast<Eigen::Index>(c.pair_rep.size());
  Eigen::MatrixXd w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto gi = g.element(c.pair_rep[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      w(j, i) = 2.0 * cos_2pi_frac<double>(g.pairing(g.element(c.pair_rep[j]), gi), g.exponent());
    }
  }
  const int first = m <= 13 ? 1 : static_cast<int>(trivial_bound(m)) + 2;
  for (int l = first; l <= m - 2; l += 2) {
    if (!abelian_class_clean(c, w, l, options)) return l - 2;
  }
  return m - 2;
}

}  // namespace ramanujan
