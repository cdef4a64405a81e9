#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cli/golden.hpp"
#include "cli/tables.hpp"
#include "ramanujan/abelian.hpp"
#include "ramanujan/census.hpp"
#include "ramanujan/classify.hpp"
#include "ramanujan/oracle.hpp"

namespace ramanujan::cli {
namespace {

using nlohmann::json;

struct Globals {
  int precision = 50;
  bool json = false;

  NumericPolicy policy() const {
    NumericPolicy p;
    p.extended_digits = precision;
    p.validate();
    return p;
  }
};

json int_json(wide_int v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string real(double v, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<wide_int> parse_wide_list(const std::string& text) {
  std::vector<wide_int> out;
  for (const auto& s : split_list(text)) out.push_back(parse_wide(s));
  return out;
}

json verdict_json(const Verdict& v) {
  json j;
  j["m"] = int_json(v.m);
  j["l0"] = v.m >= 15 ? int_json(v.l0) : json(nullptr);
  if (v.in_j.member) {
    json w{{"source", v.in_j.source == JSource::small_window ? "small_window" : "quadratic"}};
    if (v.in_j.source == JSource::quadratic) {
      w["c"] = v.in_j.c;
      w["k"] = int_json(v.in_j.k);
      w["cprime"] = v.in_j.cprime;
    }
    j["inJ"] = w;
  } else {
    j["inJ"] = nullptr;
  }
  j["kind"] = v.kind.label();
  j["p"] = v.kind.p ? int_json(v.kind.p) : json(nullptr);
  j["q"] = v.kind.q ? int_json(v.kind.q) : json(nullptr);
  j["verdict"] = to_string(v.verdict);
  j["epsilon"] = opt_json(v.epsilon);
  j["hatl"] = int_json(v.hat_l);
  j["mu_hat"] = opt_json(v.mu_hat);
  if (v.candidates) {
    j["candidates"] = {{"mu0", v.candidates->mu0}, {"mu1", v.candidates->mu1}, {"mu2", v.candidates->mu2}};
  } else {
    j["candidates"] = nullptr;
  }
  j["rb"] = v.m >= 15 ? json(v.rb) : json(nullptr);
  j["margin"] = opt_json(v.margin);
  j["escalated"] = v.escalated;
  j["near_threshold"] = v.near_threshold;
  return j;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "m = " << to_string(v.m) << '\n';
  if (v.m >= 15) out << "l0 = " << to_string(v.l0) << '\n';
  if (v.in_j.member) {
    if (v.in_j.source == JSource::quadratic) {
      out << "in J: c = " << v.in_j.c << ", k = " << to_string(v.in_j.k) << '\n';
    } else {
      out << "in J: small window 15..29\n";
    }
  } else {
    out << "in J: no\n";
  }
  out << "kind = " << v.kind.label();
  if (v.kind.p) out << " (p = " << to_string(v.kind.p) << ", q = " << to_string(v.kind.q) << ")";
  out << '\n';
  out << "verdict = " << to_string(v.verdict) << '\n';
  out << "hat_l = " << to_string(v.hat_l) << '\n';
  if (v.candidates) {
    out << "mu0 = " << real(v.candidates->mu0) << ", mu1 = " << real(v.candidates->mu1)
        << ", mu2 = " << real(v.candidates->mu2) << '\n';
  }
  if (v.mu_hat) out << "mu_hat = " << real(*v.mu_hat) << '\n';
  if (v.m >= 15) out << "rb = " << real(v.rb) << '\n';
  if (v.margin) out << "margin = " << real(*v.margin, 6) << (v.escalated ? " (extended precision)" : "") << '\n';
  if (v.near_threshold) out << "near threshold: x lies between xbar1(c) and xunder2(c)\n";
}

std::string csv_opt(const std::optional<double>& v) { return v ? real(*v, 15) : ""; }

void scan_csv(std::ostream& out, const std::vector<Verdict>& rows) {
  out << "m,l0,in_j,c,k,kind,verdict,hat_l,mu_hat,rb,margin,near_threshold\n";
  for (const auto& v : rows) {
    const bool quad = v.in_j.member && v.in_j.source == JSource::quadratic;
    out << to_string(v.m) << ',' << (v.m >= 15 ? to_string(v.l0) : "") << ',' << (v.in_j.member ? 1 : 0) << ','
        << (quad ? std::to_string(v.in_j.c) : "") << ',' << (quad ? to_string(v.in_j.k) : "") << ','
        << v.kind.label() << ',' << to_string(v.verdict) << ',' << to_string(v.hat_l) << ',' << csv_opt(v.mu_hat)
        << ',' << (v.m >= 15 ? real(v.rb, 15) : "") << ',' << csv_opt(v.margin) << ','
        << (v.near_threshold ? 1 : 0) << '\n';
  }
}

PolyCountMode parse_mode(const std::string& s) {
  if (s == "prime") return PolyCountMode::prime;
  if (s == "semiprime" || s == "semiprime_distinct") return PolyCountMode::semiprime_distinct;
  throw InvalidInput("mode must be 'prime' or 'semiprime', got '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Ramanujan Cayley graphs on cyclic and abelian groups of odd order"};
  app.set_version_flag("--version", "ramanujan 1.0");
  app.add_option("--precision", g.precision, "Extended precision in decimal digits")->check(CLI::Range(30, 10000));
  app.add_flag("--json", g.json, "Emit one JSON object");
  app.require_subcommand(1);
  app.fallthrough();
  std::function<void()> action;

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Decide whether m is exceptional and report l-hat");
  std::string m_text, factors_text;
  classify_cmd->add_option("m", m_text, "Odd order")->required();
  classify_cmd->add_option("--factors", factors_text, "Comma-separated prime factors with multiplicity");
  classify_cmd->callback([&] {
    action = [&] {
      const wide_int m = parse_wide(m_text);
      Verdict v;
      if (factors_text.empty()) {
        v = classify(m, g.policy());
      } else {
        std::vector<PrimePower> f;
        for (wide_int p : parse_wide_list(factors_text)) {
          if (p < 2 || !fits_int64(p)) throw InvalidInput("factor out of range: " + to_string(p));
          const auto u = static_cast<std::uint64_t>(p);
          if (!f.empty() && f.back().prime == u) {
            ++f.back().exponent;
          } else {
            f.push_back({u, 1});
          }
        }
        std::sort(f.begin(), f.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
        v = classify_factored(m, f, g.policy());
      }
      if (g.json) {
        out << verdict_json(v).dump() << '\n';
      } else {
        print_verdict(out, v);
      }
    };
  });

  // hatl
  auto* hatl_cmd = app.add_subcommand("hatl", "l-hat of Z_m");
  bool use_oracle = false;
  OracleOptions oracle_options;
  hatl_cmd->add_option("m", m_text, "Odd order")->required();
  hatl_cmd->add_flag("--oracle", use_oracle, "Enumerate covalency classes instead of classifying");
  hatl_cmd->add_option("--budget", oracle_options.budget, "Subsets per class before refusing");
  hatl_cmd->add_option("--workers", oracle_options.workers, "Enumeration threads (0: all cores)");
  hatl_cmd->callback([&] {
    action = [&] {
      const wide_int m = parse_wide(m_text);
      oracle_options.policy = g.policy();
      const wide_int hat = use_oracle ? wide_int(hat_l_exhaustive(Modulus(m), oracle_options))
                                      : classify(m, oracle_options.policy).hat_l;
      if (g.json) {
        out << json{{"m", int_json(m)}, {"hatl", int_json(hat)}, {"method", use_oracle ? "oracle" : "classify"}}.dump()
            << '\n';
      } else {
        out << to_string(hat) << '\n';
      }
    };
  });

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Classify every odd m in [lo, hi]");
  std::string lo_text, hi_text, csv_path;
  scan_cmd->add_option("lo", lo_text)->required();
  scan_cmd->add_option("hi", hi_text)->required();
  scan_cmd->add_option("--csv", csv_path, "Write CSV to this path instead of standard output");
  scan_cmd->callback([&] {
    action = [&] {
      const wide_int lo = parse_wide(lo_text), hi = parse_wide(hi_text);
      if (lo > hi) throw InvalidInput("empty range");
      if (hi - lo > 100'000'000) throw InvalidInput("range too wide (at most 10^8)");
      std::vector<Verdict> rows;
      for (wide_int m = std::max<wide_int>(3, lo | 1); m <= hi; m += 2) rows.push_back(classify(m, g.policy()));
      if (g.json) {
        json arr = json::array();
        for (const auto& v : rows) arr.push_back(verdict_json(v));
        out << json{{"lo", int_json(lo)}, {"hi", int_json(hi)}, {"rows", arr}}.dump() << '\n';
        return;
      }
      if (csv_path.empty()) {
        scan_csv(out, rows);
        return;
      }
      std::ofstream file(csv_path);
      if (!file) throw InvalidInput("cannot write " + csv_path);
      scan_csv(file, rows);
      std::size_t exceptional = 0;
      for (const auto& v : rows) exceptional += v.verdict == Decision::exceptional;
      out << rows.size() << " orders, " << exceptional << " exceptional, written to " << csv_path << '\n';
    };
  });

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of the Cayley graph with complement T");
  std::string complement_text;
  bool show_values = false;
  spectrum_cmd->add_option("m", m_text)->required();
  spectrum_cmd->add_option("--complement", complement_text, "Comma-separated residues of T, including 0")->required();
  spectrum_cmd->add_flag("--values", show_values, "List every eigenvalue");
  spectrum_cmd->callback([&] {
    action = [&] {
      const Modulus m(parse_wide(m_text));
      if (m.value() > 1'000'000) throw InvalidInput("spectrum output is limited to m <= 10^6");
      const auto t = CayleySet::from_complement(m, parse_wide_list(complement_text));
      const auto s = spectrum<double>(t);
      const auto d = is_ramanujan(t, g.policy());
      if (g.json) {
        json j{{"m", int_json(m.value())},
               {"complement", t.to_string()},
               {"valency", int_json(s.valency)},
               {"mu_max", s.mu_max},
               {"argmax", s.argmax},
               {"rb", s.rb},
               {"ramanujan", d.holds},
               {"margin", d.margin}};
        if (show_values) j["eigenvalues"] = std::vector<double>(s.values.data(), s.values.data() + s.values.size());
        out << j.dump() << '\n';
        return;
      }
      out << "T = " << t.to_string() << ", valency " << to_string(s.valency) << '\n';
      out << "mu_max = " << real(s.mu_max) << " at j = " << s.argmax << '\n';
      out << "rb = " << real(s.rb) << '\n';
      out << "ramanujan = " << (d.holds ? "yes" : "no") << " (margin " << real(d.margin, 6) << ")\n";
      if (show_values) {
        for (Eigen::Index j = 0; j < s.values.size(); ++j) out << j << ' ' << real(s.values(j), 15) << '\n';
      }
    };
  });

  // table1
  auto* table1_cmd = app.add_subcommand("table1", "l0 and l-hat for odd 3 <= m <= 55");
  table1_cmd->add_flag("--oracle", use_oracle, "Compute l-hat by enumeration");
  table1_cmd->callback([&] {
    action = [&] {
      oracle_options.policy = g.policy();
      const auto rows = tables::table1(use_oracle, oracle_options);
      bool all = true;
      json arr = json::array();
      for (const auto& r : rows) {
        all = all && r.pass;
        if (g.json) {
          arr.push_back({{"m", r.m}, {"l0", r.l0 ? json(r.l0) : json(nullptr)}, {"hatl", r.hat_l},
                         {"expected_hatl", r.expected_hat_l}, {"pass", r.pass}});
        } else {
          out << std::setw(3) << r.m << "  l0 " << std::setw(2) << (r.l0 ? std::to_string(r.l0) : "-") << "  hat_l "
              << std::setw(2) << r.hat_l << "  printed " << std::setw(2) << r.expected_hat_l << "  "
              << pass_fail(r.pass) << '\n';
        }
      }
      if (g.json) {
        out << json{{"method", use_oracle ? "oracle" : "classify"}, {"rows", arr}, {"pass", all}}.dump() << '\n';
      } else {
        out << "table1 " << pass_fail(all) << '\n';
      }
    };
  });

  // table3
  auto* table3_cmd = app.add_subcommand("table3", "Exceptional markers of f_c(k) = k^2+5k+c");
  int kmax = golden::kMarkerLastK;
  table3_cmd->add_option("--kmax", kmax, "Largest k")->check(CLI::Range(4, 3'000'000));
  table3_cmd->callback([&] {
    action = [&] {
      const auto rows = tables::table3(kmax, g.policy());
      bool all = true;
      for (const auto& r : rows) all = all && r.pass;
      if (g.json) {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"k", r.k}, {"c", r.c}, {"m", int_json(r.m)}, {"marker", std::string(1, r.marker)},
                         {"printed", std::string(1, r.expected)}, {"pass", r.pass}});
        }
        out << json{{"kmax", kmax}, {"rows", arr}, {"pass", all}}.dump() << '\n';
        return;
      }
      out << "   k";
      for (int c : kFamilyConstants) out << std::setw(6) << c;
      out << "\n";
      for (std::size_t i = 0; i < rows.size(); i += kFamilyConstants.size()) {
        out << std::setw(4) << rows[i].k;
        bool row_ok = true;
        for (std::size_t j = 0; j < kFamilyConstants.size(); ++j) {
          out << std::setw(6) << rows[i + j].marker;
          row_ok = row_ok && rows[i + j].pass;
        }
        out << (row_ok ? "" : "  FAIL") << '\n';
      }
      out << "markers: 1 type I, 2 type II, 3 square, . ordinary, - not in J_c\n";
      out << "table3 " << pass_fail(all) << '\n';
    };
  });

  // table4..6
  auto margin_cmd = [&](const char* name, const golden::MarginTable& table, int min_digits) {
    auto* cmd = app.add_subcommand(name, "Margins mu_i - RB along a family of semiprimes");
    cmd->callback([&, name, min_digits] {
      action = [&, name, min_digits] {
        const int digits = std::max(g.precision, min_digits);
        const auto rows = tables::margin_table(table, digits);
        bool all = true;
        json arr = json::array();
        for (const auto& r : rows) {
          all = all && r.pass;
          if (g.json) {
            arr.push_back({{"y", r.y}, {"p", int_json(r.p)}, {"q", int_json(r.q)},
                           {"margins", r.margins}, {"match", r.match}, {"pass", r.pass}});
          } else {
            out << std::setw(4) << r.y << "  p " << to_string(r.p) << "  q " << to_string(r.q);
            for (double v : r.margins) out << "  " << std::scientific << std::setprecision(2) << v;
            out << std::defaultfloat << "  " << pass_fail(r.pass) << '\n';
          }
        }
        if (g.json) {
          out << json{{"table", name}, {"a", table.a}, {"c", table.c}, {"digits", digits}, {"rows", arr}, {"pass", all}}
                     .dump()
              << '\n';
        } else {
          out << name << " (a = " << table.a << ", c = " << table.c << ", " << digits << " digits) " << pass_fail(all)
              << '\n';
        }
      };
    });
  };
  margin_cmd("table4", golden::kTable4, 30);
  margin_cmd("table5", golden::kTable5, 30);
  margin_cmd("table6", golden::kTable6, 40);

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "Regime boundaries and asymptotic thresholds");
  gamma_cmd->callback([&] {
    action = [&] {
      const auto rows = tables::table2();
      const auto& t = thresholds();
      bool all = true;
      for (const auto& r : rows) all = all && r.pass;
      if (g.json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"name", r.name}, {"value", r.value}, {"pass", r.pass}});
        out << json{{"rows", arr}, {"x1", t.x1}, {"x2", t.x2}, {"xi1", t.xi1}, {"xi2", t.xi2}, {"pass", all}}.dump()
            << '\n';
        return;
      }
      for (const auto& r : rows) {
        if (r.name.rfind("order", 0) == 0) {
          out << std::setw(12) << r.name << "  xbar1 < gamma5 < xunder2  " << pass_fail(r.pass) << '\n';
        } else {
          out << std::setw(12) << r.name << "  " << std::fixed << std::setprecision(6) << r.value << "  printed "
              << std::setprecision(4) << r.printed << std::defaultfloat << "  " << pass_fail(r.pass) << '\n';
        }
      }
      out << "x1 = " << real(t.x1) << ", x2 = " << real(t.x2) << ", xi1 = " << real(t.xi1) << ", xi2 = " << real(t.xi2)
          << '\n';
      out << "gamma " << pass_fail(all) << '\n';
    };
  });

  // family
  auto* family_cmd = app.add_subcommand("family", "Points (p, q, k) of the family with p q = k^2 + 5k + c");
  std::int64_t fa = 1, ymax = 100;
  int fc = 1;
  bool prime_only = false;
  family_cmd->add_option("--a", fa)->required();
  family_cmd->add_option("--c", fc)->required();
  family_cmd->add_option("--ymax", ymax)->required();
  family_cmd->add_flag("--prime-only", prime_only, "Keep only y with p and q prime");
  family_cmd->callback([&] {
    action = [&] {
      const auto rows = family_scan(fa, fc, ymax, prime_only, g.policy());
      json arr = json::array();
      if (!g.json) out << "y,p,q,k,in_domain,p_prime,q_prime,x,kind,verdict\n";
      for (const auto& e : rows) {
        const auto& pt = e.point;
        const std::string kind = e.verdict ? e.verdict->kind.label() : "";
        const std::string verdict = e.verdict ? to_string(e.verdict->verdict) : "";
        if (g.json) {
          arr.push_back({{"y", pt.y}, {"p", int_json(pt.p)}, {"q", int_json(pt.q)}, {"k", int_json(pt.k)},
                         {"in_domain", pt.in_domain()}, {"p_prime", e.p_prime}, {"q_prime", e.q_prime},
                         {"x", pt.in_domain() ? json(pt.ratio_root()) : json(nullptr)},
                         {"kind", e.verdict ? json(kind) : json(nullptr)},
                         {"verdict", e.verdict ? json(verdict) : json(nullptr)}});
        } else {
          out << pt.y << ',' << to_string(pt.p) << ',' << to_string(pt.q) << ',' << to_string(pt.k) << ','
              << pt.in_domain() << ',' << e.p_prime << ',' << e.q_prime << ','
              << (pt.in_domain() ? real(pt.ratio_root(), 15) : "") << ',' << kind << ',' << verdict << '\n';
        }
      }
      if (g.json) out << json{{"a", fa}, {"c", fc}, {"ymax", ymax}, {"rows", arr}}.dump() << '\n';
    };
  });

  // count
  auto* count_cmd = app.add_subcommand("count", "Counting functions");
  count_cmd->require_subcommand(1);
  count_cmd->fallthrough();
  auto* count_exc = count_cmd->add_subcommand("exceptional", "Exceptional f_c(k) by type");
  std::int64_t count_kmax = 50;
  count_exc->add_option("--c", fc)->required();
  count_exc->add_option("--kmax", count_kmax)->required();
  count_exc->callback([&] {
    action = [&] {
      const auto r = count_exceptionals(fc, count_kmax, g.policy());
      if (g.json) {
        out << json{{"c", r.c}, {"kmin", r.k_min}, {"kmax", r.k_max}, {"typeI", r.type_I}, {"typeII", r.type_II},
                    {"typeIII", r.type_III}, {"typeII_ratio", r.type_II_ratio()}}
                   .dump()
            << '\n';
        return;
      }
      auto list = [&](const char* name, const std::vector<std::int64_t>& ks) {
        out << name << " (" << ks.size() << "):";
        for (auto k : ks) out << ' ' << k;
        out << '\n';
      };
      out << "c = " << r.c << ", " << r.k_min << " <= k <= " << r.k_max << '\n';
      list("type I", r.type_I);
      list("type II", r.type_II);
      list("type III", r.type_III);
      out << "type II / (x / log(x)^2) = " << real(r.type_II_ratio(), 6) << '\n';
    };
  });
  auto* count_p2 = count_cmd->add_subcommand("p2", "m <= x with m = p q, p < q < a p");
  double ratio_a = 2.0;
  std::uint64_t count_x = 1000;
  count_p2->add_option("--a", ratio_a)->required()->check(CLI::PositiveNumber);
  count_p2->add_option("--x", count_x)->required();
  count_p2->callback([&] {
    action = [&] {
      if (!(ratio_a > 1)) throw InvalidInput("a must exceed 1");
      const std::uint64_t n = count_p2_ratio(ratio_a, count_x);
      const double lx = std::log(static_cast<double>(count_x));
      const double normalized = count_x > 1 ? static_cast<double>(n) * lx * lx / static_cast<double>(count_x) : 0.0;
      if (g.json) {
        out << json{{"a", ratio_a}, {"x", count_x}, {"count", n}, {"normalized", normalized}}.dump() << '\n';
      } else {
        out << "count = " << n << "\ncount * log(x)^2 / x = " << real(normalized, 6) << '\n';
      }
    };
  });
  auto* count_poly_cmd = count_cmd->add_subcommand("poly", "k <= x with f(k) prime or a product of two distinct primes");
  std::string coeffs_text, mode_text = "prime";
  count_poly_cmd->add_option("--coeffs", coeffs_text, "Coefficients, leading first (1,0,1 is k^2+1)")->required();
  count_poly_cmd->add_option("--x", count_x)->required();
  count_poly_cmd->add_option("--mode", mode_text, "prime or semiprime");
  count_poly_cmd->callback([&] {
    action = [&] {
      std::vector<std::int64_t> coeffs;
      for (wide_int c : parse_wide_list(coeffs_text)) coeffs.push_back(narrow_int64(c, "coefficient"));
      const auto f = IntPolynomial::from_descending(coeffs);
      const auto r = count_poly(f, count_x, parse_mode(mode_text));
      if (g.json) {
        out << json{{"f", f.to_string()}, {"x", r.x}, {"mode", mode_text}, {"count", r.count},
                    {"landau_normalizer", r.landau_normalizer}}
                   .dump()
            << '\n';
      } else {
        out << "f = " << f.to_string() << "\ncount = " << r.count << "\nx log log x / log x = "
            << real(r.landau_normalizer, 6) << '\n';
      }
    };
  });

  // hlconst
  auto* hl_cmd = app.add_subcommand("hlconst", "Truncated Euler product for k^2 + 5k + c");
  std::uint64_t plimit = 10'000'000;
  hl_cmd->add_option("--c", fc)->required();
  hl_cmd->add_option("--plimit", plimit, "Largest prime in the product");
  hl_cmd->callback([&] {
    action = [&] {
      const auto r = hl_constant(fc, plimit);
      std::optional<double> printed;
      for (const auto& row : golden::kHardyLittlewood) {
        if (row.c == fc) printed = row.value;
      }
      const bool ok = printed && std::abs(r.value - *printed) <= golden::kHardyLittlewoodTolerance;
      if (g.json) {
        out << json{{"c", r.c}, {"plimit", r.prime_limit}, {"value", r.value}, {"oscillation", r.oscillation},
                    {"printed", opt_json(printed)}, {"pass", printed ? json(ok) : json(nullptr)}}
                   .dump()
            << '\n';
        return;
      }
      out << "C(" << r.c << ") = " << real(r.value, 8) << " +- " << real(r.oscillation, 2) << '\n';
      if (printed) {
        out << "printed " << *printed << " (tolerance " << golden::kHardyLittlewoodTolerance << ") " << pass_fail(ok)
            << '\n';
      }
    };
  });

  // abelian
  auto* abelian_cmd = app.add_subcommand("abelian", "l-hat of Z_m1 + ... + Z_mr");
  std::string orders_text;
  abelian_cmd->add_option("--orders", orders_text, "Comma-separated chain m1 | m2 | ...")->required();
  abelian_cmd->add_flag("--oracle", use_oracle, "Also enumerate (order at most 49)");
  abelian_cmd->callback([&] {
    action = [&] {
      std::vector<std::int64_t> orders;
      for (wide_int o : parse_wide_list(orders_text)) orders.push_back(narrow_int64(o, "order"));
      const AbelianGroup grp(orders);
      const auto r = abelian_hat_l(grp, g.policy());
      std::optional<std::int64_t> oracle;
      if (use_oracle) {
        oracle_options.policy = g.policy();
        oracle = abelian_oracle(grp, oracle_options);
      }
      if (g.json) {
        out << json{{"group", grp.to_string()}, {"order", grp.order()}, {"l0", r.l0}, {"hatl", r.hat_l},
                    {"all_ramanujan", r.all_ramanujan}, {"reason", r.reason}, {"oracle", opt_json(oracle)}}
                   .dump()
            << '\n';
        return;
      }
      out << grp.to_string() << " (order " << grp.order() << ")\n";
      out << "l0 = " << r.l0 << "\nhat_l = " << r.hat_l << (r.all_ramanujan ? " (every Cayley graph is Ramanujan)" : "")
          << '\n';
      out << "reason: " << r.reason << '\n';
      if (oracle) out << "oracle hat_l = " << *oracle << ' ' << pass_fail(*oracle == r.hat_l) << '\n';
    };
  });

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "Profile functions M0, M1, M2 and A on (1, 2)");
  std::int64_t pk = 100;
  int samples = 200;
  profile_cmd->add_option("--c", fc)->required();
  profile_cmd->add_option("--k", pk)->required();
  profile_cmd->add_option("--samples", samples)->check(CLI::Range(1, 10'000'000));
  profile_cmd->callback([&] {
    action = [&] {
      json arr = json::array();
      if (!g.json) out << "x,mu0,mu1,mu2,rb\n";
      for (int i = 1; i <= samples; ++i) {
        const double x = 1.0 + static_cast<double>(i) / (samples + 1);
        if (x == 1.5) continue;
        const auto pt = figure_profile(fc, pk, x);
        if (g.json) {
          arr.push_back({{"x", x}, {"mu0", pt.M0}, {"mu1", pt.M1}, {"mu2", pt.M2}, {"rb", pt.A}});
        } else {
          out << real(x, 15) << ',' << real(pt.M0, 15) << ',' << real(pt.M1, 15) << ',' << real(pt.M2, 15) << ','
              << real(pt.A, 15) << '\n';
        }
      }
      if (g.json) out << json{{"c", fc}, {"k", pk}, {"rows", arr}}.dump() << '\n';
    };
  });

  std::vector<const char*> argv{"ramanujan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (required " << e.required() << ")\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace ramanujan::cli
