// Acceptance checks, one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "wpaths/bijections/bijections.hpp"
#include "wpaths/identities/catalog.hpp"
#include "wpaths/identities/verify.hpp"
#include "wpaths/numbers/numbers.hpp"
#include "wpaths/paths/enumerate.hpp"
#include "wpaths/paths/stats.hpp"
#include "wpaths/paths/weight.hpp"

using namespace wpaths;

namespace {

constexpr double kCountingBudgetSeconds = 60.0;
constexpr double kIdentityBudgetSeconds = 300.0;

// Values stated in the requirements. The Schroder value is not S_10 (the
// enumeration and both closed forms give 1037718); the check is kept
// verbatim and reported rather than edited.
const Integer kStatedC12 = 208012;
const Integer kStatedM14 = 113634;
const Integer kStatedS10 = 103049;
const std::string kStatedCountOutput = "103049\n";

struct Outcome {
  bool pass = true;
  // True when the only failing check is a stated value that contradicts
  // the closed forms.
  bool stated_value_only = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    stated_value_only = false;
    note(what);
  }
  void check_stated(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    note(what);
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Integer big(oracle::u64 v) { return Integer(std::to_string(v)); }

Outcome counting() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  struct Row {
    Family f;
    int max;
  };
  for (Row r : {Row{Family::Catalan, 12}, Row{Family::Motzkin, 14}, Row{Family::Schroder, 10}}) {
    for (int n = 0; n <= r.max; ++n) {
      Integer closed, recurrence;
      switch (r.f) {
        case Family::Catalan:
          closed = catalan(n);
          recurrence = big(oracle::catalan_grid(n));
          break;
        case Family::Motzkin:
          closed = motzkin(n);
          recurrence = motzkin_recurrence(n);
          break;
        case Family::Schroder:
          closed = schroder(n);
          recurrence = schroder_recurrence(n);
          break;
      }
      std::uint64_t count = 0;
      detail::for_each_path(r.f, n, {}, [&](std::span<const Step>) { ++count; });
      std::string tag = std::string(family_name(r.f)) + " n=" + std::to_string(n);
      o.check(closed == recurrence, tag + " closed form != recurrence");
      o.check(Integer(std::to_string(count)) == closed, tag + " enumerated " + std::to_string(count));
    }
  }
  o.check(catalan(12) == kStatedC12, "C_12 = " + catalan(12).get_str());
  o.check(motzkin(14) == kStatedM14, "M_14 = " + motzkin(14).get_str());
  Integer s10 = 0;
  detail::for_each_path(Family::Schroder, 10, {}, [&](std::span<const Step>) { ++s10; });
  o.check_stated(s10 == kStatedS10, "S_10 enumerated " + s10.get_str() + ", stated " + kStatedS10.get_str());
  double t = seconds_since(t0);
  o.check(t < kCountingBudgetSeconds, "runtime " + std::to_string(t) + " s");
  o.note("C_12=" + catalan(12).get_str() + " M_14=" + motzkin(14).get_str() + " S_10=" + s10.get_str());
  return o;
}

Outcome distributions() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    auto v = stat_histogram(Family::Catalan, n, Statistic::Valley);
    auto e = stat_histogram(Family::Catalan, n, Statistic::Enor);
    for (int k = 0; k < n; ++k) {
      o.check(v[k] == oracle::narayana(n, k), "valley n=" + std::to_string(n));
      o.check(e[k] == oracle::narayana(n, k), "enor n=" + std::to_string(n));
    }
    o.check(v.size() == static_cast<std::size_t>(n) && e.size() == static_cast<std::size_t>(n),
            "support n=" + std::to_string(n));
  }
  for (int n = 1; n <= 9; ++n) {
    auto ea = stat_histogram(Family::Schroder, n, Statistic::Ea);
    auto dg = stat_histogram(Family::Schroder, n, Statistic::Diag);
    for (int k = 0; k <= n; ++k) {
      o.check(ea[k] == oracle::binom(n + k, 2 * k) * oracle::kCatalan[k], "E steps n=" + std::to_string(n));
      o.check(dg[k] == oracle::binom(n, k) * oracle::binom(2 * n - k, n - 1) / n, "D steps n=" + std::to_string(n));
    }
  }
  o.note("Narayana rows n<=10, Schroder E/D rows n<=9");
  return o;
}

// Transfer-matrix weight of valley-type Catalan paths: an E step is priced
// when the next step is known.
MultiPoly catalan_valley_dp(int n) {
  const MultiPoly a = MultiPoly::variable(Var::a), b = MultiPoly::variable(Var::b);
  // f[x][y][pending]: pending = 1 when the last step was an unpriced E.
  std::vector<std::vector<std::array<MultiPoly, 2>>> f(n + 1, std::vector<std::array<MultiPoly, 2>>(n + 1));
  f[0][0][0] = 1;
  for (int x = 0; x <= n; ++x) {
    for (int y = x; y <= n; ++y) {
      for (int s = 0; s < 2; ++s) {
        const MultiPoly& w = f[x][y][s];
        if (w.is_zero()) continue;
        if (y < n) f[x][y + 1][0] += s ? w * b : w;
        if (x < y) f[x + 1][y][1] += s ? w * a : w;
      }
    }
  }
  return f[n][n][0] + f[n][n][1] * a;
}

Outcome triple_oracle() {
  Outcome o;
  for (int n = 0; n <= 10; ++n) {
    std::string t = " n=" + std::to_string(n);
    MultiPoly m = set_weight(Family::Motzkin, n, WeightScheme::MotzkinAB);
    o.check(m == motzkin_poly(n) && m == motzkin_poly_dp(n), "motzkin" + t);
    MultiPoly s = set_weight(Family::Schroder, n, WeightScheme::SchroderAB);
    o.check(s == schroder_poly(n) && s == schroder_poly_dp(n), "schroder" + t);
    MultiPoly c = set_weight(Family::Catalan, n, WeightScheme::Valley);
    o.check(c == catalan_valley_poly(n) && c == catalan_valley_dp(n), "catalan valley" + t);
  }
  o.note("enumeration = closed form = recurrence for n<=10");
  return o;
}

Outcome bijection_suite() {
  Outcome o;
  const MultiPoly a = MultiPoly::variable(Var::a);
  std::uint64_t cases = 0;
  for (int n = 0; n <= 10; ++n) {
    std::set<std::string> phi_image, psi_image;
    for (const auto& p : enumerate_paths(Family::Catalan, n)) {
      LatticePath q = phi(p);
      o.check(phi_inverse(q) == p, "phi round trip " + p.to_string());
      o.check(path_stats(q).enor == path_stats(p).valley, "enor(phi) != valley " + p.to_string());
      o.check(path_weight(q, WeightScheme::EvenNorth) == path_weight(p, WeightScheme::Valley),
              "phi weight " + p.to_string());
      phi_image.insert(q.to_string());
      ++cases;
      if (n == 0) continue;
      LatticePath m = psi(p);
      o.check(psi_inverse(m) == p, "psi round trip " + p.to_string());
      o.check(path_weight(p, WeightScheme::EvenNorth) == a * path_weight(m, WeightScheme::MotzkinLabeled),
              "psi weight " + p.to_string());
      psi_image.insert(m.to_string());
      ++cases;
    }
    o.check(phi_image.size() == oracle::kCatalan[n], "phi not injective n=" + std::to_string(n));
    if (n > 0) {
      auto labeled = enumerate_labeled(Family::Motzkin, n - 1, LabelSite::Diagonal, {Label::a, Label::b});
      o.check(psi_image.size() == labeled.size(), "psi not onto n=" + std::to_string(n));
      for (const auto& m : labeled) {
        o.check(psi(psi_inverse(m)) == m, "psi inverse round trip " + m.to_string());
        ++cases;
      }
    }
  }
  for (int n = 0; n <= 9; ++n) {
    detail::for_each_path(Family::Schroder, n, {}, [&](std::span<const Step> steps) {
      LatticePath s(Family::Schroder, {steps.begin(), steps.end()});
      LatticePath c = schroder_to_peak(s);
      o.check(peak_to_schroder(c) == s, "schroder round trip " + s.to_string());
      o.check(path_weight(c, WeightScheme::PeakLabeled) == path_weight(s, WeightScheme::SchroderAB),
              "schroder weight " + s.to_string());
      ++cases;
    });
  }
  o.note(std::to_string(cases) + " paths; phi/psi n<=10, Schroder n<=9");
  return o;
}

Outcome identity_suite() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto reports = verify_all();
  int holds = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (r.expected != ExpectedStatus::Holds) continue;
    ++holds;
    o.check(r.pass, r.id + " failed");
    o.check(r.orders.back().n >= catalog()[i].default_max_order, r.id + " short range");
  }
  o.check(holds >= 43, "only " + std::to_string(holds) + " holding entries");
  double t = seconds_since(t0);
  o.check(t < kIdentityBudgetSeconds, "runtime " + std::to_string(t) + " s");
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << holds << " holding entries pass in " << t << " s";
  o.note(os.str());
  return o;
}

Outcome erratum_suite() {
  Outcome o;
  auto r = verify_identity("cong_7_paper", 1, 1);
  o.check(!r.pass && r.orders.at(0).witness == "1 != 6 (mod 7)", "cong_7_paper at n=1: " + r.orders.at(0).witness);
  auto full = verify_identity("cong_7_paper", 0, 200);
  int first = -1;
  for (const auto& x : full.orders) {
    if (!x.pass) {
      first = x.n;
      break;
    }
  }
  o.check(first == 1, "cong_7_paper first failure at n=" + std::to_string(first));
  o.check(full.expectation_met, "cong_7_paper expectation");
  o.check(verify_identity("cong_7_corrected", 0, 200).pass, "cong_7_corrected");
  o.check(verify_identity("scsqrt2", 1, 20).pass, "scsqrt2 from k=0");
  o.check(verify_identity("cmcorsch", 1, 12).pass, "cmcorsch from k=0");
  o.check(!check_sides(2, uncorrected_sides(UncorrectedForm::Scsqrt2FromK1, 2)).pass, "scsqrt2 from k=1 at n=2");
  o.note("cong_7_paper witness 1 != 6 (mod 7); k=1 variant fails at n=2");
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_goldens() {
  Outcome o;
  auto run = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream os, es;
    int code = cli::run(args, os, es);
    out = os.str();
    return code;
  };
  std::string out;
  int code = run({"count", "--family", "schroder", "--order", "10"}, out);
  o.check(code == 0, "count exit " + std::to_string(code));
  o.check_stated(out == kStatedCountOutput, "count printed " + out.substr(0, out.size() - 1) + ", stated 103049");
  code = run({"map", "--bijection", "phi", "--path", "NENNENEENNEE"}, out);
  o.check(code == 0 && out == "NNENNEENEENE\n", "map printed " + out);
  code = run({"verify", "--id", "cm", "--max-order", "8", "--json"}, out);
  o.check(code == 0, "verify exit " + std::to_string(code));
  o.check(out == read_file(std::string(WPATHS_GOLDEN_DIR) + "/verify_cm_8.json"), "verify output differs from golden");
  o.check(out.find("\"fail\"") == std::string::npos, "verify reported a failure");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 counting", counting},         {"2 distributions", distributions}, {"3 triple oracle", triple_oracle},
      {"4 bijections", bijection_suite}, {"5 identities", identity_suite},  {"6 errata", erratum_suite},
      {"7 cli goldens", cli_goldens},
  };
  int failed = 0, unexplained = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << o.detail << '\n';
    if (!o.pass) {
      ++failed;
      if (!o.stated_value_only) ++unexplained;
    }
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass";
  if (failed > unexplained) {
    std::cout << "; " << failed - unexplained << " fail only on the stated S_10 = 103049 (S_10 is 1037718)";
  }
  std::cout << '\n';
  return unexplained == 0 ? 0 : 1;
}
