#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "wpaths/bijections/bijections.hpp"
#include "wpaths/error.hpp"
#include "wpaths/identities/verify.hpp"
#include "wpaths/numbers/numbers.hpp"
#include "wpaths/paths/enumerate.hpp"
#include "wpaths/paths/stats.hpp"
#include "wpaths/paths/weight.hpp"

namespace wpaths::cli {

namespace {

constexpr const char* kUsage =
    "usage: wpaths <enumerate|count|stats|weight|map|table|verify> [options]\n"
    "       wpaths <command> --help for the options of one command\n";

struct Options {
  std::string family;
  int order = -1;
  std::string stat;
  std::string scheme;
  std::string bijection;
  std::optional<std::string> path;
  std::vector<std::string> ids;
  std::optional<int> min_order;
  std::optional<int> max_order;
  bool json = false;
  std::string sequence;
  int max = -1;
};

void require_order(int n) {
  if (n < 0) throw UsageError("--order must be nonnegative");
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  require_order(o.order);
  for (const auto& p : enumerate_paths(family_from_name(o.family), o.order)) out << p.to_string() << '\n';
}

void cmd_count(const Options& o, std::ostream& out) {
  require_order(o.order);
  switch (family_from_name(o.family)) {
    case Family::Catalan: out << catalan(o.order) << '\n'; break;
    case Family::Motzkin: out << motzkin(o.order) << '\n'; break;
    case Family::Schroder: out << schroder(o.order) << '\n'; break;
  }
}

void cmd_stats(const Options& o, std::ostream& out) {
  require_order(o.order);
  auto hist = stat_histogram(family_from_name(o.family), o.order, statistic_from_name(o.stat));
  if (o.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, c] : hist) j[std::to_string(k)] = c;
    out << j.dump() << '\n';
    return;
  }
  std::uint64_t total = 0;
  for (const auto& [k, c] : hist) {
    out << k << ' ' << c << '\n';
    total += c;
  }
  out << "total " << total << '\n';
}

void cmd_weight(const Options& o, std::ostream& out) {
  WeightScheme s = scheme_from_name(o.scheme);
  if (o.path) {
    out << path_weight(parse_path(*o.path, scheme_family(s)), s).to_string() << '\n';
    return;
  }
  if (o.order < 0) throw UsageError("weight needs --path or --order");
  out << set_weight(scheme_family(s), o.order, s).to_string() << '\n';
}

void cmd_map(const Options& o, std::ostream& out) {
  Bijection b = bijection_from_name(o.bijection);
  LatticePath p = parse_path(*o.path, bijection_domain(b));
  out << apply_bijection(b, p).to_string() << '\n';
}

void cmd_table(const Options& o, std::ostream& out) {
  if (o.max < 0) throw UsageError("--max must be nonnegative");
  SequenceId s = sequence_from_name(o.sequence);
  for (int n = 0; n <= o.max; ++n) {
    switch (s) {
      case SequenceId::CatalanNum: out << n << ' ' << catalan(n) << '\n'; break;
      case SequenceId::MotzkinNum: out << n << ' ' << motzkin(n) << '\n'; break;
      case SequenceId::SchroderNum: out << n << ' ' << schroder(n) << '\n'; break;
      case SequenceId::Narayana:
        for (int k = 0; k < n; ++k) out << n << ' ' << k << ' ' << narayana(n, k) << '\n';
        break;
    }
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<IdentityEntry> selected;
  if (o.ids.empty()) {
    selected = catalog();
  } else {
    for (const auto& id : o.ids) selected.push_back(find_identity(id));
  }
  for (const auto& e : selected) {
    int lo = o.min_order.value_or(e.min_order);
    int hi = o.max_order.value_or(e.default_max_order);
    if (lo < e.min_order || hi > e.order_limit || lo > hi) {
      throw UsageError("orders " + std::to_string(lo) + ".." + std::to_string(hi) + " outside the domain of '" +
                       e.id + "' [" + std::to_string(e.min_order) + ", " + std::to_string(e.order_limit) + "]");
    }
  }
  VerifyOptions vo;
  vo.n_min = o.min_order;
  vo.n_max = o.max_order;
  auto reports = verify_entries(selected, vo);
  bool ok = aggregate_pass(reports);
  if (o.json) {
    out << to_json(reports).dump(2) << '\n';
    return ok ? 0 : 1;
  }
  for (const auto& r : reports) {
    out << r.id << ' ' << (r.pass ? "pass" : "fail");
    if (!r.orders.empty()) out << " n=" << r.orders.front().n << ".." << r.orders.back().n;
    if (r.expected == ExpectedStatus::PaperErratum) out << " (expected " << expected_name(r.expected) << ')';
    auto bad = std::find_if(r.orders.begin(), r.orders.end(), [](const OrderResult& x) { return !x.pass; });
    if (bad != r.orders.end()) out << " first failure n=" << bad->n << ": " << bad->witness;
    out << '\n';
  }
  out << "aggregate " << (ok ? "pass" : "fail") << '\n';
  return ok ? 0 : 1;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n' << kUsage;
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted lattice paths: enumeration, statistics, bijections and identities", "wpaths"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "catalan | motzkin | schroder")->required();
  };
  auto add_order = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--order", o.order, "path order n");
    if (required) opt->required();
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every path of one order");
  add_family(enumerate);
  add_order(enumerate, true);

  auto* count = app.add_subcommand("count", "number of paths of one order");
  add_family(count);
  add_order(count, true);

  auto* stats = app.add_subcommand("stats", "histogram of a statistic over all paths of one order");
  add_family(stats);
  add_order(stats, true);
  stats->add_option("--stat", o.stat, "valley | peak | enor | diag | ea | ea2 | n2")->required();
  stats->add_flag("--json", o.json, "print a JSON object");

  auto* weight = app.add_subcommand("weight", "weight of one path, or of all paths of one order");
  weight->add_option("--scheme", o.scheme,
                     "valley | even-north | peak | motzkin-ab | schroder-ab | peak-labeled | motzkin-labeled")
      ->required();
  add_order(weight, false);
  weight->add_option("--path", o.path, "path word");

  auto* map = app.add_subcommand("map", "apply a bijection to one path");
  map->add_option("--bijection", o.bijection, "phi | phi-inv | psi | psi-inv | sch-to-peak | peak-to-sch")
      ->required();
  map->add_option("--path", o.path, "path word")->required();

  auto* table = app.add_subcommand("table", "sequence values for n = 0..max");
  table->add_option("--sequence", o.sequence, "catalan | motzkin | schroder | narayana")->required();
  table->add_option("--max", o.max, "largest n")->required();

  auto* verify = app.add_subcommand("verify", "check catalog identities by exact evaluation");
  verify->add_option("--id", o.ids, "identity id (repeatable; default: whole catalog)");
  verify->add_option("--min-order", o.min_order, "first order checked");
  verify->add_option("--max-order", o.max_order, "last order checked");
  verify->add_flag("--json", o.json, "print a JSON array of reports");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage_error(err, e.what());
  }

  try {
    if (*enumerate) cmd_enumerate(o, out);
    else if (*count) cmd_count(o, out);
    else if (*stats) cmd_stats(o, out);
    else if (*weight) cmd_weight(o, out);
    else if (*map) cmd_map(o, out);
    else if (*table) cmd_table(o, out);
    else if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    return usage_error(err, e.what());
  } catch (const PathError& e) {
    return usage_error(err, e.what());
  } catch (const MalformedInput& e) {
    return usage_error(err, e.what());
  } catch (const ResourceError& e) {
    return usage_error(err, e.what());
  }
  return 0;
}

}  // namespace wpaths::cli
