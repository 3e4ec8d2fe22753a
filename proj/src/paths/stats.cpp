#include "wpaths/paths/stats.hpp"

#include <string>

#include "wpaths/error.hpp"

namespace wpaths {

namespace {

StatRecord stats_of(Family family, std::span<const Step> steps) {
  StatRecord r;
  auto count = [&](StepKind k) {
    int c = 0;
    for (const Step& s : steps) c += s.kind == k ? 1 : 0;
    return c;
  };

  switch (family) {
    case Family::Catalan: {
      int valley = 0;
      int peak = 0;
      int enor = 0;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i + 1 < steps.size()) {
          if (steps[i].kind == StepKind::E && steps[i + 1].kind == StepKind::N) ++valley;
          if (steps[i].kind == StepKind::N && steps[i + 1].kind == StepKind::E) ++peak;
        }
        // 1-based position i+1 is even.
        if (i % 2 == 1 && steps[i].kind == StepKind::N) ++enor;
      }
      r.valley = valley;
      r.peak = peak;
      r.enor = enor;
      break;
    }
    case Family::Schroder:
      r.diag = count(StepKind::D);
      r.ea = count(StepKind::E);
      break;
    case Family::Motzkin:
      r.diag = count(StepKind::D);
      r.ea2 = count(StepKind::H);
      r.n2 = count(StepKind::U);
      break;
  }
  return r;
}

constexpr std::pair<Statistic, std::string_view> kStatNames[] = {
    {Statistic::Valley, "valley"}, {Statistic::Peak, "peak"}, {Statistic::Enor, "enor"},
    {Statistic::Diag, "diag"},     {Statistic::Ea, "ea"},     {Statistic::Ea2, "ea2"},
    {Statistic::N2, "n2"},
};

}  // namespace

StatRecord path_stats(const LatticePath& p) { return stats_of(p.family(), p.view()); }

std::string_view statistic_name(Statistic s) {
  for (const auto& [stat, name] : kStatNames) {
    if (stat == s) return name;
  }
  return "?";
}

Statistic statistic_from_name(std::string_view name) {
  for (const auto& [stat, n] : kStatNames) {
    if (n == name) return stat;
  }
  throw UsageError("unknown statistic '" + std::string(name) + "'");
}

bool statistic_applies(Statistic s, Family f) {
  switch (s) {
    case Statistic::Valley:
    case Statistic::Peak:
    case Statistic::Enor: return f == Family::Catalan;
    case Statistic::Diag: return f != Family::Catalan;
    case Statistic::Ea: return f == Family::Schroder;
    case Statistic::Ea2:
    case Statistic::N2: return f == Family::Motzkin;
  }
  return false;
}

std::optional<int> stat_value(const StatRecord& r, Statistic s) {
  switch (s) {
    case Statistic::Valley: return r.valley;
    case Statistic::Peak: return r.peak;
    case Statistic::Enor: return r.enor;
    case Statistic::Diag: return r.diag;
    case Statistic::Ea: return r.ea;
    case Statistic::Ea2: return r.ea2;
    case Statistic::N2: return r.n2;
  }
  return std::nullopt;
}

std::map<int, std::uint64_t> stat_histogram(Family family, int n, Statistic s,
                                            const EnumerationCaps& caps) {
  if (!statistic_applies(s, family)) {
    throw UsageError("statistic '" + std::string(statistic_name(s)) + "' does not apply to " +
                     std::string(family_name(family)) + " paths");
  }
  std::map<int, std::uint64_t> hist;
  detail::for_each_path(family, n, caps, [&](std::span<const Step> steps) {
    ++hist[*stat_value(stats_of(family, steps), s)];
  });
  return hist;
}

}  // namespace wpaths
