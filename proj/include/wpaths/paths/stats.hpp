#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "wpaths/paths/enumerate.hpp"
#include "wpaths/paths/path.hpp"

namespace wpaths {

/// Path statistics. Fields that do not apply to the path's family are empty.
struct StatRecord {
  std::optional<int> valley;  // Catalan: E immediately followed by N
  std::optional<int> peak;    // Catalan: N immediately followed by E
  std::optional<int> enor;    // Catalan: N steps at even (1-based) positions
  std::optional<int> diag;    // Motzkin, Schroder: D steps
  std::optional<int> ea;      // Schroder: E steps
  std::optional<int> ea2;     // Motzkin: H steps
  std::optional<int> n2;      // Motzkin: U steps

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord path_stats(const LatticePath& p);

enum class Statistic : std::uint8_t { Valley, Peak, Enor, Diag, Ea, Ea2, N2 };

std::string_view statistic_name(Statistic s);
Statistic statistic_from_name(std::string_view name);
bool statistic_applies(Statistic s, Family f);

std::optional<int> stat_value(const StatRecord& r, Statistic s);

/// k -> number of order-n paths whose statistic equals k. Throws UsageError
/// when the statistic does not apply to the family.
std::map<int, std::uint64_t> stat_histogram(Family family, int n, Statistic s,
                                            const EnumerationCaps& caps = {});

}  // namespace wpaths
