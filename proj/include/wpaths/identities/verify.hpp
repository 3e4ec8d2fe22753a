#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wpaths/identities/catalog.hpp"

namespace wpaths {

struct OrderResult {
  int n = 0;
  bool pass = false;
  /// lhs - rhs on failure (canonical polynomial, field element, or the two
  /// residues for a congruence); empty on success.
  std::string witness;
};

struct VerifyReport {
  std::string id;
  IdentityKind kind = IdentityKind::Polynomial;
  ExpectedStatus expected = ExpectedStatus::Holds;
  std::vector<OrderResult> orders;
  /// Every order passed.
  bool pass = false;
  /// Holds entries: pass. Erratum entries: the recorded counterexample order
  /// was checked and failed.
  bool expectation_met = false;
};

/// Exact comparison of the two sides; fills the witness on failure.
OrderResult check_sides(int n, const Sides& sides);

VerifyReport verify_entry(const IdentityEntry& entry, int n_min, int n_max);

/// Throws UsageError for an unknown id or a range outside the entry's domain.
VerifyReport verify_identity(std::string_view id, int n_min, int n_max);

struct VerifyOptions {
  std::optional<int> n_min;
  /// Applies to every entry unless overridden per id.
  std::optional<int> n_max;
  std::map<std::string, int> n_max_overrides;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Runs entries concurrently; reports come back in input order.
std::vector<VerifyReport> verify_entries(std::span<const IdentityEntry> entries,
                                         const VerifyOptions& options = {});

std::vector<VerifyReport> verify_all(const VerifyOptions& options = {});

/// True iff every report met its expectation.
bool aggregate_pass(std::span<const VerifyReport> reports);

nlohmann::ordered_json to_json(const VerifyReport& report);
nlohmann::ordered_json to_json(std::span<const VerifyReport> reports);

}  // namespace wpaths
