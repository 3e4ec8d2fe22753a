#include "wpaths/identities/verify.hpp"

#include <atomic>
#include <thread>
#include <type_traits>

#include "wpaths/error.hpp"

namespace wpaths {

namespace {

struct Checker {
  int n;
  OrderResult operator()(const PolySides& s) const {
    MultiPoly diff = s.lhs - s.rhs;
    if (diff.is_zero()) return {n, true, {}};
    return {n, false, diff.to_string()};
  }
  OrderResult operator()(const QuadSides& s) const {
    QuadExt diff = s.lhs - s.rhs;
    if (diff.is_zero()) return {n, true, {}};
    return {n, false, diff.to_string()};
  }
  OrderResult operator()(const CongruenceSides& s) const {
    for (const auto& c : s.checks) {
      Integer l = mod_floor(c.lhs, c.modulus);
      Integer r = mod_floor(c.rhs, c.modulus);
      if (l != r) {
        return {n, false, to_string(l) + " != " + to_string(r) + " (mod " + to_string(c.modulus) + ")"};
      }
    }
    return {n, true, {}};
  }
};

}  // namespace

OrderResult check_sides(int n, const Sides& sides) { return std::visit(Checker{n}, sides); }

VerifyReport verify_entry(const IdentityEntry& entry, int n_min, int n_max) {
  VerifyReport r;
  r.id = entry.id;
  r.kind = entry.kind;
  r.expected = entry.expected;
  r.pass = true;
  for (int n = n_min; n <= n_max; ++n) {
    r.orders.push_back(check_sides(n, entry.build(n)));
    r.pass = r.pass && r.orders.back().pass;
  }
  if (entry.expected == ExpectedStatus::Holds) {
    r.expectation_met = r.pass;
  } else {
    r.expectation_met = false;
    for (const auto& o : r.orders) {
      if (entry.counterexample_order && o.n == *entry.counterexample_order) r.expectation_met = !o.pass;
    }
  }
  return r;
}

VerifyReport verify_identity(std::string_view id, int n_min, int n_max) {
  const IdentityEntry& e = find_identity(id);
  if (n_min > n_max) throw UsageError("empty order range");
  if (n_min < e.min_order || n_max > e.order_limit) {
    throw UsageError("orders " + std::to_string(n_min) + ".." + std::to_string(n_max) +
                     " outside the domain of '" + e.id + "' [" + std::to_string(e.min_order) + ", " +
                     std::to_string(e.order_limit) + "]");
  }
  return verify_entry(e, n_min, n_max);
}

std::vector<VerifyReport> verify_entries(std::span<const IdentityEntry> entries, const VerifyOptions& options) {
  std::vector<VerifyReport> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const IdentityEntry& e = entries[i];
      int lo = std::max(e.min_order, options.n_min.value_or(e.min_order));
      int hi = options.n_max.value_or(e.default_max_order);
      if (auto it = options.n_max_overrides.find(e.id); it != options.n_max_overrides.end()) hi = it->second;
      hi = std::min(hi, e.order_limit);
      out[i] = verify_entry(e, lo, hi);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, entries.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

std::vector<VerifyReport> verify_all(const VerifyOptions& options) {
  return verify_entries(catalog(), options);
}

bool aggregate_pass(std::span<const VerifyReport> reports) {
  for (const auto& r : reports) {
    if (!r.expectation_met) return false;
  }
  return true;
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json orders = nlohmann::ordered_json::array();
  for (const auto& o : report.orders) {
    nlohmann::ordered_json j = {{"n", o.n}, {"status", o.pass ? "pass" : "fail"}};
    if (!o.pass) j["witness"] = o.witness;
    orders.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["identity"] = report.id;
  out["kind"] = kind_name(report.kind);
  out["orders"] = std::move(orders);
  out["status"] = report.pass ? "pass" : "fail";
  out["expected"] = expected_name(report.expected);
  return out;
}

nlohmann::ordered_json to_json(std::span<const VerifyReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace wpaths
