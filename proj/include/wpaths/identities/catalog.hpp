#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wpaths/poly/multipoly.hpp"
#include "wpaths/poly/quadext.hpp"
#include "wpaths/poly/rational.hpp"

namespace wpaths {

enum class IdentityKind : std::uint8_t { Polynomial, Quad, Congruence };
enum class ExpectedStatus : std::uint8_t { Holds, PaperErratum };

std::string_view kind_name(IdentityKind k);          // polynomial | quad | congruence
std::string_view expected_name(ExpectedStatus s);    // holds | paper-erratum

/// Both sides of a polynomial identity, with any common denominator already
/// multiplied through so both sides have integer coefficients.
struct PolySides {
  MultiPoly lhs;
  MultiPoly rhs;
};

struct QuadSides {
  QuadExt lhs;
  QuadExt rhs;
};

struct CongruenceCheck {
  Integer lhs;
  Integer rhs;
  Integer modulus;
};

/// One order of a congruence identity may bundle several moduli.
struct CongruenceSides {
  std::vector<CongruenceCheck> checks;
};

using Sides = std::variant<PolySides, QuadSides, CongruenceSides>;

struct IdentityEntry {
  std::string id;
  std::string description;
  IdentityKind kind = IdentityKind::Polynomial;
  long discriminant = 0;  // Quad entries only
  int min_order = 0;
  int default_max_order = 0;
  /// Largest order the builder supports (enumeration caps for entries that
  /// sum over paths).
  int order_limit = 1000;
  std::function<Sides(int)> build;
  ExpectedStatus expected = ExpectedStatus::Holds;
  std::string corrected_id;                // PaperErratum only
  std::optional<int> counterexample_order; // PaperErratum only
};

/// Every identity, in a stable order.
const std::vector<IdentityEntry>& catalog();

/// Throws UsageError for an unknown id.
const IdentityEntry& find_identity(std::string_view id);

/// Throws UsageError for an unknown id or an order outside
/// [min_order, order_limit].
Sides build_sides(std::string_view id, int n);

/// Sides of cm, sc and sm rebuilt from path enumeration rather than closed
/// forms. Throws UsageError for other ids.
PolySides build_sides_by_enumeration(std::string_view id, int n);

/// Forms that differ from a catalog entry by a transcription slip in the
/// source literature. They are kept so tests can show each slip really
/// breaks the identity.
enum class UncorrectedForm : std::uint8_t {
  CokerNarayanaWithoutXk,    // coker_narayana without the x^k factor; fails at n = 3
  CmcorschFromK1,            // cmcorsch summed from k = 1; fails at n = 1
  Scsqrt2FromK1,             // scsqrt2 summed from k = 1; fails at n = 1 and n = 2
  MsAlphaBetaIndexShifted,   // ms_alphabeta with n+1 in place of n+2; fails at n = 0
};

Sides uncorrected_sides(UncorrectedForm form, int n);

}  // namespace wpaths
