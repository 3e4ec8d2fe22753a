#pragma once

#include <cstdint>
#include <string_view>

#include "wpaths/paths/enumerate.hpp"
#include "wpaths/paths/path.hpp"
#include "wpaths/poly/multipoly.hpp"

namespace wpaths {

/// Rules assigning a weight variable to each step; a path weighs the product
/// of its step weights. Steps not mentioned weigh 1.
///
///   Valley          Catalan   E followed by N -> b, other E -> a
///   EvenNorth       Catalan   even position: E -> a, N -> b
///   Peak            Catalan   E preceded by N -> b, other E -> a
///   MotzkinAB       Motzkin   D -> a, H -> b
///   SchroderAB      Schroder  D -> a, E -> b
///   PeakLabeled     Catalan   labeled E -> its label, unlabeled non-peak E -> b
///   MotzkinLabeled  Motzkin   D -> its label, U -> b, H -> a
///
/// The labeled rules describe the two split-weight families used by the
/// bijections: peak-type Catalan paths whose peaks carry a or b over a base
/// weight b, and Motzkin paths whose D steps carry a or b with U -> b, H -> a.
enum class WeightScheme : std::uint8_t {
  Valley,
  EvenNorth,
  Peak,
  MotzkinAB,
  SchroderAB,
  PeakLabeled,
  MotzkinLabeled,
};

std::string_view scheme_name(WeightScheme s);
WeightScheme scheme_from_name(std::string_view name);
Family scheme_family(WeightScheme s);
bool scheme_is_labeled(WeightScheme s);

/// Throws UsageError on a family mismatch and MalformedInput when a labeled
/// scheme meets an unlabeled label site.
MultiPoly path_weight(const LatticePath& p, WeightScheme scheme);

/// Sum of path_weight over all order-n paths. Labeled schemes sum over
/// enumerate_labeled with labels (a, b).
MultiPoly set_weight(Family family, int n, WeightScheme scheme, const EnumerationCaps& caps = {});

}  // namespace wpaths
