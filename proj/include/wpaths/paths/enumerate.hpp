#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "wpaths/paths/path.hpp"

namespace wpaths {

/// Largest order enumerate_paths will accept per family.
struct EnumerationCaps {
  int catalan = 12;
  int motzkin = 14;
  int schroder = 10;

  int cap(Family f) const;
};

/// Every path of order n, each once, in lexicographic step order
/// (D < E < H < N < U). Throws ResourceError above the cap.
std::vector<LatticePath> enumerate_paths(Family family, int n, const EnumerationCaps& caps = {});

enum class LabelSite : std::uint8_t {
  Diagonal,  // every D step (Motzkin, Schroder)
  PeakE,     // every E that closes a peak (Catalan)
};

/// Each unlabeled path expanded into its 2^(sites) labelings, in path order
/// and, within a path, in binary order with the first label preferred from
/// the leftmost site.
std::vector<LatticePath> enumerate_labeled(Family family, int n, LabelSite site,
                                           std::pair<Label, Label> labels,
                                           const EnumerationCaps& caps = {});

namespace detail {

/// Visit every path of order n without materializing them. Same order and
/// caps as enumerate_paths.
void for_each_path(Family family, int n, const EnumerationCaps& caps,
                   const std::function<void(std::span<const Step>)>& visit);

}  // namespace detail

}  // namespace wpaths
