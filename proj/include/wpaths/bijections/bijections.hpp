#pragma once

#include <cstdint>
#include <string_view>

#include "wpaths/paths/path.hpp"

namespace wpaths {

/// Valley-type to even-north-type Catalan paths, order n to order n.
///
/// Every valley EN is first turned into a peak NE. The result then takes the
/// (modified) steps that sat at the original i-th N position and the
/// original i-th E position, alternately. The number of valleys of the input
/// becomes the number of N steps at even positions of the output, and the
/// valley-type weight of the input equals the even-north-type weight of the
/// output.
LatticePath phi(const LatticePath& p);

/// Inverse of phi, built directly from the valley points of the preimage:
/// the k-th odd-position E at position 2s-1 and the k-th even-position N at
/// position 2t give the valley point (t, s-1).
LatticePath phi_inverse(const LatticePath& q);

/// Even-north Catalan path of order n >= 1 to a Motzkin path of order n-1
/// whose D steps carry a or b. Steps 2i, 2i+1 pair up:
/// NN -> U, EE -> H, NE -> D[b], EN -> D[a].
LatticePath psi(const LatticePath& p);

/// Throws MalformedInput when a D step is unlabeled or a U/H step carries a
/// label.
LatticePath psi_inverse(const LatticePath& m);

/// Schroder path to a labeled Catalan path: each D becomes the peak N E[a],
/// each original E becomes E[b].
LatticePath schroder_to_peak(const LatticePath& s);

/// Collapses every peak N E[a] back into D. Throws MalformedInput on an
/// unlabeled peak E or a non-peak E labeled a. Unlabeled non-peak E steps
/// read as b.
LatticePath peak_to_schroder(const LatticePath& c);

enum class Bijection : std::uint8_t { Phi, PhiInv, Psi, PsiInv, SchToPeak, PeakToSch };

std::string_view bijection_name(Bijection b);
Bijection bijection_from_name(std::string_view name);

/// Family the bijection reads its input from.
Family bijection_domain(Bijection b);

LatticePath apply_bijection(Bijection b, const LatticePath& p);

}  // namespace wpaths
