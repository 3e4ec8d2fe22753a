#include "wpaths/paths/weight.hpp"

#include <map>
#include <string>

#include "wpaths/error.hpp"

namespace wpaths {

namespace {

constexpr std::pair<WeightScheme, std::string_view> kSchemeNames[] = {
    {WeightScheme::Valley, "valley"},
    {WeightScheme::EvenNorth, "even-north"},
    {WeightScheme::Peak, "peak"},
    {WeightScheme::MotzkinAB, "motzkin-ab"},
    {WeightScheme::SchroderAB, "schroder-ab"},
    {WeightScheme::PeakLabeled, "peak-labeled"},
    {WeightScheme::MotzkinLabeled, "motzkin-labeled"},
};

Var label_var(Label l) {
  switch (l) {
    case Label::a: return Var::a;
    case Label::b: return Var::b;
    case Label::a1: return Var::a1;
    case Label::a2: return Var::a2;
    case Label::None: break;
  }
  throw MalformedInput("step has no label");
}

// Exponent vector of the single monomial a path weighs.
Monomial weight_monomial(std::span<const Step> steps, WeightScheme scheme) {
  std::array<unsigned, kVarCount> e{};
  auto bump = [&](Var v) { ++e[static_cast<std::size_t>(v)]; };
  const std::size_t len = steps.size();

  for (std::size_t i = 0; i < len; ++i) {
    const Step& s = steps[i];
    const bool next_is_n = i + 1 < len && steps[i + 1].kind == StepKind::N;
    const bool prev_is_n = i > 0 && steps[i - 1].kind == StepKind::N;

    switch (scheme) {
      case WeightScheme::Valley:
        if (s.kind == StepKind::E) bump(next_is_n ? Var::b : Var::a);
        break;
      case WeightScheme::EvenNorth:
        if (i % 2 == 1) bump(s.kind == StepKind::E ? Var::a : Var::b);
        break;
      case WeightScheme::Peak:
        if (s.kind == StepKind::E) bump(prev_is_n ? Var::b : Var::a);
        break;
      case WeightScheme::MotzkinAB:
        if (s.kind == StepKind::D) bump(Var::a);
        if (s.kind == StepKind::H) bump(Var::b);
        break;
      case WeightScheme::SchroderAB:
        if (s.kind == StepKind::D) bump(Var::a);
        if (s.kind == StepKind::E) bump(Var::b);
        break;
      case WeightScheme::PeakLabeled:
        if (s.kind != StepKind::E) break;
        if (s.label != Label::None) {
          bump(label_var(s.label));
        } else if (prev_is_n) {
          throw MalformedInput("peak E at step " + std::to_string(i + 1) + " has no label");
        } else {
          bump(Var::b);
        }
        break;
      case WeightScheme::MotzkinLabeled:
        if (s.kind == StepKind::D) {
          if (s.label == Label::None) {
            throw MalformedInput("D at step " + std::to_string(i + 1) + " has no label");
          }
          bump(label_var(s.label));
        }
        if (s.kind == StepKind::U) bump(Var::b);
        if (s.kind == StepKind::H) bump(Var::a);
        break;
    }
  }

  Monomial m;
  for (Var v : kAllVars) {
    if (e[static_cast<std::size_t>(v)] > 0) m = m * Monomial::of(v, e[static_cast<std::size_t>(v)]);
  }
  return m;
}

void require_family(WeightScheme scheme, Family family) {
  if (scheme_family(scheme) != family) {
    throw UsageError("scheme '" + std::string(scheme_name(scheme)) + "' applies to " +
                     std::string(family_name(scheme_family(scheme))) + " paths, not " +
                     std::string(family_name(family)));
  }
}

}  // namespace

std::string_view scheme_name(WeightScheme s) {
  for (const auto& [scheme, name] : kSchemeNames) {
    if (scheme == s) return name;
  }
  return "?";
}

WeightScheme scheme_from_name(std::string_view name) {
  for (const auto& [scheme, n] : kSchemeNames) {
    if (n == name) return scheme;
  }
  throw UsageError("unknown weight scheme '" + std::string(name) + "'");
}

Family scheme_family(WeightScheme s) {
  switch (s) {
    case WeightScheme::MotzkinAB:
    case WeightScheme::MotzkinLabeled: return Family::Motzkin;
    case WeightScheme::SchroderAB: return Family::Schroder;
    default: return Family::Catalan;
  }
}

bool scheme_is_labeled(WeightScheme s) {
  return s == WeightScheme::PeakLabeled || s == WeightScheme::MotzkinLabeled;
}

MultiPoly path_weight(const LatticePath& p, WeightScheme scheme) {
  require_family(scheme, p.family());
  return MultiPoly::term(1, weight_monomial(p.view(), scheme));
}

MultiPoly set_weight(Family family, int n, WeightScheme scheme, const EnumerationCaps& caps) {
  require_family(scheme, family);

  std::map<Monomial, std::uint64_t, DisplayOrder> tally;
  if (scheme_is_labeled(scheme)) {
    const LabelSite site =
        scheme == WeightScheme::PeakLabeled ? LabelSite::PeakE : LabelSite::Diagonal;
    for (const LatticePath& p : enumerate_labeled(family, n, site, {Label::a, Label::b}, caps)) {
      ++tally[weight_monomial(p.view(), scheme)];
    }
  } else {
    detail::for_each_path(family, n, caps, [&](std::span<const Step> steps) {
      ++tally[weight_monomial(steps, scheme)];
    });
  }

  MultiPoly total;
  for (const auto& [m, count] : tally) {
    total += MultiPoly::term(Rational(static_cast<unsigned long>(count)), m);
  }
  return total;
}

}  // namespace wpaths
