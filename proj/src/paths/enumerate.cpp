#include "wpaths/paths/enumerate.hpp"

#include <string>

#include "wpaths/error.hpp"

namespace wpaths {

int EnumerationCaps::cap(Family f) const {
  switch (f) {
    case Family::Catalan: return catalan;
    case Family::Motzkin: return motzkin;
    case Family::Schroder: return schroder;
  }
  return 0;
}

namespace detail {

namespace {

struct Walker {
  int n;
  std::vector<StepKind> alphabet;
  const std::function<void(std::span<const Step>)>& visit;
  std::vector<Step> word;

  // From any point on or above the diagonal with x, y <= n the walk can
  // still reach (n,n), so bounding each step is enough to avoid dead ends.
  void walk(int x, int y) {
    if (x == n && y == n) {
      visit(word);
      return;
    }
    for (StepKind k : alphabet) {
      int nx = x + x_advance(k);
      int ny = y + y_advance(k);
      if (nx > n || ny > n || ny < nx) continue;
      word.push_back(Step{k});
      walk(nx, ny);
      word.pop_back();
    }
  }
};

}  // namespace

void for_each_path(Family family, int n, const EnumerationCaps& caps,
                   const std::function<void(std::span<const Step>)>& visit) {
  if (n < 0) throw UsageError("order must be nonnegative");
  if (n > caps.cap(family)) {
    throw ResourceError("order " + std::to_string(n) + " exceeds the " +
                        std::string(family_name(family)) + " enumeration cap of " +
                        std::to_string(caps.cap(family)));
  }
  Walker w{n, {}, visit, {}};
  for (StepKind k : {StepKind::D, StepKind::E, StepKind::H, StepKind::N, StepKind::U}) {
    if (family_admits(family, k)) w.alphabet.push_back(k);
  }
  w.word.reserve(static_cast<std::size_t>(2 * n));
  w.walk(0, 0);
}

}  // namespace detail

std::vector<LatticePath> enumerate_paths(Family family, int n, const EnumerationCaps& caps) {
  std::vector<LatticePath> out;
  detail::for_each_path(family, n, caps, [&](std::span<const Step> steps) {
    out.emplace_back(family, std::vector<Step>(steps.begin(), steps.end()));
  });
  return out;
}

namespace {

std::vector<std::size_t> label_sites(std::span<const Step> steps, LabelSite site) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (site == LabelSite::Diagonal && steps[i].kind == StepKind::D) sites.push_back(i);
    if (site == LabelSite::PeakE && steps[i].kind == StepKind::E && i > 0 &&
        steps[i - 1].kind == StepKind::N) {
      sites.push_back(i);
    }
  }
  return sites;
}

}  // namespace

std::vector<LatticePath> enumerate_labeled(Family family, int n, LabelSite site,
                                           std::pair<Label, Label> labels,
                                           const EnumerationCaps& caps) {
  if (site == LabelSite::Diagonal && family == Family::Catalan) {
    throw UsageError("Catalan paths have no D steps to label");
  }
  if (site == LabelSite::PeakE && family != Family::Catalan) {
    throw UsageError("peak-E labeling applies to Catalan paths only");
  }
  if (labels.first == Label::None || labels.second == Label::None) {
    throw UsageError("labels must be variables");
  }

  std::vector<LatticePath> out;
  detail::for_each_path(family, n, caps, [&](std::span<const Step> steps) {
    const auto sites = label_sites(steps, site);
    std::vector<Step> word(steps.begin(), steps.end());
    const std::size_t count = std::size_t{1} << sites.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      for (std::size_t j = 0; j < sites.size(); ++j) {
        // Leftmost site is the most significant bit.
        bool second = (mask >> (sites.size() - 1 - j)) & 1U;
        word[sites[j]].label = second ? labels.second : labels.first;
      }
      out.emplace_back(family, word);
    }
  });
  return out;
}

}  // namespace wpaths
