#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wpaths {

enum class Family : std::uint8_t { Catalan, Motzkin, Schroder };

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

/// Step kinds, declared in enumeration order.
///   N (0,1)  E (1,0)  D (1,1)  U (0,2)  H (2,0)
enum class StepKind : std::uint8_t { D, E, H, N, U };

enum class Label : std::uint8_t { None, a, b, a1, a2 };

char step_char(StepKind k);
std::string_view label_name(Label l);

/// Height is y - x; the path may never go below the diagonal.
int height_delta(StepKind k);
int x_advance(StepKind k);
int y_advance(StepKind k);

bool family_admits(Family f, StepKind k);

struct Step {
  StepKind kind;
  Label label = Label::None;

  friend auto operator<=>(const Step&, const Step&) = default;
};

/// A validated path from (0,0) to (n,n) that never dips below y = x.
///
/// Checking only the endpoint of each step is sufficient: the only step that
/// moves away from the diagonal in a single stroke is H = (2,0), and if its
/// endpoint has height >= 0 then its midpoint, one unit higher, does too.
class LatticePath {
 public:
  LatticePath() = default;  // empty Catalan path of order 0

  /// Throws PathError (with 1-based position) if a step is outside the
  /// family's alphabet, a prefix dips below the diagonal, or the path does
  /// not end on the diagonal.
  LatticePath(Family family, std::vector<Step> steps);

  Family family() const { return family_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::span<const Step> view() const { return steps_; }
  int order() const { return order_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const Step& operator[](std::size_t i) const { return steps_[i]; }

  bool has_labels() const;

  /// Word form, labels in brackets: `UHD[a]D[b]`.
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  Family family_ = Family::Catalan;
  std::vector<Step> steps_;
  int order_ = 0;
};

/// Parse the word grammar: step letters from {N,E,D,U,H}, each optionally
/// followed by a bracketed label from {a,b,a1,a2}. Only D and E take labels.
LatticePath parse_path(std::string_view word, Family family);

}  // namespace wpaths
