#include "wpaths/paths/path.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "wpaths/error.hpp"

namespace wpaths {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Catalan: return "catalan";
    case Family::Motzkin: return "motzkin";
    case Family::Schroder: return "schroder";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::Catalan, Family::Motzkin, Family::Schroder}) {
    if (family_name(f) == name) return f;
  }
  throw UsageError("unknown family '" + std::string(name) + "'");
}

char step_char(StepKind k) {
  constexpr std::array<char, 5> chars = {'D', 'E', 'H', 'N', 'U'};
  return chars[static_cast<std::size_t>(k)];
}

std::string_view label_name(Label l) {
  switch (l) {
    case Label::None: return "";
    case Label::a: return "a";
    case Label::b: return "b";
    case Label::a1: return "a1";
    case Label::a2: return "a2";
  }
  return "?";
}

int height_delta(StepKind k) { return y_advance(k) - x_advance(k); }

int x_advance(StepKind k) {
  switch (k) {
    case StepKind::E:
    case StepKind::D: return 1;
    case StepKind::H: return 2;
    case StepKind::N:
    case StepKind::U: return 0;
  }
  return 0;
}

int y_advance(StepKind k) {
  switch (k) {
    case StepKind::N:
    case StepKind::D: return 1;
    case StepKind::U: return 2;
    case StepKind::E:
    case StepKind::H: return 0;
  }
  return 0;
}

bool family_admits(Family f, StepKind k) {
  switch (f) {
    case Family::Catalan: return k == StepKind::N || k == StepKind::E;
    case Family::Schroder: return k == StepKind::N || k == StepKind::E || k == StepKind::D;
    case Family::Motzkin: return k == StepKind::U || k == StepKind::H || k == StepKind::D;
  }
  return false;
}

LatticePath::LatticePath(Family family, std::vector<Step> steps)
    : family_(family), steps_(std::move(steps)) {
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    if (!family_admits(family_, s.kind)) {
      throw PathError(std::string("step '") + step_char(s.kind) + "' not allowed in a " +
                          std::string(family_name(family_)) + " path",
                      i + 1);
    }
    if (s.label != Label::None && s.kind != StepKind::D && s.kind != StepKind::E) {
      throw PathError(std::string("label not allowed on step '") + step_char(s.kind) + "'", i + 1);
    }
    x += x_advance(s.kind);
    y += y_advance(s.kind);
    if (y < x) throw PathError("prefix below diagonal", i + 1);
  }
  if (x != y) throw PathError("path does not end on the diagonal", steps_.size());
  order_ = x;
}

bool LatticePath::has_labels() const {
  return std::any_of(steps_.begin(), steps_.end(),
                     [](const Step& s) { return s.label != Label::None; });
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (const Step& s : steps_) {
    out += step_char(s.kind);
    if (s.label != Label::None) {
      out += '[';
      out += label_name(s.label);
      out += ']';
    }
  }
  return out;
}

namespace {

std::optional<StepKind> kind_from_char(char c) {
  switch (c) {
    case 'D': return StepKind::D;
    case 'E': return StepKind::E;
    case 'H': return StepKind::H;
    case 'N': return StepKind::N;
    case 'U': return StepKind::U;
    default: return std::nullopt;
  }
}

Label label_from_text(std::string_view text, std::size_t position) {
  for (Label l : {Label::a, Label::b, Label::a1, Label::a2}) {
    if (label_name(l) == text) return l;
  }
  throw PathError("unknown label '" + std::string(text) + "'", position);
}

}  // namespace

LatticePath parse_path(std::string_view word, Family family) {
  std::vector<Step> steps;
  std::size_t i = 0;
  while (i < word.size()) {
    const std::size_t position = steps.size() + 1;
    auto kind = kind_from_char(word[i]);
    if (!kind) throw PathError(std::string("invalid character '") + word[i] + "'", position);
    ++i;
    Step step{*kind};
    if (i < word.size() && word[i] == '[') {
      std::size_t close = word.find(']', i);
      if (close == std::string_view::npos) throw PathError("unterminated label", position);
      step.label = label_from_text(word.substr(i + 1, close - i - 1), position);
      i = close + 1;
    }
    steps.push_back(step);
  }
  return LatticePath(family, std::move(steps));
}

}  // namespace wpaths
