#include "wpaths/bijections/bijections.hpp"

#include <string>
#include <vector>

#include "wpaths/error.hpp"

namespace wpaths {

namespace {

void require_family(const LatticePath& p, Family f, std::string_view what) {
  if (p.family() != f) {
    throw UsageError(std::string(what) + " expects a " + std::string(family_name(f)) +
                     " path, got " + std::string(family_name(p.family())));
  }
}

void require_unlabeled(const LatticePath& p, std::string_view what) {
  if (p.has_labels()) throw MalformedInput(std::string(what) + " expects an unlabeled path");
}

Step step(StepKind k, Label l = Label::None) { return Step{k, l}; }

}  // namespace

LatticePath phi(const LatticePath& p) {
  require_family(p, Family::Catalan, "phi");
  require_unlabeled(p, "phi");
  const std::size_t len = p.size();

  std::vector<std::size_t> north;
  std::vector<std::size_t> east;
  std::vector<StepKind> hat(len);
  for (std::size_t i = 0; i < len; ++i) {
    hat[i] = p[i].kind;
    (p[i].kind == StepKind::N ? north : east).push_back(i);
  }
  // Valleys never overlap, so flipping them in one pass is safe.
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (p[i].kind == StepKind::E && p[i + 1].kind == StepKind::N) {
      hat[i] = StepKind::N;
      hat[i + 1] = StepKind::E;
    }
  }

  std::vector<Step> out;
  out.reserve(len);
  for (std::size_t j = 0; j < north.size(); ++j) {
    out.push_back(step(hat[north[j]]));
    out.push_back(step(hat[east[j]]));
  }
  return LatticePath(Family::Catalan, std::move(out));
}

LatticePath phi_inverse(const LatticePath& q) {
  require_family(q, Family::Catalan, "phi_inverse");
  require_unlabeled(q, "phi_inverse");
  const int n = q.order();

  // 1-based: E at odd position 2s-1 gives s; N at even position 2t gives t.
  std::vector<int> s;
  std::vector<int> t;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (pos % 2 == 1 && q[i].kind == StepKind::E) s.push_back((pos + 1) / 2);
    if (pos % 2 == 0 && q[i].kind == StepKind::N) t.push_back(pos / 2);
  }

  // Walk through the valley points (t_i, s_i - 1): climb, run east, then
  // take the N step that closes the valley.
  std::vector<Step> out;
  out.reserve(q.size());
  int x = 0;
  int y = 0;
  auto run = [&out](StepKind k, int count) {
    for (int i = 0; i < count; ++i) out.push_back(step(k));
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    run(StepKind::N, s[i] - 1 - y);
    run(StepKind::E, t[i] - x);
    out.push_back(step(StepKind::N));
    x = t[i];
    y = s[i];
  }
  run(StepKind::N, n - y);
  run(StepKind::E, n - x);
  return LatticePath(Family::Catalan, std::move(out));
}

LatticePath psi(const LatticePath& p) {
  require_family(p, Family::Catalan, "psi");
  require_unlabeled(p, "psi");
  if (p.order() < 1) throw UsageError("psi requires a Catalan path of order >= 1");

  std::vector<Step> out;
  // 0-based pair (2i-1, 2i) is the 1-based pair (2i, 2i+1).
  for (std::size_t i = 1; i + 1 < p.size(); i += 2) {
    const StepKind first = p[i].kind;
    const StepKind second = p[i + 1].kind;
    if (first == StepKind::N && second == StepKind::N) {
      out.push_back(step(StepKind::U));
    } else if (first == StepKind::E && second == StepKind::E) {
      out.push_back(step(StepKind::H));
    } else if (first == StepKind::N) {
      out.push_back(step(StepKind::D, Label::b));
    } else {
      out.push_back(step(StepKind::D, Label::a));
    }
  }
  return LatticePath(Family::Motzkin, std::move(out));
}

LatticePath psi_inverse(const LatticePath& m) {
  require_family(m, Family::Motzkin, "psi_inverse");

  std::vector<Step> out{step(StepKind::N)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Step& s = m[i];
    const std::string where = " at step " + std::to_string(i + 1);
    switch (s.kind) {
      case StepKind::U:
        out.push_back(step(StepKind::N));
        out.push_back(step(StepKind::N));
        break;
      case StepKind::H:
        out.push_back(step(StepKind::E));
        out.push_back(step(StepKind::E));
        break;
      case StepKind::D:
        if (s.label == Label::b) {
          out.push_back(step(StepKind::N));
          out.push_back(step(StepKind::E));
        } else if (s.label == Label::a) {
          out.push_back(step(StepKind::E));
          out.push_back(step(StepKind::N));
        } else {
          throw MalformedInput("D step needs label a or b" + where);
        }
        break;
      default:
        break;
    }
    if (s.kind != StepKind::D && s.label != Label::None) {
      throw MalformedInput("unexpected label" + where);
    }
  }
  out.push_back(step(StepKind::E));
  return LatticePath(Family::Catalan, std::move(out));
}

LatticePath schroder_to_peak(const LatticePath& s) {
  require_family(s, Family::Schroder, "schroder_to_peak");
  require_unlabeled(s, "schroder_to_peak");

  std::vector<Step> out;
  out.reserve(2 * static_cast<std::size_t>(s.order()));
  for (const Step& st : s.steps()) {
    switch (st.kind) {
      case StepKind::N: out.push_back(step(StepKind::N)); break;
      case StepKind::E: out.push_back(step(StepKind::E, Label::b)); break;
      case StepKind::D:
        // The peak orientation N-then-E keeps the path on or above the
        // diagonal; E-then-N would leave it for a D starting on y = x.
        out.push_back(step(StepKind::N));
        out.push_back(step(StepKind::E, Label::a));
        break;
      default: break;
    }
  }
  return LatticePath(Family::Catalan, std::move(out));
}

LatticePath peak_to_schroder(const LatticePath& c) {
  require_family(c, Family::Catalan, "peak_to_schroder");

  std::vector<Step> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Step& st = c[i];
    const std::string where = " at step " + std::to_string(i + 1);
    if (st.kind == StepKind::N) {
      if (i + 1 < c.size() && c[i + 1].kind == StepKind::E) {
        const Label l = c[i + 1].label;
        if (l == Label::a) {
          out.push_back(step(StepKind::D));
          ++i;
          continue;
        }
        if (l != Label::b) {
          throw MalformedInput("peak E needs label a or b at step " + std::to_string(i + 2));
        }
      }
      out.push_back(step(StepKind::N));
    } else {
      if (st.label == Label::a) throw MalformedInput("non-peak E labeled a" + where);
      if (st.label != Label::b && st.label != Label::None) {
        throw MalformedInput("E label must be a or b" + where);
      }
      out.push_back(step(StepKind::E));
    }
  }
  return LatticePath(Family::Schroder, std::move(out));
}

namespace {

constexpr std::pair<Bijection, std::string_view> kBijectionNames[] = {
    {Bijection::Phi, "phi"},
    {Bijection::PhiInv, "phi-inv"},
    {Bijection::Psi, "psi"},
    {Bijection::PsiInv, "psi-inv"},
    {Bijection::SchToPeak, "sch-to-peak"},
    {Bijection::PeakToSch, "peak-to-sch"},
};

}  // namespace

std::string_view bijection_name(Bijection b) {
  for (const auto& [bij, name] : kBijectionNames) {
    if (bij == b) return name;
  }
  return "?";
}

Bijection bijection_from_name(std::string_view name) {
  for (const auto& [bij, n] : kBijectionNames) {
    if (n == name) return bij;
  }
  throw UsageError("unknown bijection '" + std::string(name) + "'");
}

Family bijection_domain(Bijection b) {
  switch (b) {
    case Bijection::PsiInv: return Family::Motzkin;
    case Bijection::SchToPeak: return Family::Schroder;
    default: return Family::Catalan;
  }
}

LatticePath apply_bijection(Bijection b, const LatticePath& p) {
  switch (b) {
    case Bijection::Phi: return phi(p);
    case Bijection::PhiInv: return phi_inverse(p);
    case Bijection::Psi: return psi(p);
    case Bijection::PsiInv: return psi_inverse(p);
    case Bijection::SchToPeak: return schroder_to_peak(p);
    case Bijection::PeakToSch: return peak_to_schroder(p);
  }
  throw UsageError("unknown bijection");
}

}  // namespace wpaths
