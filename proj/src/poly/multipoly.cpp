#include "wpaths/poly/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "wpaths/error.hpp"

namespace wpaths {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"a", "a1", "a2", "al", "b", "be", "x"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

Var var_from_name(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return v;
  }
  throw UsageError("unknown variable '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned exponent) {
  Monomial m;
  m.exps_[idx(v)] = static_cast<std::uint16_t>(exponent);
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw UsageError("exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (Var v : kAllVars) {
    unsigned e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool DisplayOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  unsigned dl = lhs.degree();
  unsigned dr = rhs.degree();
  if (dl != dr) return dl > dr;
  return lhs.exponents() > rhs.exponents();
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

MultiPoly::MultiPoly(const Integer& constant) : MultiPoly(Rational(constant)) {}

MultiPoly::MultiPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(Var v) { return term(1, Monomial::of(v)); }

MultiPoly MultiPoly::term(const Rational& coefficient, const Monomial& monomial) {
  MultiPoly p;
  p.add_term(monomial, coefficient);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw UsageError("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree() const {
  // Display order puts the highest degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool MultiPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly r;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) r.add_term(ml * mr, cl * cr);
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    Rational mag = abs(c);
    if (m.is_constant()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += mag.get_str() + "*" + m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = 1;
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

// Lazily extended table of powers q^0, q^1, ...
class PowerCache {
 public:
  explicit PowerCache(const MultiPoly& base) : powers_{MultiPoly(1)}, base_(base) {}

  const MultiPoly& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  std::vector<MultiPoly> powers_;
  MultiPoly base_;
};

}  // namespace

MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& replacements) {
  std::map<Var, PowerCache> caches;
  for (const auto& [v, q] : replacements) caches.emplace(v, PowerCache(q));

  MultiPoly result;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    MultiPoly factor = c;
    for (Var v : kAllVars) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      auto it = caches.find(v);
      if (it == caches.end()) {
        kept = kept * Monomial::of(v, e);
      } else {
        factor *= it->second.get(e);
      }
    }
    result += factor * MultiPoly::term(1, kept);
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, Var var, const MultiPoly& replacement) {
  return substitute(p, std::map<Var, MultiPoly>{{var, replacement}});
}

namespace {

template <typename Value, typename Lift>
Value evaluate(const MultiPoly& p, const std::map<Var, Value>& assignment, Lift lift) {
  Value total = lift(Rational(0));
  for (const auto& [m, c] : p.terms()) {
    Value term = lift(c);
    for (Var v : kAllVars) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw UsageError("no value assigned to variable '" + std::string(var_name(v)) + "'");
      }
      for (unsigned i = 0; i < e; ++i) term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace

Rational eval_rational(const MultiPoly& p, const std::map<Var, Rational>& assignment) {
  return evaluate<Rational>(p, assignment, [](const Rational& r) { return r; });
}

QuadExt eval_quad(const MultiPoly& p, const std::map<Var, QuadExt>& assignment, long discriminant) {
  for (const auto& [v, z] : assignment) {
    if (z.discriminant() != discriminant) {
      throw UsageError("value for '" + std::string(var_name(v)) + "' lives in Q(sqrt(" +
                       std::to_string(z.discriminant()) + ")), expected Q(sqrt(" +
                       std::to_string(discriminant) + "))");
    }
  }
  return evaluate<QuadExt>(p, assignment, [discriminant](const Rational& r) {
    return QuadExt::rational(r, discriminant);
  });
}

}  // namespace wpaths
