// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

// Finitely supported signed measure on the rationals.  Canonical form:
// support points strictly ascending, masses nonzero (atoms at equal points
// are merged on construction, zero masses dropped).
class DiscreteMeasure {
 public:
  using Atom = std::pair<Rational, Rational>;  // (point, mass)

  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.first < b.first; });
    for (auto& a : atoms) {
      if (!atoms_.empty() && atoms_.back().first == a.first)
        atoms_.back().second += a.second;
      else
        atoms_.push_back(a);
    }
    atoms_.erase(std::remove_if(atoms_.begin(), atoms_.end(),
                                [](const Atom& a) { return a.second == 0; }),
                 atoms_.end());
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  bool all_positive() const {
    for (const auto& [pt, mass] : atoms_)
      if (mass <= 0) return false;
    return true;
  }

  Rational mass_at(const Rational& pt) const {
    for (const auto& [p, m] : atoms_)
      if (p == pt) return m;
    return Rational(0);
  }

  Rational integrate(const QPoly& p) const {
    Rational s = 0;
    for (const auto& [pt, mass] : atoms_) s += mass * p(pt);
    return s;
  }

  Rational inner(const QPoly& p, const QPoly& q) const {
    Rational s = 0;
    for (const auto& [pt, mass] : atoms_) s += mass * p(pt) * q(pt);
    return s;
  }

  // New measure with each mass multiplied by factor(point); atoms whose new
  // mass vanishes disappear.
  DiscreteMeasure reweighted(const QPoly& factor) const {
    std::vector<Atom> out;
    out.reserve(atoms_.size());
    for (const auto& [pt, mass] : atoms_) out.emplace_back(pt, mass * factor(pt));
    return DiscreteMeasure(std::move(out));
  }

 private:
  std::vector<Atom> atoms_;
};

}  // namespace xop
