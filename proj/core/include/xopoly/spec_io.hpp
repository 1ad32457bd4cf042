// JSON/CSV-facing serialization for family specs, polynomials, measures and
// scan grids.  All output is canonical text: stable key order, canonical
// rational strings, so identical inputs produce identical bytes.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "xopoly/discrete_measure.hpp"
#include "xopoly/family_spec.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

// Canonical JSON text for a spec (keys ax, bx, N when bound, F, M,
// escape_hatch when set).
std::string spec_to_json(const FamilySpec& spec);

// Parse + structural validation; std::invalid_argument names the offending
// field.  An escape-hatch spec with a containment-violating F parses fine.
FamilySpec spec_from_json_text(const std::string& text);
FamilySpec spec_from_file(const std::string& path);

// ["c0", "c1", ...], coefficients ascending.
std::string poly_to_json(const QPoly& p);

// [{"point": "p/q", "mass": "r/s"}, ...] in support order.
std::string measure_to_json(const DiscreteMeasure& mu);

// Exact rational grid, row-major.
std::string gram_to_json(const std::vector<std::vector<Rational>>& g);

// Comma-free one-token form for CSV cells, e.g. ax=-2;bx=-1;N=8;F=1|2;M0=2.
std::string spec_token(const FamilySpec& spec);

// Parameter ranges for a scan: the cartesian product is taken in field order
// ax, bx, N, F, then M index by index.
struct ScanGrid {
  std::vector<long> ax;
  std::vector<long> bx;
  std::vector<long> N;
  std::vector<std::vector<long>> F;
  std::map<long, std::vector<Rational>> M;
};

ScanGrid grid_from_json_text(const std::string& text);
ScanGrid grid_from_file(const std::string& path);

// Deterministic enumeration of the grid.  Points that fail structural
// validation (ordering, containment, forbidden M values) or that leave the
// dual-side measure empty (N < n_F or N + ax + bx < 0) are skipped, so every
// returned spec supports the full predicate set of a scan row.
std::vector<FamilySpec> enumerate_grid(const ScanGrid& grid);

}  // namespace xop
