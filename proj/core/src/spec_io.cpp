#include "xopoly/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xop {

namespace {

using ordered_json = nlohmann::ordered_json;

long require_integer(const ordered_json& j, const char* field) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("spec: field '") + field +
                                "' must be an integer");
  return j.get<long>();
}

long parse_index_key(const std::string& key, const char* container) {
  try {
    std::size_t used = 0;
    const long idx = std::stol(key, &used);
    if (used != key.size() || idx < 0) throw std::invalid_argument("");
    return idx;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(container) + ": key '" + key +
                                "' is not a nonnegative integer index");
  }
}

std::string slurp(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument(std::string(what) + ": cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json parse_document(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON: " + e.what());
  }
}

}  // namespace

std::string spec_to_json(const FamilySpec& spec) {
  ordered_json j;
  j["ax"] = spec.ax;
  j["bx"] = spec.bx;
  if (spec.N) j["N"] = *spec.N;
  j["F"] = spec.F;
  ordered_json m = ordered_json::object();
  for (const auto& [idx, val] : spec.M) m[std::to_string(idx)] = to_string(val);
  j["M"] = m;
  if (spec.escape_hatch) j["escape_hatch"] = true;
  return j.dump(2) + "\n";
}

FamilySpec spec_from_json_text(const std::string& text) {
  const ordered_json j = parse_document(text, "spec");
  if (!j.is_object()) throw std::invalid_argument("spec: document must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "ax" && key != "bx" && key != "N" && key != "F" && key != "M" &&
        key != "escape_hatch")
      throw std::invalid_argument("spec: unknown field '" + key + "'");
  }
  FamilySpec spec;
  if (!j.contains("ax") || !j.contains("bx"))
    throw std::invalid_argument("spec: fields 'ax' and 'bx' are required");
  spec.ax = require_integer(j.at("ax"), "ax");
  spec.bx = require_integer(j.at("bx"), "bx");
  if (j.contains("N")) spec.N = require_integer(j.at("N"), "N");
  if (j.contains("F")) {
    if (!j.at("F").is_array())
      throw std::invalid_argument("spec: field 'F' must be an array");
    for (const auto& e : j.at("F")) spec.F.push_back(require_integer(e, "F"));
  }
  if (j.contains("M")) {
    if (!j.at("M").is_object())
      throw std::invalid_argument("spec: field 'M' must be an object");
    for (const auto& [key, value] : j.at("M").items()) {
      const long idx = parse_index_key(key, "spec: M");
      if (!value.is_string())
        throw std::invalid_argument("spec: M_" + std::to_string(idx) +
                                    " must be a rational string");
      try {
        spec.M[idx] = parse_rational(value.get<std::string>());
      } catch (const std::exception&) {
        throw std::invalid_argument("spec: M_" + std::to_string(idx) +
                                    " is not a valid rational");
      }
    }
  }
  if (j.contains("escape_hatch")) {
    if (!j.at("escape_hatch").is_boolean())
      throw std::invalid_argument("spec: field 'escape_hatch' must be a boolean");
    spec.escape_hatch = j.at("escape_hatch").get<bool>();
  }
  validate_spec(spec);
  return spec;
}

FamilySpec spec_from_file(const std::string& path) {
  return spec_from_json_text(slurp(path, "spec"));
}

std::string poly_to_json(const QPoly& p) {
  ordered_json arr = ordered_json::array();
  if (p.is_zero()) {
    arr.push_back("0");
  } else {
    for (long k = 0; k <= p.degree(); ++k) arr.push_back(to_string(p.coefficient(k)));
  }
  return arr.dump();
}

std::string measure_to_json(const DiscreteMeasure& mu) {
  ordered_json arr = ordered_json::array();
  for (const auto& [point, mass] : mu.atoms()) {
    ordered_json atom;
    atom["point"] = to_string(point);
    atom["mass"] = to_string(mass);
    arr.push_back(atom);
  }
  return arr.dump();
}

std::string gram_to_json(const std::vector<std::vector<Rational>>& g) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : g) {
    ordered_json cells = ordered_json::array();
    for (const auto& v : row) cells.push_back(to_string(v));
    rows.push_back(cells);
  }
  return rows.dump();
}

std::string spec_token(const FamilySpec& spec) {
  std::ostringstream out;
  out << "ax=" << spec.ax << ";bx=" << spec.bx;
  if (spec.N) out << ";N=" << *spec.N;
  out << ";F=";
  for (std::size_t i = 0; i < spec.F.size(); ++i) {
    if (i) out << '|';
    out << spec.F[i];
  }
  for (const auto& [idx, val] : spec.M) out << ";M" << idx << '=' << to_string(val);
  return out.str();
}

ScanGrid grid_from_json_text(const std::string& text) {
  const ordered_json j = parse_document(text, "grid");
  if (!j.is_object()) throw std::invalid_argument("grid: document must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "ax" && key != "bx" && key != "N" && key != "F" && key != "M")
      throw std::invalid_argument("grid: unknown field '" + key + "'");
  }
  ScanGrid grid;
  const auto integer_list = [&](const char* field) {
    if (!j.contains(field) || !j.at(field).is_array() || j.at(field).empty())
      throw std::invalid_argument(std::string("grid: field '") + field +
                                  "' must be a nonempty array");
    std::vector<long> out;
    for (const auto& e : j.at(field)) out.push_back(require_integer(e, field));
    return out;
  };
  grid.ax = integer_list("ax");
  grid.bx = integer_list("bx");
  grid.N = integer_list("N");
  if (!j.contains("F") || !j.at("F").is_array() || j.at("F").empty())
    throw std::invalid_argument("grid: field 'F' must be a nonempty array of arrays");
  for (const auto& fs : j.at("F")) {
    if (!fs.is_array())
      throw std::invalid_argument("grid: entries of 'F' must be arrays");
    std::vector<long> f;
    for (const auto& e : fs) f.push_back(require_integer(e, "F"));
    grid.F.push_back(std::move(f));
  }
  if (j.contains("M")) {
    if (!j.at("M").is_object())
      throw std::invalid_argument("grid: field 'M' must be an object");
    for (const auto& [key, value] : j.at("M").items()) {
      const long idx = parse_index_key(key, "grid: M");
      if (!value.is_array() || value.empty())
        throw std::invalid_argument("grid: M_" + std::to_string(idx) +
                                    " must be a nonempty array of rational strings");
      std::vector<Rational> vals;
      for (const auto& e : value) {
        if (!e.is_string())
          throw std::invalid_argument("grid: M_" + std::to_string(idx) +
                                      " must contain rational strings");
        try {
          vals.push_back(parse_rational(e.get<std::string>()));
        } catch (const std::exception&) {
          throw std::invalid_argument("grid: M_" + std::to_string(idx) +
                                      " holds an invalid rational");
        }
      }
      grid.M[idx] = std::move(vals);
    }
  }
  return grid;
}

ScanGrid grid_from_file(const std::string& path) {
  return grid_from_json_text(slurp(path, "grid"));
}

std::vector<FamilySpec> enumerate_grid(const ScanGrid& grid) {
  std::vector<FamilySpec> out;
  for (long ax : grid.ax)
    for (long bx : grid.bx)
      for (long N : grid.N)
        for (const auto& F : grid.F) {
          if (!(ax <= bx && bx <= -1)) continue;
          const long needed = -bx;
          bool have_all = true;
          for (long i = 0; i < needed; ++i)
            if (!grid.M.count(i)) have_all = false;
          if (!have_all) continue;
          // Product over the required M indices; the highest index varies fastest.
          std::vector<std::size_t> pick(needed, 0);
          while (true) {
            FamilySpec spec;
            spec.ax = ax;
            spec.bx = bx;
            spec.N = N;
            spec.F = F;
            bool usable = true;
            for (long i = 0; i < needed; ++i) {
              const Rational& v = grid.M.at(i)[pick[i]];
              if (v == 0) usable = false;
              spec.M[i] = v;
            }
            if (usable && N >= static_cast<long>(F.size()) && N + ax + bx >= 0) {
              try {
                validate_spec(spec);
                out.push_back(std::move(spec));
              } catch (const std::invalid_argument&) {
              }
            }
            long pos = needed - 1;
            while (pos >= 0 && ++pick[pos] == grid.M.at(pos).size()) {
              pick[pos] = 0;
              --pos;
            }
            if (pos < 0) break;
          }
        }
  return out;
}

}  // namespace xop
