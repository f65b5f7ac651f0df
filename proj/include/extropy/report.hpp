#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The extropy-measures Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "extropy/dataset.hpp"
#include "extropy/dynamic.hpp"
#include "extropy/error.hpp"
#include "extropy/families.hpp"
#include "extropy/format.hpp"
#include "extropy/kde.hpp"
#include "extropy/measures.hpp"
#include "extropy/simulation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace extropy {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

/// Pairwise estimates between groups; symmetric with a zero diagonal.
struct DivergenceMatrix
{
  std::vector<std::string>         labels;
  std::vector<std::vector<double>> values;
  std::vector<double>              bandwidths;  ///< Sheather-Jones bandwidth of each group
  std::vector<std::size_t>         sizes;

  std::size_t size() const noexcept
  {
    return labels.size();
  }

  double max() const
  {
    double m = 0.0;
    for (auto const &row : values)
    {
      for (double v : row)
      {
        m = std::max(m, v);
      }
    }
    return m;
  }
};

/// Checks the matrix invariants, throwing when symmetry fails beyond `tol`.
inline void enforce_matrix_invariants(DivergenceMatrix &m, double tol = 1e-9)
{
  for (std::size_t i = 0; i < m.size(); ++i)
  {
    m.values[i][i] = 0.0;
    for (std::size_t j = 0; j < i; ++j)
    {
      double const a = m.values[i][j];
      double const b = m.values[j][i];
      if (!(std::abs(a - b) <= tol) || a < 0 || b < 0)
      {
        throw Error(ErrorCategory::numerical, "matrix entry (" + m.labels[i] + ", " + m.labels[j] +
                                                  ") breaks symmetry or sign: " + format_real(a) +
                                                  " vs " + format_real(b));
      }
      m.values[i][j] = m.values[j][i] = 0.5 * (a + b);
    }
  }
}

/// d-hat for every pair of groups, each group fitted once with its own bandwidth.
inline DivergenceMatrix pairwise_matrix(GroupedDataset const &ds, EstimateOptions const &opt = {})
{
  DivergenceMatrix m;
  m.labels = ds.labels;
  std::vector<KdeModel> fits;
  for (std::size_t i = 0; i < ds.groups.size(); ++i)
  {
    try
    {
      double const b = sheather_jones_bandwidth(ds.groups[i]);
      fits.emplace_back(ds.groups[i], b, opt.boundary);
      m.bandwidths.push_back(b);
      m.sizes.push_back(ds.groups[i].size());
    }
    catch (Error const &e)
    {
      throw Error(e.category(), "group '" + ds.labels[i] + "': " + e.what());
    }
  }
  std::size_t const k = fits.size();
  m.values.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
  {
    for (std::size_t j = i + 1; j < k; ++j)
    {
      try
      {
        double const v = estimate_relative_extropy(fits[i], fits[j], opt).value;
        m.values[i][j] = m.values[j][i] = v;
      }
      catch (Error const &e)
      {
        throw Error(e.category(), "pair ('" + ds.labels[i] + "', '" + ds.labels[j] + "'): " + e.what());
      }
    }
  }
  enforce_matrix_invariants(m);
  return m;
}

// JSON --------------------------------------------------------------------------

/// Finite numbers as is; NaN and infinities as null.
inline Json json_number(double v)
{
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

inline Json report_envelope(std::string const &command)
{
  Json j;
  j["schema"]         = "extropy-report";
  j["schema_version"] = report_schema_version;
  j["command"]        = command;
  return j;
}

inline Json to_json(MeasureReport const &r)
{
  Json j;
  j["measure"] = to_string(r.id);
  j["x"]       = r.x_name;
  if (r.y_name != r.x_name)
  {
    j["y"] = r.y_name;
  }
  j["t"]     = r.t ? json_number(*r.t) : Json(nullptr);
  j["value"] = json_number(r.value);
  j["error_estimate"]   = json_number(r.diagnostics.error_estimate);
  j["truncation_point"] = json_number(r.diagnostics.truncation_point);
  j["subdivisions"]     = r.diagnostics.subdivisions;
  if (r.disjoint_supports)
  {
    j["disjoint_supports"] = true;
  }
  return j;
}

inline Json to_json(DynamicVerdict const &v)
{
  Json j;
  j["kind"]             = to_string(v.kind);
  j["name"]             = v.name;
  j["holds"]            = v.holds;
  j["hypothesis_met"]   = v.hypothesis_met;
  j["max_abs_residual"] = json_number(v.max_abs_residual);
  j["tolerance"]        = json_number(v.tolerance);
  if (!v.note.empty())
  {
    j["note"] = v.note;
  }
  Json pts = Json::array();
  for (auto const &p : v.per_point)
  {
    Json e;
    e["t"]   = json_number(p.t);
    e["lhs"] = json_number(p.lhs);
    e["rhs"] = json_number(p.rhs);
    if (!p.label.empty())
    {
      e["label"] = p.label;
    }
    pts.push_back(std::move(e));
  }
  j["per_point"] = std::move(pts);
  return j;
}

inline Json to_json(McStudyRow const &r)
{
  Json j;
  j["n"]             = r.n;
  j["mean_estimate"] = json_number(r.mean_estimate);
  j["bias"]          = json_number(r.bias);
  j["mse"]           = json_number(r.mse);
  j["true_value"]    = json_number(r.true_value);
  j["reps"]          = r.reps;
  j["failures"]      = r.failures;
  return j;
}

inline Json matrix_report(GroupedDataset const &ds, DivergenceMatrix const &m, EstimateOptions const &opt)
{
  Json j = report_envelope("groups");
  Json in;
  in["source"]       = std::filesystem::path(ds.source).filename().string();
  in["value_column"] = ds.options.value_column;
  in["group_column"] = ds.options.group_column ? Json(*ds.options.group_column) : Json(nullptr);
  if (ds.options.quantiles)
  {
    in["quantile_cuts"] = ds.options.quantiles->cuts;
    Json edges = Json::array();
    for (double e : ds.edges)
    {
      edges.push_back(json_number(e));
    }
    in["quantile_edges"] = std::move(edges);
  }
  in["filter"]          = ds.options.filter ? Json(ds.options.filter->describe()) : Json(nullptr);
  in["boundary"]        = to_string(opt.boundary);
  in["rows_read"]       = ds.rows_read;
  in["dropped_missing"] = ds.dropped_missing;
  in["filtered_out"]    = ds.filtered_out;
  j["inputs"]           = std::move(in);

  Json groups = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
  {
    Json g;
    g["label"]     = m.labels[i];
    g["n"]         = m.sizes[i];
    g["bandwidth"] = json_number(m.bandwidths[i]);
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  Json rows = Json::array();
  for (auto const &row : m.values)
  {
    Json r = Json::array();
    for (double v : row)
    {
      r.push_back(json_number(v));
    }
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  return j;
}

inline Json study_report(McStudyConfig const &cfg, std::vector<McStudyRow> const &rows)
{
  Json j = report_envelope("simulate");
  Json in;
  in["family_x"] = describe(cfg.family_x);
  in["family_y"] = describe(cfg.family_y);
  in["reps"]     = cfg.reps;
  in["seed"]     = cfg.seed;
  in["boundary"] = to_string(cfg.estimate.boundary);
  in["generator"] = "mt19937_64 seeded by splitmix64, substream per replication";
  j["inputs"]     = std::move(in);
  Json out = Json::array();
  for (auto const &r : rows)
  {
    out.push_back(to_json(r));
  }
  j["rows"] = std::move(out);
  return j;
}

// Text artifacts --------------------------------------------------------------------

inline std::string csv_quote(std::string const &s)
{
  std::string out = "\"";
  for (char c : s)
  {
    out += c;
    if (c == '"')
    {
      out += '"';
    }
  }
  return out + "\"";
}

inline std::string matrix_csv(DivergenceMatrix const &m)
{
  std::ostringstream os;
  os << "\"\"";
  for (auto const &l : m.labels)
  {
    os << ',' << csv_quote(l);
  }
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i)
  {
    os << csv_quote(m.labels[i]);
    for (double v : m.values[i])
    {
      os << ',' << format_real(v);
    }
    os << '\n';
  }
  return os.str();
}

inline std::string study_csv(std::vector<McStudyRow> const &rows)
{
  std::ostringstream os;
  os << "n,mean_estimate,bias,mse,true_value,reps,failures\n";
  for (auto const &r : rows)
  {
    os << r.n << ',' << format_real(r.mean_estimate) << ',' << format_real(r.bias) << ','
       << format_real(r.mse) << ',' << format_real(r.true_value) << ',' << r.reps << ',' << r.failures << '\n';
  }
  return os.str();
}

namespace detail {

inline std::string xml_escape(std::string const &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

struct Rgb
{
  int r, g, b;
};

inline constexpr Rgb ramp_low{255, 255, 255};
inline constexpr Rgb ramp_high{8, 48, 107};

inline Rgb ramp(double s)
{
  s           = std::clamp(s, 0.0, 1.0);
  auto mix    = [s](int a, int b) { return static_cast<int>(std::lround(a + s * (b - a))); };
  return {mix(ramp_low.r, ramp_high.r), mix(ramp_low.g, ramp_high.g), mix(ramp_low.b, ramp_high.b)};
}

inline std::string hex(Rgb c)
{
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

}  // namespace detail

/// Standalone SVG heatmap; the colour ramp is described in the leading comment.
inline std::string heatmap_svg(DivergenceMatrix const &m, std::string const &title = "relative extropy")
{
  int const    cell   = 72;
  int const    left   = 150;
  int const    top    = 50;
  int const    k      = static_cast<int>(m.size());
  int const    width  = left + k * cell + 20;
  int const    height = top + k * cell + 130;
  double const vmax   = m.max();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<!--\n"
     << "  colour ramp: linear in value from " << detail::hex(detail::ramp_low) << " at 0 to "
     << detail::hex(detail::ramp_high) << " at the matrix maximum " << format_real(vmax) << ";\n"
     << "  darker cells hold larger values, and each cell prints its value.\n"
     << "-->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<text x=\"" << left << "\" y=\"24\" font-size=\"15\">" << detail::xml_escape(title) << "</text>\n";
  for (int i = 0; i < k; ++i)
  {
    int const y = top + i * cell;
    os << "<text x=\"" << left - 8 << "\" y=\"" << y + cell / 2 + 4 << "\" text-anchor=\"end\">"
       << detail::xml_escape(m.labels[static_cast<std::size_t>(i)]) << "</text>\n";
    for (int j = 0; j < k; ++j)
    {
      double const v = m.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      double const s = vmax > 0 ? v / vmax : 0.0;
      int const    x = left + j * cell;
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
         << "\" fill=\"" << detail::hex(detail::ramp(s)) << "\" stroke=\"#999999\"/>\n";
      os << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4 << "\" text-anchor=\"middle\" fill=\""
         << (s > 0.5 ? "#ffffff" : "#000000") << "\">" << format_short(v, 4) << "</text>\n";
    }
  }
  int const base = top + k * cell + 12;
  for (int j = 0; j < k; ++j)
  {
    int const x = left + j * cell + cell / 2;
    os << "<text x=\"" << x << "\" y=\"" << base << "\" text-anchor=\"end\" transform=\"rotate(-45 " << x << ' '
       << base << ")\">" << detail::xml_escape(m.labels[static_cast<std::size_t>(j)]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void write_text(std::filesystem::path const &path, std::string const &content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush())
  {
    throw IoError("cannot write " + path.string());
  }
}

}  // namespace extropy
