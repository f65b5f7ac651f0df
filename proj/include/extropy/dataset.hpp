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

#include "extropy/error.hpp"
#include "extropy/format.hpp"
#include "extropy/sample_batch.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace extropy {

/// Header plus rows of raw fields.
struct CsvTable
{
  std::vector<std::string>              header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string const &name) const
  {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
    {
      throw MissingColumn("no column named '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  }
};

namespace detail {

inline std::string trim(std::string_view s)
{
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
  {
    return {};
  }
  auto const e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// RFC 4180 records; quoted fields may hold commas, doubled quotes and newlines.
inline std::vector<std::vector<std::string>> split_records(std::string const &text)
{
  std::vector<std::vector<std::string>> records;
  std::vector<std::string>              rec;
  std::string                           field;
  bool                                  quoted = false, was_quoted = false;
  auto end_field = [&] {
    rec.push_back(was_quoted ? field : trim(field));
    field.clear();
    was_quoted = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i)
  {
    char const c = text[i];
    if (quoted)
    {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"')
      {
        field += '"';
        ++i;
      }
      else if (c == '"')
      {
        quoted = false;
      }
      else
      {
        field += c;
      }
    }
    else if (c == '"')
    {
      quoted = was_quoted = true;
    }
    else if (c == ',')
    {
      end_field();
    }
    else if (c == '\n')
    {
      end_field();
      records.push_back(std::move(rec));
      rec.clear();
    }
    else
    {
      field += c;
    }
  }
  if (!field.empty() || was_quoted || !rec.empty())
  {
    end_field();
    records.push_back(std::move(rec));
  }
  return records;
}

inline bool is_missing(std::string const &s)
{
  return s.empty() || s == "NA" || s == "na" || s == "N/A" || s == "null";
}

}  // namespace detail

inline CsvTable read_csv(std::istream &in)
{
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0)
  {
    text.erase(0, 3);
  }
  auto records = detail::split_records(text);
  if (records.empty())
  {
    throw ParseError(1, "", "empty file");
  }
  CsvTable table;
  table.header = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i)
  {
    auto &rec = records[i];
    if (rec.size() == 1 && rec[0].empty())
    {
      continue;
    }
    rec.resize(table.header.size());
    table.rows.push_back(std::move(rec));
  }
  return table;
}

inline CsvTable read_csv_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw FileNotFound(path.string());
  }
  return read_csv(in);
}

/// Cut probabilities for quantile grouping; edges use linear interpolation of order statistics.
struct QuantileGroupSpec
{
  std::vector<double> cuts{0.2, 0.4, 0.6, 0.8};

  void validate() const
  {
    if (cuts.empty())
    {
      throw InvalidParameter("quantile grouping needs at least one cut");
    }
    for (std::size_t i = 0; i < cuts.size(); ++i)
    {
      if (!(cuts[i] > 0 && cuts[i] < 1) || (i > 0 && !(cuts[i] > cuts[i - 1])))
      {
        throw InvalidParameter("cut probabilities must be strictly increasing in (0,1)");
      }
    }
  }
};

/// Keeps rows whose `column` equals (or, negated, differs from) `value`.
struct RowFilter
{
  std::string column;
  std::string value;
  bool        negate = false;

  /// "col=value" or "col!=value"
  static RowFilter parse(std::string const &text)
  {
    auto const ne = text.find("!=");
    auto const eq = text.find('=');
    if (ne != std::string::npos)
    {
      return {detail::trim(text.substr(0, ne)), detail::trim(text.substr(ne + 2)), true};
    }
    if (eq == std::string::npos || eq == 0)
    {
      throw InvalidParameter("filter must look like col=value or col!=value, got '" + text + "'");
    }
    return {detail::trim(text.substr(0, eq)), detail::trim(text.substr(eq + 1)), false};
  }

  std::string describe() const
  {
    return column + (negate ? "!=" : "=") + value;
  }
};

struct LoadOptions
{
  std::string                      value_column;
  std::optional<std::string>       group_column;
  std::optional<QuantileGroupSpec> quantiles;  ///< cut the group column (or the value column) at quantiles
  std::optional<RowFilter>         filter;
  std::size_t                      min_group_size = 5;
};

struct GroupedDataset
{
  std::vector<std::string> labels;
  std::vector<SampleBatch> groups;
  std::string              source;
  LoadOptions              options;
  std::vector<double>      edges;  ///< quantile edges when grouped by quantiles
  std::size_t              rows_read       = 0;
  std::size_t              dropped_missing = 0;
  std::size_t              filtered_out    = 0;
};

namespace detail {

inline double parse_real(std::string const &s, std::size_t row, std::string const &column)
{
  double v = 0.0;
  auto const *b = s.data();
  auto const *e = s.data() + s.size();
  if (b != e && *b == '+')
  {
    ++b;
  }
  auto const res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e || !std::isfinite(v))
  {
    throw ParseError(row, column, s);
  }
  return v;
}

inline std::string interval_label(double lo, double hi, bool closed_left)
{
  return (closed_left ? "[" : "(") + format_short(lo) + "," + format_short(hi) + "]";
}

}  // namespace detail

/**
 * Forms groups from a parsed table. Rows missing a selected field (empty, NA)
 * are dropped and counted; other unparsable numbers raise ParseError with the
 * data row number. Distinct group values are ordered by label. Quantile groups are
 * [min,e1], (e1,e2], ..., (ek,max], so ties on an edge go to the lower group.
 */
inline GroupedDataset group_table(CsvTable const &table, LoadOptions const &opt, std::string source = "<memory>")
{
  GroupedDataset ds;
  ds.source  = std::move(source);
  ds.options = opt;

  std::size_t const vcol = table.column(opt.value_column);
  std::optional<std::size_t> gcol;
  if (opt.group_column)
  {
    gcol = table.column(*opt.group_column);
  }
  std::optional<std::size_t> fcol;
  if (opt.filter)
  {
    fcol = table.column(opt.filter->column);
  }
  if (!gcol && !opt.quantiles)
  {
    throw InvalidParameter("grouping needs a group column or a quantile spec");
  }
  if (opt.quantiles)
  {
    opt.quantiles->validate();
  }

  std::vector<double>      values, keys;
  std::vector<std::string> names;
  for (std::size_t r = 0; r < table.rows.size(); ++r)
  {
    auto const       &row  = table.rows[r];
    std::size_t const line = r + 1;  // data rows count from 1
    ++ds.rows_read;
    if (fcol && ((row[*fcol] == opt.filter->value) == opt.filter->negate))
    {
      ++ds.filtered_out;
      continue;
    }
    if (detail::is_missing(row[vcol]) || (gcol && detail::is_missing(row[*gcol])))
    {
      ++ds.dropped_missing;
      continue;
    }
    values.push_back(detail::parse_real(row[vcol], line, opt.value_column));
    if (opt.quantiles)
    {
      keys.push_back(gcol ? detail::parse_real(row[*gcol], line, *opt.group_column) : values.back());
    }
    else
    {
      names.push_back(row[*gcol]);
    }
  }

  std::vector<std::vector<double>> buckets;
  if (opt.quantiles)
  {
    if (keys.size() < 2)
    {
      throw TooFewObservations("quantile grouping needs at least two rows");
    }
    SampleBatch const sorted(keys);
    for (double p : opt.quantiles->cuts)
    {
      ds.edges.push_back(sorted.quantile(p));
    }
    std::size_t const k = ds.edges.size() + 1;
    buckets.resize(k);
    for (std::size_t i = 0; i < k; ++i)
    {
      double const lo = i == 0 ? sorted.min() : ds.edges[i - 1];
      double const hi = i + 1 == k ? sorted.max() : ds.edges[i];
      ds.labels.push_back(detail::interval_label(lo, hi, i == 0));
    }
    for (std::size_t i = 0; i < values.size(); ++i)
    {
      auto const g = std::lower_bound(ds.edges.begin(), ds.edges.end(), keys[i]) - ds.edges.begin();
      buckets[static_cast<std::size_t>(g)].push_back(values[i]);
    }
  }
  else
  {
    std::map<std::string, std::vector<double>> by_name;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
      by_name[names[i]].push_back(values[i]);
    }
    for (auto &[name, v] : by_name)
    {
      ds.labels.push_back(name);
      buckets.push_back(std::move(v));
    }
  }

  if (buckets.size() < 2)
  {
    throw TooFewObservations("need at least two groups, found " + std::to_string(buckets.size()));
  }
  for (std::size_t i = 0; i < buckets.size(); ++i)
  {
    if (buckets[i].size() < opt.min_group_size)
    {
      throw TooFewObservations("group '" + ds.labels[i] + "' has " + std::to_string(buckets[i].size()) +
                               " observations, need " + std::to_string(opt.min_group_size));
    }
    ds.groups.emplace_back(std::move(buckets[i]));
  }
  return ds;
}

inline GroupedDataset load_csv(std::filesystem::path const &path, LoadOptions const &opt)
{
  return group_table(read_csv_file(path), opt, path.string());
}

}  // namespace extropy
