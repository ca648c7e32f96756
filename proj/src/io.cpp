// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace gdft {

namespace {

std::string format_full(double value) {
  if (value == 0.0) value = 0.0;  // -0 and 0 compare equal, print them the same
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  auto flush = [&] {
    const size_t first = current.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      current.clear();
      return;
    }
    const size_t last = current.find_last_not_of(" \t\r");
    lines.push_back(current.substr(first, last - first + 1));
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

double parse_number(const std::string& field, const char* where) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin) {
    throw invalid_input(std::string("bad number \"") + field + "\" in " + where);
  }
  while (*end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (*end != '\0') {
    throw invalid_input(std::string("bad number \"") + field + "\" in " + where);
  }
  return value;
}

nlohmann::json json_vector(const RVector& v) {
  auto j = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

}  // namespace

std::string format_spectrum_json(const RVector& eigenvalues, double cluster_tol) {
  for (int i = 1; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) < eigenvalues(i - 1)) {
      throw invalid_input("spectrum eigenvalues must ascend");
    }
  }
  auto j = nlohmann::json::array();
  int i = 0;
  while (i < eigenvalues.size()) {
    const double anchor = eigenvalues(i);
    const double window = cluster_tol * std::max(1.0, std::abs(anchor));
    double sum = anchor;
    int next = i + 1;
    while (next < eigenvalues.size() && eigenvalues(next) - anchor <= window) {
      sum += eigenvalues(next);
      ++next;
    }
    j.push_back({{"eigenvalue", sum / (next - i)}, {"degeneracy", next - i}});
    i = next;
  }
  return j.dump(2) + "\n";
}

std::string format_density_csv(const RVector& rho) {
  if (rho.size() == 0) throw invalid_input("density is empty");
  std::string out = "vertex,density\n";
  for (int i = 0; i < rho.size(); ++i) {
    out += std::to_string(i + 1) + "," + format_full(rho(i)) + "\n";
  }
  return out;
}

RVector parse_density_csv(const std::string& text) {
  auto lines = nonempty_lines(text);
  if (!lines.empty() && lines.front() == "vertex,density") lines.erase(lines.begin());
  if (lines.empty()) throw invalid_input("density CSV has no data rows");

  if (lines.size() == 1) {
    const auto fields = split_fields(lines.front());
    if (fields.size() > 2) {
      RVector rho(static_cast<Eigen::Index>(fields.size()));
      for (size_t i = 0; i < fields.size(); ++i) {
        rho(static_cast<Eigen::Index>(i)) = parse_number(fields[i], "density CSV");
      }
      return rho;
    }
  }

  RVector rho(static_cast<Eigen::Index>(lines.size()));
  for (size_t r = 0; r < lines.size(); ++r) {
    const auto fields = split_fields(lines[r]);
    if (fields.size() != 2) {
      throw invalid_input("density CSV rows need \"vertex,value\"");
    }
    if (parse_number(fields[0], "density CSV") != static_cast<double>(r + 1)) {
      throw invalid_input("density CSV vertices must run 1..m in order");
    }
    rho(static_cast<Eigen::Index>(r)) = parse_number(fields[1], "density CSV");
  }
  return rho;
}

std::string format_matrix_csv(const Matrix& mat) {
  if (mat.rows() == 0 || mat.cols() == 0) throw invalid_input("matrix is empty");
  std::string out;
  for (int r = 0; r < mat.rows(); ++r) {
    for (int c = 0; c < mat.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_full(mat(r, c).real()) + "," + format_full(mat(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

Matrix parse_matrix_csv(const std::string& text) {
  const auto lines = nonempty_lines(text);
  if (lines.empty()) throw invalid_input("matrix CSV is empty");
  size_t width = 0;
  std::vector<std::vector<double>> rows;
  rows.reserve(lines.size());
  for (const auto& line : lines) {
    const auto fields = split_fields(line);
    if (fields.size() % 2 != 0) {
      throw invalid_input("matrix CSV rows must interleave re,im pairs");
    }
    if (width == 0) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw invalid_input("matrix CSV rows differ in length");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& field : fields) row.push_back(parse_number(field, "matrix CSV"));
    rows.push_back(std::move(row));
  }
  Matrix mat(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width / 2));
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < width / 2; ++c) {
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cx(rows[r][2 * c], rows[r][2 * c + 1]);
    }
  }
  return mat;
}

std::string format_verdict_json(const UvVerdict& verdict) {
  nlohmann::json j;
  j["status"] = to_string(verdict.status);
  j["support_size"] = verdict.support_size;
  j["odlyzko_bound"] = verdict.odlyzko_bound;
  j["upsilon_rank"] = verdict.upsilon_rank;
  auto& witnesses = j["witnesses"] = nlohmann::json::array();
  for (const auto& w : verdict.witnesses) {
    nlohmann::json jw;
    jw["direction"] = json_vector(w.direction);
    jw["reach_minus"] = w.reach_minus;
    jw["reach_plus"] = w.reach_plus;
    jw["unbounded_minus"] = w.unbounded_minus;
    jw["unbounded_plus"] = w.unbounded_plus;
    witnesses.push_back(std::move(jw));
  }
  return j.dump(2) + "\n";
}

std::string format_surface_csv(const std::vector<RVector>& densities,
                               const std::vector<std::string>& column_names,
                               const std::vector<RVector>& columns) {
  if (densities.empty()) throw invalid_input("surface CSV needs at least one density");
  const Eigen::Index m = densities.front().size();
  for (const auto& rho : densities) {
    if (rho.size() != m) throw invalid_input("surface densities differ in length");
  }
  if (column_names.size() != columns.size()) {
    throw invalid_input("surface CSV needs one name per value column");
  }
  for (const auto& column : columns) {
    if (column.size() != static_cast<Eigen::Index>(densities.size())) {
      throw invalid_input("surface columns need one value per density");
    }
  }
  std::string out;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (i > 0) out += ',';
    out += "rho_" + std::to_string(i + 1);
  }
  for (const auto& name : column_names) out += "," + name;
  out += '\n';
  for (size_t r = 0; r < densities.size(); ++r) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i > 0) out += ',';
      out += format_full(densities[r](i));
    }
    for (const auto& column : columns) {
      out += "," + format_full(column(static_cast<Eigen::Index>(r)));
    }
    out += '\n';
  }
  return out;
}

std::string format_atlas_csv(const std::vector<AtlasCell>& cells) {
  if (cells.empty()) throw invalid_input("atlas CSV needs at least one cell");
  const size_t coords = cells.front().coords.size();
  const Eigen::Index m = cells.front().density.rho.size();
  std::string out;
  for (size_t k = 0; k < coords; ++k) {
    out += "coord_" + std::to_string(k + 1) + ",";
  }
  out += "energy,degeneracy,gap,uv_status";
  for (Eigen::Index i = 0; i < m; ++i) out += ",rho_" + std::to_string(i + 1);
  out += '\n';
  for (const auto& cell : cells) {
    if (cell.coords.size() != coords || cell.density.rho.size() != m) {
      throw invalid_input("atlas cells disagree in shape");
    }
    for (size_t k = 0; k < coords; ++k) out += format_full(cell.coords[k]) + ",";
    out += format_full(cell.ground_energy) + "," + std::to_string(cell.degeneracy) +
           "," + format_full(cell.gap) + "," + to_string(cell.uv_status);
    for (Eigen::Index i = 0; i < m; ++i) out += "," + format_full(cell.density.rho(i));
    out += '\n';
  }
  return out;
}

std::string format_atlas_manifest(const PotentialGridSpec& spec,
                                  const TScanSpec& scan, double degeneracy_tol) {
  nlohmann::json j;
  j["base"] = json_vector(spec.base);
  auto& axes = j["axes"] = nlohmann::json::array();
  for (const auto& axis : spec.axes) {
    nlohmann::json ja;
    ja["direction"] = json_vector(axis.direction);
    ja["lo"] = axis.lo;
    ja["hi"] = axis.hi;
    ja["steps"] = axis.steps;
    axes.push_back(std::move(ja));
  }
  j["scan"] = {{"grid", scan.grid == TScanSpec::Grid::log ? "log" : "linear"},
               {"t_min", scan.t_min},
               {"t_max", scan.t_max},
               {"points", scan.points}};
  j["degeneracy_tol"] = degeneracy_tol;
  return j.dump(2) + "\n";
}

}  // namespace gdft
