/*
 * Copyright 2026 The simfuse Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "simfuse/io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <system_error>

#include "simfuse/errors.h"
#include "simfuse/logging.h"
#include "simfuse/validation.h"

namespace simfuse {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    cells.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cells;
}

std::vector<std::string> split_whitespace(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

[[noreturn]] void parse_error(const std::string& source, int line, int column,
                              const std::string& message) {
  throw Error(ErrorCode::kParseError, source + ":" + std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + message);
}

void check_unique(const std::vector<std::string>& ids, const std::string& source,
                  int line, std::string_view what) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!seen.insert(ids[i]).second) {
      parse_error(source, line, static_cast<int>(i) + 1,
                  "duplicate " + std::string(what) + " id '" + ids[i] + "'");
    }
  }
}

void require_same_ids(const std::vector<std::string>& expected,
                      const std::vector<std::string>& actual,
                      const std::string& where) {
  if (expected == actual) return;
  std::string offending;
  int listed = 0;
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n && listed < 10; ++i) {
    const std::string want = i < expected.size() ? expected[i] : "<none>";
    const std::string got = i < actual.size() ? actual[i] : "<none>";
    if (want == got) continue;
    if (!offending.empty()) offending += ", ";
    offending += got + " (expected " + want + " at position " + std::to_string(i) + ")";
    ++listed;
  }
  throw Error(ErrorCode::kIdMismatch, where + ": " + offending);
}

std::string file_label(std::string label) {
  for (char& c : label) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return label;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value > 0 ? "Infinity" : "-Infinity";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

LabeledMatrix parse_matrix_tsv(std::istream& in, const std::string& source) {
  LabeledMatrix out;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_tabs(line);
    if (!have_header) {
      out.col_ids.assign(cells.begin() + 1, cells.end());
      if (out.col_ids.empty()) parse_error(source, line_no, 1, "header has no column ids");
      check_unique(out.col_ids, source, line_no, "column");
      have_header = true;
      continue;
    }
    if (cells.size() != out.col_ids.size() + 1) {
      parse_error(source, line_no, static_cast<int>(std::min(cells.size(), out.col_ids.size() + 1)) + 1,
                  "expected " + std::to_string(out.col_ids.size() + 1) + " fields, found " +
                      std::to_string(cells.size()));
    }
    out.row_ids.push_back(cells.front());
    std::vector<double> values(out.col_ids.size());
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const std::string& text = cells[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(v)) {
        parse_error(source, line_no, static_cast<int>(c) + 1,
                    "'" + text + "' is not a finite real number");
      }
      values[c - 1] = v;
    }
    rows.push_back(std::move(values));
  }
  if (!have_header) parse_error(source, line_no, 1, "empty matrix file");
  check_unique(out.row_ids, source, 0, "row");
  out.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(out.col_ids.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return out;
}

LabeledMatrix read_matrix_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse_matrix_tsv(in, path.string());
}

void write_matrix_tsv(std::ostream& out, const std::vector<std::string>& row_ids,
                      const std::vector<std::string>& col_ids,
                      const Matrix& values, const std::string& corner) {
  if (static_cast<Eigen::Index>(row_ids.size()) != values.rows() ||
      static_cast<Eigen::Index>(col_ids.size()) != values.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "ids do not match matrix shape");
  }
  out << corner;
  for (const auto& id : col_ids) out << '\t' << id;
  out << '\n';
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    out << row_ids[i];
    for (Eigen::Index j = 0; j < values.cols(); ++j) out << '\t' << format_double(values(i, j));
    out << '\n';
  }
}

void write_matrix_tsv(const std::filesystem::path& path,
                      const std::vector<std::string>& row_ids,
                      const std::vector<std::string>& col_ids,
                      const Matrix& values, const std::string& corner) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  write_matrix_tsv(out, row_ids, col_ids, values, corner);
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

Dataset load_dataset(const std::filesystem::path& manifest,
                     const LoadOptions& options, LoadSummary* summary) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + manifest.string());
  const std::filesystem::path base = manifest.parent_path();
  const std::string source = manifest.string();

  struct Entry {
    EntityKind kind;
    std::string label;
    std::filesystem::path path;
  };
  std::optional<std::filesystem::path> interactions_path;
  std::vector<Entry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "interactions") {
      if (tokens.size() != 2) parse_error(source, line_no, 1, "expected: interactions <path>");
      if (interactions_path) parse_error(source, line_no, 1, "interactions listed twice");
      interactions_path = base / tokens[1];
    } else if (tokens[0] == "drug" || tokens[0] == "target") {
      if (tokens.size() != 3) parse_error(source, line_no, 1, "expected: " + tokens[0] + " <label> <path>");
      entries.push_back({tokens[0] == "drug" ? EntityKind::kDrug : EntityKind::kTarget,
                         tokens[1], base / tokens[2]});
    } else {
      parse_error(source, line_no, 1, "unknown role '" + tokens[0] + "'");
    }
  }
  if (!interactions_path) parse_error(source, line_no, 1, "no interactions entry");

  Dataset ds;
  LabeledMatrix y = read_matrix_tsv(*interactions_path);
  ds.interactions.matrix = std::move(y.values);
  ds.interactions.drug_ids = std::move(y.row_ids);
  ds.interactions.target_ids = std::move(y.col_ids);

  LoadSummary local;
  for (const auto& e : entries) {
    LabeledMatrix m = read_matrix_tsv(e.path);
    const auto& ids = e.kind == EntityKind::kDrug ? ds.interactions.drug_ids
                                                  : ds.interactions.target_ids;
    const std::string where = e.path.string();
    require_same_ids(ids, m.row_ids, where + " rows");
    require_same_ids(ids, m.col_ids, where + " columns");
    SimilarityView view{std::move(m.values), e.kind, e.label};
    if (options.sanitize) {
      const SanitizeCounts counts = sanitize_view(view);
      local.diagonal_fixed += counts.diagonal_fixed;
      local.clamped += counts.clamped;
      if (counts.diagonal_fixed > 0) {
        local.notes.push_back(std::string(to_string(e.kind)) + " view '" + e.label + "': set " +
                              std::to_string(counts.diagonal_fixed) + " diagonal entries to 1");
      }
      if (counts.clamped > 0) {
        local.notes.push_back(std::string(to_string(e.kind)) + " view '" + e.label + "': clamped " +
                              std::to_string(counts.clamped) + " entries into [0,1]");
      }
    }
    (e.kind == EntityKind::kDrug ? ds.drug_views : ds.target_views).push_back(std::move(view));
  }
  if (ds.drug_views.empty() || ds.target_views.empty()) {
    parse_error(source, line_no, 1, "manifest needs at least one drug and one target view");
  }
  for (const auto& note : local.notes) warn(note);
  if (summary != nullptr) *summary = std::move(local);
  return ds;
}

std::filesystem::path write_dataset(const Dataset& dataset,
                                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& y = dataset.interactions;
  std::ostringstream manifest;
  manifest << "# simfuse dataset manifest\n";
  write_matrix_tsv(dir / "interactions.tsv", y.drug_ids, y.target_ids, y.matrix);
  manifest << "interactions\tinteractions.tsv\n";
  auto emit = [&](const std::vector<SimilarityView>& views, const std::vector<std::string>& ids,
                  std::string_view role) {
    for (std::size_t h = 0; h < views.size(); ++h) {
      const std::string label = file_label(views[h].label.empty() ? std::to_string(h) : views[h].label);
      const std::string name = std::string(role) + "_" + std::to_string(h) + "_" + label + ".tsv";
      write_matrix_tsv(dir / name, ids, ids, views[h].matrix);
      manifest << role << '\t' << label << '\t' << name << '\n';
    }
  };
  emit(dataset.drug_views, y.drug_ids, "drug");
  emit(dataset.target_views, y.target_ids, "target");
  const auto path = dir / "manifest.txt";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << manifest.str();
  return path;
}

}  // namespace simfuse
