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
#ifndef SIMFUSE_IO_H_
#define SIMFUSE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "simfuse/types.h"

namespace simfuse {

// Matrix files are tab-separated with a header row of column ids (the first
// header cell is a free-form corner label) and one row id per data line:
//
//   <corner>  c0   c1  ...
//   r0        v00  v01 ...
//
// A manifest maps roles to matrix files, one per line, paths relative to the
// manifest; blank lines and '#' comments are ignored:
//
//   interactions  nr_y.tsv
//   drug    SIMCOMP  nr_simcomp.tsv
//   target  SW       nr_sw.tsv

struct LabeledMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  Matrix values;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Throws kParseError ("file:line:column: ...") on ragged rows, duplicate
/// ids or cells that are not finite reals, and kIoError if unreadable.
LabeledMatrix read_matrix_tsv(const std::filesystem::path& path);
LabeledMatrix parse_matrix_tsv(std::istream& in, const std::string& source);

void write_matrix_tsv(std::ostream& out, const std::vector<std::string>& row_ids,
                      const std::vector<std::string>& col_ids,
                      const Matrix& values, const std::string& corner = "id");
void write_matrix_tsv(const std::filesystem::path& path,
                      const std::vector<std::string>& row_ids,
                      const std::vector<std::string>& col_ids,
                      const Matrix& values, const std::string& corner = "id");

struct LoadOptions {
  // Apply diag = 1 and [0,1] clamping. Off for linting raw files.
  bool sanitize = true;
};

struct LoadSummary {
  int diagonal_fixed = 0;
  int clamped = 0;
  std::vector<std::string> notes;
};

/// Reads a manifest and its matrices. Every view must list exactly the
/// interaction file's ids in the same order, or kIdMismatch is thrown with
/// the offending ids.
Dataset load_dataset(const std::filesystem::path& manifest,
                     const LoadOptions& options = {},
                     LoadSummary* summary = nullptr);

/// Writes manifest.txt plus one TSV per matrix into dir; returns the
/// manifest path.
std::filesystem::path write_dataset(const Dataset& dataset,
                                    const std::filesystem::path& dir);

}  // namespace simfuse

#endif  // SIMFUSE_IO_H_
