// Copyright 2026 The mzent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MZENT_IO_HPP
#define MZENT_IO_HPP

#include <string>
#include <vector>

#include "mzent/optimizer.hpp"
#include "mzent/sweep.hpp"

namespace mzent {

/// Shortest decimal form at 12 significant digits ("%.12g"), '.' separator.
std::string format_number(double v);
std::string format_complex(Cx v);  // "(re,im)"

// Emitters build the full file as a string: '\n' line endings, no trailing
// whitespace, one header line per CSV. Byte-identical for identical inputs.
std::string heatmap_csv(const std::vector<HeatmapCell>& cells);
std::string heatmap_svg(const std::vector<HeatmapCell>& cells, int grid_n);
std::string decoherence_csv(const std::vector<DecoherenceRow>& rows);
std::string optimize_csv(const std::vector<WProfilePoint>& profile);

/// Write a whole file; any failure is a runtime error.
void write_file(const std::string& path, const std::string& content);

}  // namespace mzent

#endif  // MZENT_IO_HPP
