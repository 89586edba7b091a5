// Copyright 2026 The LWI Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lwi/sweep.hpp"

namespace lwi {

enum class OutputFormat { kCsv, kJson };

OutputFormat parseFormat(std::string_view name);

/// CSV: header with the SweepRow field names, one line per row, numbers with
/// 17 significant digits (nan/inf spelled as such), "\n" line endings, text
/// fields quoted when they contain a comma, quote or newline.
void writeCsv(const std::vector<SweepRow>& rows, std::ostream& out);

/// JSON: array of objects keyed by the same names. Non-finite numbers become
/// null.
void writeJson(const std::vector<SweepRow>& rows, std::ostream& out);

/// Writes to `path`, or stdout when path is "-". Throws lwi::Error on empty
/// input or an unwritable path.
void writeOutput(const std::vector<SweepRow>& rows, OutputFormat format,
                 const std::filesystem::path& path);

std::vector<SweepRow> readCsv(std::istream& in);
std::vector<SweepRow> readJson(std::istream& in);

}  // namespace lwi
