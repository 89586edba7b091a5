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

#include "lwi/output.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace lwi {

namespace {

using nlohmann::json;

constexpr std::size_t kNumeric = 17;

std::string formatNumber(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoteCsv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Splits one RFC-4180 record; quoted fields may span lines.
bool readCsvRecord(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (any) fields.push_back(std::move(field));
  return any;
}

double parseNumber(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw Error("malformed number '" + s + "' in CSV");
  return v;
}

}  // namespace

OutputFormat parseFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

void writeCsv(const std::vector<SweepRow>& rows, std::ostream& out) {
  for (std::size_t k = 0; k < kSweepRowFields.size(); ++k) {
    if (k) out << ',';
    out << kSweepRowFields[k];
  }
  out << '\n';
  for (const SweepRow& row : rows) {
    for (double v : numericFields(row)) out << formatNumber(v) << ',';
    out << (row.ok ? 1 : 0) << ',' << quoteCsv(row.error) << '\n';
  }
}

void writeJson(const std::vector<SweepRow>& rows, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    const auto values = numericFields(row);
    for (std::size_t k = 0; k < kNumeric; ++k) {
      const std::string key(kSweepRowFields[k]);
      if (std::isfinite(values[k])) {
        obj[key] = values[k];
      } else {
        obj[key] = nullptr;
      }
    }
    obj["ok"] = row.ok;
    obj["error"] = row.error;
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void writeOutput(const std::vector<SweepRow>& rows, OutputFormat format,
                 const std::filesystem::path& path) {
  if (rows.empty()) throw Error("nothing to write: no rows");
  auto emit = [&](std::ostream& out) {
    if (format == OutputFormat::kCsv) {
      writeCsv(rows, out);
    } else {
      writeJson(rows, out);
    }
  };
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  emit(out);
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::vector<SweepRow> readCsv(std::istream& in) {
  std::vector<std::string> fields;
  if (!readCsvRecord(in, fields) || fields.size() != kSweepRowFields.size()) {
    throw Error("CSV header does not match the sweep row layout");
  }
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (fields[k] != kSweepRowFields[k]) throw Error("unexpected CSV column '" + fields[k] + "'");
  }
  std::vector<SweepRow> rows;
  while (readCsvRecord(in, fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != kSweepRowFields.size()) throw Error("CSV row has the wrong field count");
    SweepRow row;
    std::array<double, kNumeric> values{};
    for (std::size_t k = 0; k < kNumeric; ++k) values[k] = parseNumber(fields[k]);
    setNumericFields(row, values);
    row.ok = fields[kNumeric] == "1";
    row.error = fields[kNumeric + 1];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> readJson(std::istream& in) {
  const json doc = json::parse(in);
  if (!doc.is_array()) throw Error("sweep JSON must be an array");
  std::vector<SweepRow> rows;
  for (const json& obj : doc) {
    SweepRow row;
    std::array<double, kNumeric> values{};
    for (std::size_t k = 0; k < kNumeric; ++k) {
      const json& v = obj.at(std::string(kSweepRowFields[k]));
      values[k] = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    }
    setNumericFields(row, values);
    row.ok = obj.at("ok").get<bool>();
    row.error = obj.at("error").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lwi
