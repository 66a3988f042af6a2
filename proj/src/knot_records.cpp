/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "knot_records.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "knot_records_data.hpp"

namespace bandforms {

namespace {

int parse_small_positive(const std::string &v, const std::string &what) {
  try {
    size_t idx = 0;
    int x = std::stoi(v, &idx);
    if (idx != v.size() || x < 0) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception &) {
    throw InputError("record table: bad value '" + v + "' for " + what);
  }
}

std::pair<mpz_class, mpz_class> parse_fraction(const std::string &v) {
  auto slash = v.find('/');
  if (slash == std::string::npos)
    throw InputError("record table: fraction '" + v + "' is not p/q");
  mpz_class p, q;
  try {
    p = mpz_class(v.substr(0, slash));
    q = mpz_class(v.substr(slash + 1));
  } catch (const std::exception &) {
    throw InputError("record table: fraction '" + v + "' is not p/q");
  }
  if (p < 1 || p % 2 == 0)
    throw InputError("record table: fraction '" + v +
                     "': p must be odd and positive");
  if (!(p == 1 && q == 1) && !(q > 0 && q < p))
    throw InputError("record table: fraction '" + v + "': need 0 < q < p");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1 && p != 1)
    throw InputError("record table: fraction '" + v + "' is not reduced");
  return {p, q};
}

// strip a '#' comment, respecting double quotes
std::string strip_comment(const std::string &line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::vector<std::string> split_fields(const std::string &line, int lineno) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    size_t start = i;
    bool quoted = false;
    while (i < line.size() &&
           (quoted || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '"') quoted = !quoted;
      ++i;
    }
    if (quoted)
      throw InputError("record table line " + std::to_string(lineno) +
                       ": unterminated quote");
    out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string unquote(const std::string &s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

} // namespace

RecordTable RecordTable::parse(const std::string &text) {
  RecordTable table;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool version_seen = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto fields = split_fields(line, lineno);
    if (fields.empty()) continue;
    if (!version_seen) {
      if (fields.size() != 2 || fields[0] != "version")
        throw InputError("record table line " + std::to_string(lineno) +
                         ": expected 'version N' before the first record");
      table.version_ = parse_small_positive(fields[1], "version");
      version_seen = true;
      continue;
    }
    KnotRecord rec;
    rec.name = fields[0];
    for (size_t i = 1; i < fields.size(); ++i) {
      auto eq = fields[i].find('=');
      if (eq == std::string::npos)
        throw InputError("record table line " + std::to_string(lineno) +
                         ": field '" + fields[i] + "' is not key=value");
      std::string key = fields[i].substr(0, eq);
      std::string val = fields[i].substr(eq + 1);
      if (key == "det") {
        rec.det = mpz_class(val);
        if (*rec.det < 1 || *rec.det % 2 == 0)
          throw InputError("record table line " + std::to_string(lineno) +
                           ": determinant must be odd and positive");
      } else if (key == "bridge") {
        rec.bridge = parse_small_positive(val, "bridge");
      } else if (key == "u") {
        rec.gordian_u = parse_small_positive(val, "u");
      } else if (key == "g4s") {
        rec.gamma4s = parse_small_positive(val, "g4s");
      } else if (key == "g4t") {
        rec.gamma4t = parse_small_positive(val, "g4t");
      } else if (key == "fraction") {
        rec.fraction = parse_fraction(val);
      } else if (key == "pd") {
        rec.pd = val;
      } else if (key == "fusion_mm") {
        rec.fusion_mm = parse_small_positive(val, "fusion_mm");
      } else if (key == "mu") {
        std::istringstream ms(val);
        std::string pair;
        while (std::getline(ms, pair, ',')) {
          auto colon = pair.find(':');
          if (colon == std::string::npos)
            throw InputError("record table line " + std::to_string(lineno) +
                             ": mu entry '" + pair + "' is not r:v");
          int r = parse_small_positive(pair.substr(0, colon), "mu cover index");
          int v = parse_small_positive(pair.substr(colon + 1), "mu value");
          if (r < 2)
            throw InputError("record table line " + std::to_string(lineno) +
                             ": mu cover index must be >= 2");
          rec.mu_r[r] = v;
        }
      } else if (key == "src") {
        rec.src = unquote(val);
      } else {
        throw InputError("record table line " + std::to_string(lineno) +
                         ": unknown key '" + key + "'");
      }
    }
    if (rec.src.empty())
      throw InputError("record table line " + std::to_string(lineno) +
                       ": record '" + rec.name +
                       "' is missing its src= provenance");
    if (rec.det && rec.fraction && *rec.det != rec.fraction->first)
      throw InputError("record table line " + std::to_string(lineno) +
                       ": det disagrees with the fraction's p");
    for (const auto &existing : table.records_)
      if (existing.name == rec.name)
        throw InputError("record table line " + std::to_string(lineno) +
                         ": duplicate record '" + rec.name + "'");
    table.records_.push_back(std::move(rec));
  }
  if (!version_seen)
    throw InputError("record table: missing 'version N' line");
  return table;
}

RecordTable RecordTable::load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("record table: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const RecordTable &RecordTable::builtin() {
  static const RecordTable table = parse(kBuiltinRecordText);
  return table;
}

const char *RecordTable::builtin_text() { return kBuiltinRecordText; }

const KnotRecord *RecordTable::find(const std::string &name) const {
  for (const auto &r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

const KnotRecord *RecordTable::match_fraction(const mpz_class &p,
                                              const mpz_class &q) const {
  for (const auto &r : records_) {
    if (!r.fraction || r.fraction->first != p) continue;
    const mpz_class &q0 = r.fraction->second;
    mpz_class diff1 = (q0 - q) % p, sum1 = (q0 + q) % p;
    if (diff1 == 0 || sum1 == 0) return &r;
    mpz_class prod;
    mpz_fdiv_r(prod.get_mpz_t(), mpz_class(q0 * q).get_mpz_t(), p.get_mpz_t());
    if (prod == 1 || prod == p - 1) return &r;
  }
  return nullptr;
}

} // namespace bandforms
