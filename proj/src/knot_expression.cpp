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

#include "knot_expression.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace bandforms {

std::string KnotLeaf::display() const {
  std::string base;
  switch (kind) {
    case LeafKind::two_bridge:
      base = name.empty() ? "K(" + p.get_str() + "/" + q.get_str() + ")" : name;
      break;
    case LeafKind::goeritz:
      base = name.empty() ? "pd{...}" : name;
      break;
    case LeafKind::named:
      base = name;
      break;
  }
  std::string out = base;
  if (reversed) out = "r(" + out + ")";
  if (mirrored) out = "m(" + out + ")";
  return out;
}

std::string KnotLeaf::key() const {
  std::ostringstream os;
  switch (kind) {
    case LeafKind::two_bridge:
      os << "K:" << p.get_str() << "/" << q.get_str();
      break;
    case LeafKind::goeritz:
      os << "G:" << goeritz.str();
      break;
    case LeafKind::named:
      os << "N:" << name;
      break;
  }
  os << (mirrored ? ":m1" : ":m0") << (reversed ? ":r1" : ":r0");
  return os.str();
}

std::string KnotLeaf::partner_key() const {
  KnotLeaf copy = *this;
  copy.mirrored = !copy.mirrored;
  copy.reversed = !copy.reversed;
  return copy.key();
}

std::string KnotExpression::display() const {
  std::ostringstream os;
  for (size_t i = 0; i < summands.size(); ++i)
    os << (i ? " # " : "") << summands[i].display();
  return os.str();
}

namespace {

struct Parser {
  const std::string &s;
  const RecordTable &table;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string &msg, size_t at) {
    throw InputError("expression parse at offset " + std::to_string(at) +
                     ": " + msg);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  mpz_class integer(bool allow_sign) {
    skip_ws();
    size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) fail("expected an integer", start);
    return mpz_class(s.substr(start, pos - start));
  }

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a term", start);
    return s.substr(start, pos - start);
  }

  std::vector<KnotLeaf> expr() {
    std::vector<KnotLeaf> out = term();
    while (peek_is('#')) {
      ++pos;
      auto rhs = term();
      out.insert(out.end(), rhs.begin(), rhs.end());
    }
    return out;
  }

  std::vector<KnotLeaf> term() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input", pos);
    if (s[pos] == '(') {
      ++pos;
      auto inner = expr();
      expect(')');
      return inner;
    }
    size_t start = pos;
    std::string w = word();
    if (w == "m" && peek_is('(')) {
      ++pos;
      auto inner = expr();
      expect(')');
      for (auto &leaf : inner) leaf.mirrored = !leaf.mirrored;
      return inner;
    }
    if (w == "r" && peek_is('(')) {
      ++pos;
      auto inner = expr();
      expect(')');
      for (auto &leaf : inner) leaf.reversed = !leaf.reversed;
      return inner;
    }
    if (w == "K" && peek_is('(')) {
      ++pos;
      mpz_class p = integer(false);
      expect('/');
      mpz_class q = integer(false);
      expect(')');
      return {make_two_bridge(p, q, start)};
    }
    if (w == "C" && peek_is('(')) {
      ++pos;
      mpz_class m = integer(true);
      expect(',');
      mpz_class n = integer(true);
      expect(')');
      KnotLeaf leaf = two_bridge_of_double_twist(m, n);
      attach_record(leaf);
      return {leaf};
    }
    if (w == "pd" && peek_is('{')) {
      ++pos;
      size_t body = pos;
      while (pos < s.size() && s[pos] != '}') ++pos;
      if (pos >= s.size()) fail("unterminated pd{...}", body);
      std::string pdtext = s.substr(body, pos - body);
      ++pos;
      KnotLeaf leaf;
      leaf.kind = LeafKind::goeritz;
      PdCode pd = parse_pd(pdtext);
      leaf.goeritz = goeritz_matrix(pd, checkerboard(pd));
      return {leaf};
    }
    // bare name from the record table
    const KnotRecord *rec = table.find(w);
    if (!rec)
      fail("unknown knot name '" + w + "' (not in the record table)", start);
    KnotLeaf leaf;
    leaf.name = w;
    leaf.record = rec;
    if (rec->fraction) {
      leaf.kind = LeafKind::two_bridge;
      leaf.p = rec->fraction->first;
      leaf.q = rec->fraction->second;
    } else if (rec->pd) {
      leaf.kind = LeafKind::goeritz;
      PdCode pd = parse_pd(*rec->pd);
      leaf.goeritz = goeritz_matrix(pd, checkerboard(pd));
    } else {
      leaf.kind = LeafKind::named;
    }
    return {leaf};
  }

  KnotLeaf make_two_bridge(const mpz_class &p, const mpz_class &q, size_t at) {
    if (p < 1 || p % 2 == 0)
      fail("two-bridge fraction " + p.get_str() + "/" + q.get_str() +
               ": p must be odd and positive (knot determinants are odd)",
           at);
    if (p == 1) {
      if (q != 1) fail("two-bridge fraction with p = 1 must be 1/1", at);
    } else {
      if (q < 1 || q >= p)
        fail("two-bridge fraction needs 0 < q < p", at);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1)
        fail("two-bridge fraction " + p.get_str() + "/" + q.get_str() +
                 " is not reduced",
             at);
    }
    KnotLeaf leaf;
    leaf.kind = LeafKind::two_bridge;
    leaf.p = p;
    leaf.q = q;
    attach_record(leaf);
    return leaf;
  }

  void attach_record(KnotLeaf &leaf) {
    if (leaf.kind == LeafKind::two_bridge && !leaf.record)
      leaf.record = table.match_fraction(leaf.p, leaf.q);
  }
};

} // namespace

KnotExpression parse_expression(const std::string &text,
                                const RecordTable &table) {
  Parser parser{text, table};
  KnotExpression e;
  e.summands = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw InputError("expression parse at offset " +
                     std::to_string(parser.pos) + ": trailing input '" +
                     text.substr(parser.pos) + "'");
  return e;
}

KnotLeaf two_bridge_of_double_twist(const mpz_class &m, const mpz_class &n) {
  if (m % 2 != 0 && n % 2 != 0)
    throw InputError("C(" + m.get_str() + "," + n.get_str() +
                     ") is not a knot: both twist counts are odd");
  mpz_class p0 = m * n + 1;
  if (p0 == 0)
    throw InputError("C(" + m.get_str() + "," + n.get_str() +
                     "): degenerate fraction (mn+1 = 0)");
  KnotLeaf leaf;
  leaf.kind = LeafKind::two_bridge;
  leaf.name = "C(" + m.get_str() + "," + n.get_str() + ")";
  mpz_class p = abs(p0);
  if (p == 1) {
    leaf.p = 1;
    leaf.q = 1;
    return leaf;
  }
  mpz_class qraw = p0 < 0 ? mpz_class(-n) : n;
  mpz_class q;
  mpz_fdiv_r(q.get_mpz_t(), qraw.get_mpz_t(), p.get_mpz_t());
  leaf.p = p;
  leaf.q = q;
  return leaf;
}

LinkingForm double_cover_form(const KnotLeaf &leaf) {
  LinkingForm base;
  switch (leaf.kind) {
    case LeafKind::two_bridge:
      base = LinkingForm::cyclic(leaf.q, leaf.p);
      break;
    case LeafKind::goeritz:
      base = linking_form_from_goeritz(leaf.goeritz);
      break;
    case LeafKind::named:
      throw InputError("knot '" + leaf.name +
                       "' has no fraction or diagram alias; its linking form "
                       "cannot be built");
  }
  return leaf.mirrored ? base.negated() : base;
}

LinkingForm double_cover_form(const KnotExpression &e) {
  LinkingForm total;
  for (const auto &leaf : e.summands)
    total = direct_sum(total, double_cover_form(leaf));
  return total;
}

mpz_class determinant(const KnotExpression &e) {
  return double_cover_form(e).order();
}

std::optional<KnotExpression> detect_k_minus_mirror(const KnotExpression &e) {
  if (!e.is_sum()) return std::nullopt;
  std::vector<bool> used(e.summands.size(), false);
  KnotExpression j;
  for (size_t i = 0; i < e.summands.size(); ++i) {
    if (used[i]) continue;
    std::string want = e.summands[i].partner_key();
    bool matched = false;
    for (size_t k = i + 1; k < e.summands.size(); ++k) {
      if (used[k]) continue;
      if (e.summands[k].key() == want) {
        used[i] = used[k] = true;
        j.summands.push_back(e.summands[i]);
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  return j;
}

std::optional<int> leaf_bridge(const KnotLeaf &leaf) {
  if (leaf.record && leaf.record->bridge) return *leaf.record->bridge;
  if (leaf.kind == LeafKind::two_bridge) return leaf.p == 1 ? 1 : 2;
  return std::nullopt;
}

std::optional<int> bridge_index(const KnotExpression &e) {
  int sum = 1;
  for (const auto &leaf : e.summands) {
    auto br = leaf_bridge(leaf);
    if (!br) return std::nullopt;
    sum += *br - 1;
  }
  return sum;
}

} // namespace bandforms
