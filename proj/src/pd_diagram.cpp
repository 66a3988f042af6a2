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

#include "pd_diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <queue>

#include "errors.hpp"

namespace bandforms {

namespace {

long parse_int(const std::string &s, size_t &pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start)
    throw InputError("PD parse: expected an integer at offset " +
                     std::to_string(start));
  return std::stol(s.substr(start, pos - start));
}

void skip_ws(const std::string &s, size_t &pos) {
  while (pos < s.size() &&
         (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ';'))
    ++pos;
}

void expect(const std::string &s, size_t &pos, char c) {
  if (pos >= s.size() || s[pos] != c)
    throw InputError(std::string("PD parse: expected '") + c + "' at offset " +
                     std::to_string(pos));
  ++pos;
}

} // namespace

PdCode parse_pd(const std::string &text) {
  PdCode pd;
  size_t pos = 0;
  skip_ws(text, pos);
  while (pos < text.size()) {
    if (text[pos] != 'X')
      throw InputError("PD parse: expected 'X' at offset " +
                       std::to_string(pos));
    ++pos;
    expect(text, pos, '(');
    PdCrossing c{};
    for (int i = 0; i < 4; ++i) {
      skip_ws(text, pos);
      c.e[i] = parse_int(text, pos);
      skip_ws(text, pos);
      if (i < 3) expect(text, pos, ',');
    }
    expect(text, pos, ')');
    pd.crossings.push_back(c);
    skip_ws(text, pos);
  }

  int n = pd.size();
  if (n == 0) throw InputError("PD parse: empty diagram");
  long m = 2L * n;

  // every label in 1..2n exactly twice
  std::vector<int> count(m + 1, 0);
  for (const auto &c : pd.crossings)
    for (long e : c.e) {
      if (e < 1 || e > m)
        throw InputError("PD parse: edge label " + std::to_string(e) +
                         " outside 1.." + std::to_string(m));
      ++count[e];
    }
  for (long e = 1; e <= m; ++e)
    if (count[e] != 2)
      throw InputError("PD parse: edge label " + std::to_string(e) +
                       " appears " + std::to_string(count[e]) +
                       " times, expected 2");

  auto succ = [m](long e) { return e % m + 1; };

  // orient strands: under-strand a -> c with c = a+1; over-strand direction
  // from the consecutive labels of b and d
  std::vector<long> head_at(m + 1, -1), tail_at(m + 1, -1);
  auto set_head = [&](long e, long crossing) {
    if (head_at[e] != -1)
      throw InputError("PD parse: edge " + std::to_string(e) +
                       " enters two crossings; input is not a single knot");
    head_at[e] = crossing;
  };
  auto set_tail = [&](long e, long crossing) {
    if (tail_at[e] != -1)
      throw InputError("PD parse: edge " + std::to_string(e) +
                       " leaves two crossings; input is not a single knot");
    tail_at[e] = crossing;
  };
  pd.over_in_slot.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto &c = pd.crossings[i];
    if (succ(c.e[0]) != c.e[2])
      throw InputError("PD parse: crossing " + std::to_string(i + 1) +
                       ": under-strand exit " + std::to_string(c.e[2]) +
                       " is not the successor of entry " +
                       std::to_string(c.e[0]));
    set_head(c.e[0], i);
    set_tail(c.e[2], i);
    if (succ(c.e[1]) == c.e[3]) {
      pd.over_in_slot[i] = 1;
      set_head(c.e[1], i);
      set_tail(c.e[3], i);
    } else if (succ(c.e[3]) == c.e[1]) {
      pd.over_in_slot[i] = 3;
      set_head(c.e[3], i);
      set_tail(c.e[1], i);
    } else {
      throw InputError("PD parse: crossing " + std::to_string(i + 1) +
                       ": over-strand labels " + std::to_string(c.e[1]) +
                       "," + std::to_string(c.e[3]) + " are not consecutive");
    }
  }
  for (long e = 1; e <= m; ++e)
    if (head_at[e] < 0 || tail_at[e] < 0)
      throw InputError("PD parse: edge " + std::to_string(e) +
                       " has inconsistent orientation; input is not a "
                       "single knot");
  return pd;
}

DiagramFaces trace_faces(const PdCode &pd) {
  int n = pd.size();
  long m = pd.edge_count();

  // the two (crossing, slot) occurrences of each edge label
  std::vector<std::array<int, 2>> occ(m + 1, {-1, -1});
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) {
      long e = pd.crossings[i].e[s];
      if (occ[e][0] < 0)
        occ[e][0] = 4 * i + s;
      else
        occ[e][1] = 4 * i + s;
    }

  auto twin = [&](int dart) {
    long e = pd.crossings[dart / 4].e[dart % 4];
    return occ[e][0] == dart ? occ[e][1] : occ[e][0];
  };
  // face boundary: from the corner between slots s and s+1, cross the edge
  // at slot s+1 and continue at the corner counterclockwise past the
  // arrival slot
  auto next_corner = [&](int corner) {
    int c = corner / 4, s = corner % 4;
    int t = twin(4 * c + (s + 1) % 4);
    return t; // corner id (c', s') shares its index with slot s'
  };

  DiagramFaces out;
  out.face_of_corner.assign(4 * n, -1);
  for (int start = 0; start < 4 * n; ++start) {
    if (out.face_of_corner[start] >= 0) continue;
    int id = static_cast<int>(out.face_corners.size());
    std::vector<int> cycle;
    int cur = start;
    do {
      out.face_of_corner[cur] = id;
      cycle.push_back(cur);
      cur = next_corner(cur);
    } while (cur != start);
    out.face_corners.push_back(std::move(cycle));
  }

  int f = static_cast<int>(out.face_corners.size());
  if (n - 2 * n + f != 2)
    throw InputError("PD faces: Euler check failed (" + std::to_string(f) +
                     " faces for " + std::to_string(n) +
                     " crossings); the code does not describe a planar "
                     "diagram");
  return out;
}

namespace {

// sorted edge labels along a face, the deterministic face identity used
// for ordering and tie-breaks
std::vector<long> face_key(const PdCode &pd, const std::vector<int> &corners) {
  std::vector<long> labels;
  labels.reserve(corners.size());
  for (int corner : corners) {
    int c = corner / 4, s = corner % 4;
    labels.push_back(pd.crossings[c].e[(s + 1) % 4]);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

} // namespace

CheckerboardColoring checkerboard(const PdCode &pd) {
  return checkerboard(pd, trace_faces(pd));
}

CheckerboardColoring checkerboard(const PdCode &pd, const DiagramFaces &faces) {
  int f = static_cast<int>(faces.face_corners.size());
  std::vector<int> color(f, -1);
  std::queue<int> work;
  color[0] = 0;
  work.push(0);
  int seen = 1;
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    for (int corner : faces.face_corners[cur]) {
      // neighbor across the edge at slot corner+1: the corner on the other
      // side of that edge end
      int c = corner / 4, s = corner % 4;
      int other = faces.face_of_corner[4 * c + (s + 1) % 4];
      // corners (c,s) and (c,s+1) flank the edge end at slot s+1
      if (other == cur) continue;
      if (color[other] == -1) {
        color[other] = 1 - color[cur];
        work.push(other);
        ++seen;
      } else if (color[other] == color[cur]) {
        throw InputError("checkerboard: faces admit no proper two-coloring; "
                         "corrupt diagram");
      }
    }
  }
  if (seen != f)
    throw InputError("checkerboard: face adjacency is not connected; "
                     "corrupt diagram");

  int ones = 0;
  for (int c : color) ones += c;
  bool white_is_one;
  if (ones * 2 != f) {
    white_is_one = ones * 2 < f;
  } else {
    // tie: the family holding the lexicographically least face key is white
    std::vector<long> best[2];
    for (int i = 0; i < f; ++i) {
      auto key = face_key(pd, faces.face_corners[i]);
      auto &slot = best[color[i]];
      if (slot.empty() || key < slot) slot = key;
    }
    white_is_one = best[1] < best[0];
  }

  CheckerboardColoring out;
  out.faces = faces;
  out.color.resize(f);
  for (int i = 0; i < f; ++i)
    out.color[i] = color[i] == (white_is_one ? 1 : 0) ? 1 : 0;

  // dense white indices ordered by face key
  std::vector<std::pair<std::vector<long>, int>> whites;
  for (int i = 0; i < f; ++i)
    if (out.color[i] == 1)
      whites.push_back({face_key(pd, faces.face_corners[i]), i});
  std::sort(whites.begin(), whites.end());
  out.white_index.assign(f, -1);
  for (size_t w = 0; w < whites.size(); ++w)
    out.white_index[whites[w].second] = static_cast<int>(w);
  out.white_count = static_cast<int>(whites.size());
  return out;
}

IntMatrix goeritz_matrix(const PdCode &pd, const CheckerboardColoring &col) {
  int n = pd.size();
  if (n < 1) throw InputError("goeritz: empty diagram");
  int w = col.white_count;
  IntMatrix full(w, w);
  for (int i = 0; i < n; ++i) {
    int fc[4];
    for (int s = 0; s < 4; ++s) fc[s] = col.faces.face_of_corner[4 * i + s];
    bool diag02_white = col.color[fc[0]] == 1;
    bool diag13_white = col.color[fc[1]] == 1;
    if (diag02_white == diag13_white ||
        col.color[fc[0]] != col.color[fc[2]] ||
        col.color[fc[1]] != col.color[fc[3]])
      throw ConsistencyError("goeritz: corner coloring at a crossing is "
                             "improper");
    // crossing type from which diagonal the white regions occupy,
    // relative to the under-strand slots
    int eta = diag13_white ? 1 : -1;
    int ra = col.white_index[fc[diag13_white ? 1 : 0]];
    int rb = col.white_index[fc[diag13_white ? 3 : 2]];
    if (ra == rb) continue; // nugatory: no off-diagonal contribution
    full.at(ra, rb) -= eta;
    full.at(rb, ra) -= eta;
  }
  for (int i = 0; i < w; ++i) {
    mpz_class s = 0;
    for (int j = 0; j < w; ++j)
      if (j != i) s += full.at(i, j);
    full.at(i, i) = -s;
  }
  IntMatrix out(w - 1, w - 1);
  for (int i = 1; i < w; ++i)
    for (int j = 1; j < w; ++j) out.at(i - 1, j - 1) = full.at(i, j);
  return out;
}

mpz_class goeritz_determinant(const IntMatrix &gm) {
  mpz_class d = det(gm);
  if (d == 0)
    throw InputError("goeritz: zero determinant; not a knot diagram or "
                     "degenerate coloring");
  if (d % 2 == 0)
    throw ConsistencyError("goeritz: even determinant from a one-component "
                           "diagram");
  return d;
}

LinkingForm linking_form_from_goeritz(const IntMatrix &gm) {
  mpz_class d = goeritz_determinant(gm); // also rejects det 0
  (void)d;
  int k = gm.rows();
  SnfResult snf = smith_normal_form(gm);
  // gm^{-1} = V * S^{-1} * U, exact rationals
  std::vector<std::vector<RationalModOne>> gram(k, std::vector<RationalModOne>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      RationalModOne v;
      for (int t = 0; t < k; ++t) {
        if (snf.v.at(i, t) == 0 || snf.u.at(t, j) == 0) continue;
        v = v + RationalModOne(snf.v.at(i, t) * snf.u.at(t, j), snf.s.at(t, t));
      }
      gram[i][j] = v;
    }
  return LinkingForm::from_presentation_gram(gm, gram);
}

} // namespace bandforms
