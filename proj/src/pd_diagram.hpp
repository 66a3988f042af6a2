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

#pragma once

#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "linking_form.hpp"

namespace bandforms {

// One crossing X(a,b,c,d): a is the incoming under-strand edge, b, c, d
// follow counterclockwise.  Edges are labeled 1..2n consecutively along
// the knot, so the under-strand exits at c = a+1 (mod 2n) and the
// over-strand occupies b and d with consecutive labels.
struct PdCrossing {
  long e[4];
};

struct PdCode {
  std::vector<PdCrossing> crossings;
  // slot (1 or 3) where the over-strand enters, per crossing
  std::vector<int> over_in_slot;

  int size() const { return static_cast<int>(crossings.size()); }
  int edge_count() const { return 2 * size(); }
};

// Grammar: `X(a,b,c,d)` tokens separated by `;` or whitespace, labels
// 1..2n each appearing exactly twice.  Multi-component inputs (links) are
// rejected; the invariants computed here are for knots.
PdCode parse_pd(const std::string &text);

// Faces of the underlying 4-valent planar graph via its rotation system.
// A corner is the sector between consecutive edge slots at a crossing;
// corner id = 4*crossing + slot.
struct DiagramFaces {
  std::vector<std::vector<int>> face_corners; // per face, its corner ids
  std::vector<int> face_of_corner;            // corner id -> face index
};

// Traces faces and checks Euler's formula (n crossings -> n + 2 faces).
DiagramFaces trace_faces(const PdCode &pd);

struct CheckerboardColoring {
  DiagramFaces faces;
  std::vector<int> color;       // per face: 1 = white, 0 = black
  std::vector<int> white_index; // per face: dense white region index or -1
  int white_count = 0;
};

// Proper two-coloring of the faces; the smaller family is white, with the
// tie broken toward the family containing the face whose sorted edge-label
// sequence is lexicographically least.
CheckerboardColoring checkerboard(const PdCode &pd);
CheckerboardColoring checkerboard(const PdCode &pd, const DiagramFaces &faces);

// Goeritz matrix over the white regions (first region's row and column
// deleted).  |det| is the knot determinant.
IntMatrix goeritz_matrix(const PdCode &pd, const CheckerboardColoring &col);

mpz_class goeritz_determinant(const IntMatrix &gm);

// Linking form on coker(G) with pairings from G^{-1} mod Z, up to a global
// sign convention (every verdict downstream is sign-symmetric).
LinkingForm linking_form_from_goeritz(const IntMatrix &gm);

} // namespace bandforms
