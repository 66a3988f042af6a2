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

#include <json.hpp>
#include <string>

#include "family_checks.hpp"
#include "obstructions.hpp"
#include "witt.hpp"

namespace bandforms {

// Deterministic JSON: insertion-ordered keys, big integers as strings,
// canonical fractions as "num/den".
using json = nlohmann::ordered_json;

json form_json(const LinkingForm &f);
json witt_json(const WittResult &w);
json obstruction_json(const ObstructionResult &o);
json bounds_json(const BoundsResult &b);
json section5_json(const Section5Case &c);
json family5_json(const std::vector<Section5Case> &cases);
json paper_examples_json(const PaperExamplesReport &rep);

struct GoeritzReport {
  int crossings = 0;
  int faces = 0;
  int white_regions = 0;
  IntMatrix matrix;
  mpz_class det;
  LinkingForm form;
};

GoeritzReport goeritz_report(const std::string &pd_text);
json goeritz_json(const GoeritzReport &rep);

std::string form_text(const LinkingForm &f);
std::string witt_text(const WittResult &w);
std::string obstruction_text(const ObstructionResult &o);
std::string bounds_text(const BoundsResult &b);
std::string family5_text(const std::vector<Section5Case> &cases);
std::string goeritz_text(const GoeritzReport &rep);
std::string paper_examples_text(const PaperExamplesReport &rep);

} // namespace bandforms
