// Copyright 2026 The SDTK Authors.
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

#include "core/category.h"

#include <cctype>

#include "core/errors.h"

namespace sdtk {
namespace {

struct CategoryInfo {
  std::string_view name;
  CategoryGroup group;
  std::string_view description;
};

constexpr std::array<CategoryInfo, kNumCategories> kInfo = {{
    {"Location", CategoryGroup::kAttribute,
     "Specific geographic details about the author, e.g. \"I live in the UK\""},
    {"Age", CategoryGroup::kAttribute,
     "The author's age, e.g. \"I am a 23-year-old\""},
    {"Relationship_Status", CategoryGroup::kAttribute,
     "Marital or romantic status, e.g. \"My partner\""},
    {"Age_Gender", CategoryGroup::kAttribute,
     "Age and gender combined in a single word, e.g. \"(20F)\""},
    {"Pet", CategoryGroup::kAttribute,
     "The author's pets, e.g. \"I have two musk turtles\""},
    {"Appearance", CategoryGroup::kAttribute,
     "Bodily features such as height or weight, e.g. \"I am 6'2\""},
    {"Husband_BF", CategoryGroup::kAttribute,
     "Having a husband, boyfriend or fiance, e.g. \"My husband\""},
    {"Wife_GF", CategoryGroup::kAttribute,
     "Having a wife, girlfriend or fiancee, e.g. \"My gf\""},
    {"Gender", CategoryGroup::kAttribute,
     "The author's gender, e.g. \"I'm just a girl\""},
    {"Race_Nationality", CategoryGroup::kAttribute,
     "Nationality, race or ethnicity, e.g. \"As Italian\""},
    {"Sexual_Orientation", CategoryGroup::kAttribute,
     "Sexual orientation, e.g. \"I'm a straight man\""},
    {"Name", CategoryGroup::kAttribute,
     "The author's name, e.g. \"my name is xxx\""},
    {"Contact", CategoryGroup::kAttribute,
     "Contact details or handles, e.g. \"xxx is my ig\""},
    {"Health", CategoryGroup::kExperience,
     "Diseases, conditions, medications or tests, e.g. \"I am pretty sure I "
     "have autism\""},
    {"Family", CategoryGroup::kExperience,
     "Disclosures about family members, e.g. \"My little brother (9M)\""},
    {"Occupation", CategoryGroup::kExperience,
     "Current or past occupations, e.g. \"I'm a motorcycle tourer (by "
     "profession)\""},
    {"Mental_Health", CategoryGroup::kExperience,
     "Feelings and emotional state, e.g. \"I struggle with depression and "
     "ADHD\""},
    {"Education", CategoryGroup::kExperience,
     "Studies and degrees, e.g. \"I got accepted to UCLA (IS)\""},
    {"Finance", CategoryGroup::kExperience,
     "Personal financial details, e.g. \"I was making $68k a year\""},
}};

std::string Normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || c == ' ' || c == '/' || c == '&' || c == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

CategoryGroup GroupOf(Category category) {
  return kInfo[static_cast<int>(category)].group;
}

std::string_view CategoryName(Category category) {
  return kInfo[static_cast<int>(category)].name;
}

std::string_view CategoryDescription(Category category) {
  return kInfo[static_cast<int>(category)].description;
}

std::string_view GroupName(CategoryGroup group) {
  return group == CategoryGroup::kAttribute ? "attribute" : "experience";
}

std::optional<Category> ParseCategory(std::string_view name) {
  const std::string key = Normalize(name);
  if (key.empty()) return std::nullopt;
  for (Category c : kAllCategories) {
    if (Normalize(CategoryName(c)) == key) return c;
  }
  return std::nullopt;
}

Category ParseCategoryOrThrow(std::string_view name) {
  auto c = ParseCategory(name);
  if (!c) throw ParseError("unknown category '" + std::string(name) + "'");
  return *c;
}

}  // namespace sdtk
