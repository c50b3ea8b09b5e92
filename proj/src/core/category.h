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

#ifndef SDTK_CORE_CATEGORY_H_
#define SDTK_CORE_CATEGORY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace sdtk {

// The self-disclosure taxonomy. Thirteen demographic attributes followed by
// six personal experiences.
enum class Category : int {
  kLocation,
  kAge,
  kRelationshipStatus,
  kAgeGender,
  kPet,
  kAppearance,
  kHusbandBF,
  kWifeGF,
  kGender,
  kRaceNationality,
  kSexualOrientation,
  kName,
  kContact,
  kHealth,
  kFamily,
  kOccupation,
  kMentalHealth,
  kEducation,
  kFinance,
};

inline constexpr int kNumCategories = 19;

enum class CategoryGroup { kAttribute, kExperience };

inline constexpr std::array<Category, kNumCategories> kAllCategories = {
    Category::kLocation,        Category::kAge,
    Category::kRelationshipStatus, Category::kAgeGender,
    Category::kPet,             Category::kAppearance,
    Category::kHusbandBF,       Category::kWifeGF,
    Category::kGender,          Category::kRaceNationality,
    Category::kSexualOrientation, Category::kName,
    Category::kContact,         Category::kHealth,
    Category::kFamily,          Category::kOccupation,
    Category::kMentalHealth,    Category::kEducation,
    Category::kFinance,
};

CategoryGroup GroupOf(Category category);

// Stable serialized name, e.g. "Age_Gender".
std::string_view CategoryName(Category category);

// Case-insensitive. Separators ('_', ' ', '/', '&', '-') are ignored, so
// "age_gender", "Age/Gender" and "AgeGender" all parse.
std::optional<Category> ParseCategory(std::string_view name);

// Throws ParseError for unknown names.
Category ParseCategoryOrThrow(std::string_view name);

// Short human-readable description with an example phrase.
std::string_view CategoryDescription(Category category);

std::string_view GroupName(CategoryGroup group);

// Tagger-produced categories: everything except Name and Contact, which come
// from the pattern/NER fallback.
inline bool IsTaggerCategory(Category category) {
  return category != Category::kName && category != Category::kContact;
}

}  // namespace sdtk

#endif  // SDTK_CORE_CATEGORY_H_
