#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsallis/censoring.hpp"

namespace tsallis::experiments {

struct Dataset {
  std::string name;
  std::string description;
  std::vector<double> values;  // failure times for censored sets
  std::optional<censoring::CensoringScheme> scheme;
};

// Built-in real datasets, including three progressively censored subsets
// of the mileage data.
const std::vector<Dataset>& dataset_registry();
const Dataset* find_dataset(const std::string& name);

// FNV-1a of the shortest-decimal values (and scheme, if any).
std::uint64_t dataset_checksum(const Dataset& d);

// Reads values from "inline:1,2,3", a registry name, or a file path. Files
// hold one value per line or comma-separated values; '#' starts a comment.
std::vector<double> load_values(const std::string& source);
std::vector<double> parse_values(const std::string& text, const std::string& origin);

}  // namespace tsallis::experiments
