#include "tsallis/datasets.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis::experiments {

namespace {

using censoring::CensoringScheme;

std::vector<Dataset> build_registry() {
  const std::vector<double> births{2.79, 2.56, 3.64, 3.01, 2.16, 2.25, 3.19, 3.06,
                                   2.61, 3.10, 3.42, 3.55, 3.88, 3.51, 3.82};
  // The published summary (mean 3.07, sd 0.4899) and test statistics for
  // this data correspond to the 13th value being 3.38, not 3.88.
  std::vector<double> births_analyzed = births;
  births_analyzed[12] = 3.38;

  return {
      {"birth-weights", "Weights at birth (kg) of 15 babies, as listed in the source", births,
       std::nullopt},
      {"birth-weights-analyzed",
       "Birth weights with the 13th value read as 3.38; reproduces the reported mean 3.07 and "
       "sd 0.4899",
       births_analyzed, std::nullopt},
      {"mileages", "Mileages at failure of 19 military personnel carriers",
       {162, 200, 271, 320, 393, 508, 539, 629, 706, 778, 884, 1003, 1101, 1182, 1463, 1603, 1984,
        2355, 2880},
       std::nullopt},
      {"appliance-cycles", "Thousands of cycles to failure of 50 electrical appliances",
       {0.014, 0.034, 0.059, 0.061, 0.069, 0.080, 0.123, 0.142, 0.165, 0.210,
        0.381, 0.464, 0.479, 0.556, 0.574, 0.839, 0.917, 0.969, 0.991, 1.064,
        1.088, 1.091, 1.174, 1.270, 1.275, 1.355, 1.397, 1.477, 1.578, 1.649,
        1.702, 1.893, 1.932, 2.001, 2.161, 2.292, 2.326, 2.337, 2.628, 2.785,
        2.811, 2.886, 2.993, 3.122, 3.248, 3.715, 3.790, 3.857, 3.912, 4.100},
       std::nullopt},
      {"mileages-pc2-a", "Censored subset of the mileages, n = 19, R = (9,0*9)",
       {162, 200, 393, 508, 539, 778, 884, 1003, 1463, 1984}, CensoringScheme::parse("9,0*9", 19)},
      {"mileages-pc2-b", "Censored subset of the mileages, n = 19, R = (0*9,9)",
       {162, 200, 271, 393, 508, 539, 629, 706, 778, 884}, CensoringScheme::parse("0*9,9", 19)},
      {"mileages-pc2-c", "Censored subset of the mileages, n = 19, R = (5,0*8,4)",
       {162, 200, 271, 320, 393, 539, 706, 778, 1003, 1182},
       CensoringScheme::parse("5,0*8,4", 19)},
  };
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<Dataset>& dataset_registry() {
  static const std::vector<Dataset> registry = build_registry();
  return registry;
}

const Dataset* find_dataset(const std::string& name) {
  for (const auto& d : dataset_registry())
    if (d.name == name) return &d;
  return nullptr;
}

std::uint64_t dataset_checksum(const Dataset& d) {
  std::string bytes;
  for (double v : d.values) {
    bytes += format_double(v);
    bytes += ',';
  }
  if (d.scheme) bytes += "n=" + std::to_string(d.scheme->n()) + ";R=" + d.scheme->to_string();
  return fnv1a(bytes);
}

std::vector<double> parse_values(const std::string& text, const std::string& origin) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t start = 0;
    while (start <= line.size()) {
      auto comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      const std::string item = trim(line.substr(start, comma - start));
      if (!item.empty())
        out.push_back(parse_double(item, origin + " line " + std::to_string(lineno)));
      start = comma + 1;
    }
  }
  if (out.empty()) throw DomainError(origin + ": no data values found");
  return out;
}

std::vector<double> load_values(const std::string& source) {
  if (source.rfind("inline:", 0) == 0) return parse_values(source.substr(7), "inline data");
  if (const Dataset* d = find_dataset(source)) return d->values;
  std::ifstream in(source);
  if (!in)
    throw DomainError("data source '" + source + "' is neither a dataset name nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_values(buf.str(), source);
}

}  // namespace tsallis::experiments
