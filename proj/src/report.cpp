#include "tsallis/report.hpp"

#include <cmath>
#include <ostream>

#include "tsallis/numeric.hpp"

namespace tsallis::experiments {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

void put(nlohmann::json& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = *v;
}

}  // namespace

Summary summarize(const std::vector<double>& values, double truth) {
  Summary s;
  CompensatedSum sum, dev2;
  for (double v : values) {
    if (std::isfinite(v)) {
      ++s.valid;
      sum.add(v);
    } else {
      ++s.failures;
    }
  }
  if (s.valid == 0) return s;
  s.mean = sum.value() / static_cast<double>(s.valid);
  CompensatedSum sq;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    dev2.add((v - s.mean) * (v - s.mean));
    sq.add((v - truth) * (v - truth));
  }
  s.variance = s.valid > 1 ? dev2.value() / static_cast<double>(s.valid - 1) : 0.0;
  s.bias = s.mean - truth;
  s.mse = sq.value() / static_cast<double>(s.valid);
  return s;
}

void apply_summary(Cell& cell, const std::vector<double>& values, std::optional<double> truth) {
  const Summary s = summarize(values, truth.value_or(0.0));
  cell.reps = values.size();
  cell.failures = s.failures;
  cell.flagged = values.empty() ||
                 static_cast<double>(s.failures) > kFlagFailureRate * static_cast<double>(values.size());
  if (s.valid == 0) {
    cell.note = "no valid replications";
    return;
  }
  cell.mean = s.mean;
  cell.variance = s.variance;
  if (truth) {
    cell.true_value = *truth;
    cell.bias = s.bias;
    cell.mse = s.mse;
  }
}

void write_csv(std::ostream& out, const MCReport& r) {
  out << "# tsallis-report v" << kReportSchemaVersion << ",experiment=" << r.experiment
      << ",seed=" << r.seed << ",reps=" << r.reps << '\n';
  out << "experiment,estimator,model,scheme,n,m,alpha,reps,failures,flagged,substream,"
         "true_value,bias,mse,mean,variance,power,critical_value,note\n";
  for (const auto& c : r.cells) {
    out << csv_field(r.experiment) << ',' << csv_field(c.estimator) << ',' << csv_field(c.model)
        << ',' << csv_field(c.scheme) << ',' << c.n << ',' << c.m << ',' << opt(c.alpha) << ','
        << c.reps << ',' << c.failures << ',' << (c.flagged ? 1 : 0) << ',' << c.substream << ','
        << opt(c.true_value) << ',' << opt(c.bias) << ',' << opt(c.mse) << ',' << opt(c.mean)
        << ',' << opt(c.variance) << ',' << opt(c.power) << ',' << opt(c.critical_value) << ','
        << csv_field(c.note) << '\n';
  }
}

nlohmann::json to_json(const MCReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["experiment"] = r.experiment;
  j["seed"] = r.seed;
  j["reps"] = r.reps;
  j["workers"] = r.workers;
  j["wall_time_s"] = r.wall_time_s;
  auto& cells = j["cells"] = nlohmann::json::array();
  for (const auto& c : r.cells) {
    nlohmann::json x;
    x["estimator"] = c.estimator;
    x["model"] = c.model;
    if (!c.scheme.empty()) x["scheme"] = c.scheme;
    x["n"] = c.n;
    x["m"] = c.m;
    put(x, "alpha", c.alpha);
    x["reps"] = c.reps;
    x["failures"] = c.failures;
    x["flagged"] = c.flagged;
    x["substream"] = c.substream;
    put(x, "true_value", c.true_value);
    put(x, "bias", c.bias);
    put(x, "mse", c.mse);
    put(x, "mean", c.mean);
    put(x, "variance", c.variance);
    put(x, "power", c.power);
    put(x, "critical_value", c.critical_value);
    if (!c.note.empty()) x["note"] = c.note;
    cells.push_back(std::move(x));
  }
  return j;
}

}  // namespace tsallis::experiments
