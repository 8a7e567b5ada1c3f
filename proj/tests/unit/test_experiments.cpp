#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsallis/datasets.hpp"
#include "tsallis/distributions.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/experiments.hpp"
#include "tsallis/quantile.hpp"
#include "tsallis/report.hpp"

using namespace tsallis;
using namespace tsallis::experiments;

TEST_CASE("dataset registry matches the published listings", "[datasets]") {
  const auto* births = find_dataset("birth-weights");
  REQUIRE(births);
  REQUIRE(births->values.size() == 15);
  REQUIRE(births->values[12] == 3.88);
  REQUIRE(find_dataset("birth-weights-analyzed")->values[12] == 3.38);
  const Sample analyzed(find_dataset("birth-weights-analyzed")->values);
  REQUIRE(analyzed.mean() == Catch::Approx(3.07).margin(1e-12));
  REQUIRE(analyzed.sd(0) == Catch::Approx(0.4899).margin(5e-5));

  const auto* miles = find_dataset("mileages");
  REQUIRE(miles->values.size() == 19);
  REQUIRE(miles->values.front() == 162);
  REQUIRE(miles->values.back() == 2880);
  REQUIRE(find_dataset("appliance-cycles")->values.size() == 50);

  const std::vector<double> a{162, 200, 393, 508, 539, 778, 884, 1003, 1463, 1984};
  const std::vector<double> b{162, 200, 271, 393, 508, 539, 629, 706, 778, 884};
  const std::vector<double> c{162, 200, 271, 320, 393, 539, 706, 778, 1003, 1182};
  REQUIRE(find_dataset("mileages-pc2-a")->values == a);
  REQUIRE(find_dataset("mileages-pc2-b")->values == b);
  REQUIRE(find_dataset("mileages-pc2-c")->values == c);
  REQUIRE(find_dataset("mileages-pc2-a")->scheme->to_string() == "9,0*9");
  REQUIRE(find_dataset("mileages-pc2-b")->scheme->to_string() == "0*9,9");
  REQUIRE(find_dataset("mileages-pc2-c")->scheme->to_string() == "5,0*8,4");
  for (const auto& d : dataset_registry())
    if (d.scheme)
      for (double v : d.values)
        REQUIRE(std::find(miles->values.begin(), miles->values.end(), v) != miles->values.end());

  // Checksums pin the embedded values.
  REQUIRE(dataset_checksum(*births) == 0xce6248bab4f60295ULL);
  REQUIRE(dataset_checksum(*miles) == 0x399f4e7d5e7a766aULL);
  REQUIRE(dataset_checksum(*find_dataset("appliance-cycles")) == 0x1f1b214e15828eeeULL);
  REQUIRE(find_dataset("nope") == nullptr);
}

TEST_CASE("value loading", "[datasets]") {
  REQUIRE(load_values("inline:1,2.5,3") == std::vector<double>{1, 2.5, 3});
  REQUIRE(parse_values("# header\n1\n2, 3\n\n4 # trailing\n", "t") == std::vector<double>{1, 2, 3, 4});
  const auto path = std::filesystem::temp_directory_path() / "tsallis-values.txt";
  { std::ofstream(path) << "0.5\n1.5\n"; }
  REQUIRE(load_values(path.string()) == std::vector<double>{0.5, 1.5});
  std::filesystem::remove(path);
  REQUIRE_THROWS_AS(load_values("inline:1,x"), DomainError);
  REQUIRE_THROWS(load_values("/nonexistent/file.txt"));
}

TEST_CASE("summaries", "[report]") {
  const auto s = summarize({1.0, 2.0, NAN, 3.0}, 1.5);
  REQUIRE(s.valid == 3);
  REQUIRE(s.failures == 1);
  REQUIRE(s.mean == 2.0);
  REQUIRE(s.variance == 1.0);
  REQUIRE(s.bias == 0.5);
  REQUIRE(s.mse == Catch::Approx((0.25 + 0.25 + 2.25) / 3));
  REQUIRE(s.mse >= s.bias * s.bias);
  Cell c;
  apply_summary(c, {1.0, NAN}, 0.0);
  REQUIRE(c.flagged);
  REQUIRE(c.failures == 1);
}

TEST_CASE("bias/MSE table", "[experiments]") {
  const auto models = {dist::DistributionModel::normal(0, 1)};
  const std::vector<GridPoint> grid = {{20, 4, 2.0}, {20, 4, 1.0}};
  const auto r1 = run_bias_mse({spacings::Estimator::V, spacings::Estimator::E}, models, grid, 200, 5, 1);
  const auto r2 = run_bias_mse({spacings::Estimator::V, spacings::Estimator::E}, models, grid, 200, 5, 3);
  REQUIRE(r1.cells.size() == 4);
  std::ostringstream o1, o2;
  write_csv(o1, r1);
  write_csv(o2, r2);
  REQUIRE(o1.str() == o2.str());
  for (const auto& c : r1.cells) {
    REQUIRE(c.reps == 200);
    REQUIRE(c.mse.value() >= c.bias.value() * c.bias.value() - 1e-15);
    REQUIRE(c.substream != 0);
  }
  REQUIRE(r1.cells[1].true_value.value() == Catch::Approx(dist::true_shannon(dist::DistributionModel::normal(0, 1))));
  const auto empty = run_bias_mse({spacings::Estimator::V}, models, {}, 10, 1);
  REQUIRE(empty.cells.empty());

  // Single replicate: the bias is the error of the one estimate.
  const auto one = run_bias_mse({spacings::Estimator::V}, models, {{20, 4, 2.0}}, 1, 9);
  Rng rng = Rng::substream(one.cells[0].substream, {0});
  const Sample s = dist::sample(dist::DistributionModel::normal(0, 1), 20, rng);
  REQUIRE(one.cells[0].bias.value() ==
          spacings::tsallis_v(s, {4, 2.0}) - dist::true_tsallis(dist::DistributionModel::normal(0, 1), 2.0).value);
}

TEST_CASE("bias/MSE default grid", "[experiments]") {
  const auto g = bias_mse_default_grid();
  REQUIRE(g.size() == 36);
  REQUIRE(g.front().n == 20);
  REQUIRE(g.front().m == 4);
}

TEST_CASE("censored table and schemes", "[experiments]") {
  const auto schemes = pc2_default_schemes();
  REQUIRE(schemes.size() == 14);
  for (const auto& s : schemes) REQUIRE(s.n() == 20);
  const auto r = run_pc2_table({schemes[5]}, {dist::DistributionModel::exponential(1)}, {1.5, 2.0}, 100, 3);
  REQUIRE(r.cells.size() == 2);
  REQUIRE(r.cells[0].scheme == "0*9,10");
  REQUIRE(r.cells[0].m == 3);
  REQUIRE(r.cells[0].mean.has_value());
  REQUIRE(r.cells[0].variance.has_value());
}

TEST_CASE("power table", "[experiments]") {
  REQUIRE(parse_test_family("exponentiality") == TestFamily::Exponentiality);
  REQUIRE(default_alternatives(TestFamily::Normality).size() == 7);
  REQUIRE(default_alternatives(TestFamily::Exponentiality).size() == 9);
  REQUIRE(default_power_grid(TestFamily::PC2Exponentiality).size() == 15);
  const auto r = run_power_table(TestFamily::Exponentiality, {dist::DistributionModel::weibull(0.5)},
                                 {{20, 4, 2.0, std::nullopt}}, 300, 11, 0.05, 1, 1000);
  REQUIRE(r.cells.size() == 3);
  REQUIRE(r.cells[0].estimator == "T_alpha");
  REQUIRE(r.cells[1].estimator == "KL_mn");
  REQUIRE(r.cells[2].estimator == "T");
  for (const auto& c : r.cells) {
    REQUIRE(c.power.value() >= 0.0);
    REQUIRE(c.power.value() <= 1.0);
    REQUIRE(c.critical_value.has_value());
  }
  const auto again = run_power_table(TestFamily::Exponentiality, {dist::DistributionModel::weibull(0.5)},
                                     {{20, 4, 2.0, std::nullopt}}, 300, 11, 0.05, 2, 1000);
  for (std::size_t i = 0; i < r.cells.size(); ++i) REQUIRE(r.cells[i].power == again.cells[i].power);
}

TEST_CASE("empirical influence function", "[experiments]") {
  const Sample base = normal_scores_sample(0, 0.25, 100);
  REQUIRE(base.size() == 100);
  REQUIRE(base.order_stat(1) < 0);
  const auto grid = eif_grid(0, 0.25, 81);
  REQUIRE(grid.front() == -1.0);
  REQUIRE(grid.back() == 1.0);
  const EstimatorFn constant = [](const Sample&) { return 3.0; };
  for (double v : empirical_influence(constant, base, grid)) REQUIRE(v == 0.0);

  const auto curves = run_eif(spacings::Estimator::V, 0, 0.25, 100, {5, 10}, 2.0, grid);
  REQUIRE(curves.size() == 2);
  const auto& c = curves[0];
  for (double v : c.eif) REQUIRE(std::isfinite(v));
  // Recompute the point r = 0 directly.
  const std::size_t mid = 40;
  REQUIRE(grid[mid] == 0.0);
  const double direct = 101.0 * (spacings::tsallis_v(base.with(0.0), {5, 2.0}) - spacings::tsallis_v(base, {5, 2.0}));
  REQUIRE(std::fabs(c.eif[mid] - direct) < 1e-12);
  REQUIRE_THROWS_AS(run_eif(spacings::Estimator::V, 0, 0.25, 10, {5}, 2.0, grid), DomainError);
  REQUIRE(eif_report(curves).cells.size() == 2 * 81);
}

TEST_CASE("EIF is continuous between order-statistic crossings", "[experiments][property]") {
  const Sample base = normal_scores_sample(0, 0.25, 100);
  const auto grid = eif_grid(0, 0.25, 4001);
  const auto c = run_eif(spacings::Estimator::E, 0, 0.25, 100, {10}, 0.9, grid)[0];
  const auto sorted = base.sorted();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    // Between consecutive grid points with no order statistic in between the
    // curve moves by at most a small amount.
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), grid[i - 1]);
    const auto hi = std::lower_bound(sorted.begin(), sorted.end(), grid[i]);
    if (lo == hi) REQUIRE(std::fabs(c.eif[i] - c.eif[i - 1]) < 0.5);
  }
}

TEST_CASE("quantile table", "[experiments]") {
  const auto gov = dist::DistributionModel::govindarajulu(0, 0.75, 0.25);
  REQUIRE(quantile_default_grid(gov).size() == 6);
  REQUIRE(quantile_default_grid(dist::DistributionModel::normal(0, 1)).size() == 15);
  const auto r = run_quantile_table({gov}, {{50, 0.15}, {50, 2.0}}, 50, 4);
  REQUIRE(r.cells.size() == 2);
  REQUIRE(r.cells[0].bias.has_value());
  REQUIRE_FALSE(r.cells[1].bias.has_value());
  REQUIRE(r.cells[1].note == "true entropy does not exist");

  const auto one = run_quantile_table({dist::DistributionModel::exponential(1)}, {{30, 2.0}}, 1, 12);
  Rng rng = Rng::substream(one.cells[0].substream, {0});
  const Sample s = dist::sample(dist::DistributionModel::exponential(1), 30, rng);
  REQUIRE(one.cells[0].bias.value() ==
          quantile::tsallis_quantile(s, quantile::default_spec(s), 2.0) - 0.5);
}

TEST_CASE("report serialisation", "[report]") {
  MCReport r{"demo", 7, 10, 1, 1.5, {}};
  Cell c;
  c.estimator = "tv";
  c.model = "N(0,1)";
  c.n = 20;
  c.m = 4;
  c.alpha = 2.0;
  c.reps = 10;
  c.substream = 99;
  c.bias = -0.25;
  c.note = "a, b";
  r.cells.push_back(c);
  std::ostringstream out;
  write_csv(out, r);
  REQUIRE(out.str() ==
          "# tsallis-report v1,experiment=demo,seed=7,reps=10\n"
          "experiment,estimator,model,scheme,n,m,alpha,reps,failures,flagged,substream,true_value,"
          "bias,mse,mean,variance,power,critical_value,note\n"
          "demo,tv,\"N(0,1)\",,20,4,2,10,0,0,99,,-0.25,,,,,,\"a, b\"\n");
  const auto j = to_json(r);
  REQUIRE(j["cells"][0]["bias"] == -0.25);
  REQUIRE(j["schema_version"] == 1);
  REQUIRE_FALSE(j["cells"][0].contains("mse"));
}
