#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bcdom/bench.hpp"
#include "bcdom/errors.hpp"
#include "bcdom/generators.hpp"
#include "support/brute_force.hpp"

using namespace bcdom;

namespace {

std::vector<Instance> grid_family() {
  std::vector<Instance> out;
  for (int w = 2; w <= 6; ++w)
    for (int h = 2; h <= 6; ++h)
      out.push_back(instance_from_genspec("grid:w=" + std::to_string(w) + ",h=" + std::to_string(h)));
  return out;
}

}  // namespace

TEST_CASE("parse_algo_spec") {
  CHECK(parse_algo_spec("classical") == AlgoSpec{Algorithm::classical, {}});
  CHECK(parse_algo_spec("fixed:3") == AlgoSpec{Algorithm::fixed_i, 3U});
  CHECK(parse_algo_spec("auto") == AlgoSpec{Algorithm::auto_detect, {}});
  CHECK(parse_algo_spec("hybrid:2") == AlgoSpec{Algorithm::hybrid, 2U});
  CHECK(parse_algo_spec("hybrid") == AlgoSpec{Algorithm::hybrid, {}});
  CHECK_THROWS_AS(parse_algo_spec("fixed"), ParseError);
  CHECK_THROWS_AS(parse_algo_spec("greedy"), ParseError);
  CHECK_THROWS_AS(parse_algo_spec("classical:2"), ParseError);
  CHECK(parse_algo_list("classical,fixed:2,auto").size() == 3);
  CHECK(to_string(parse_algo_spec("fixed:4")) == "fixed:4");
}

TEST_CASE("graph_from_genspec") {
  CHECK(graph_from_genspec("gnp:n=5,p=0.5,seed=42") == gen_gnp(5, 0.5, 42));
  CHECK(graph_from_genspec("grid:w=3,h=2") == gen_grid(3, 2));
  CHECK(graph_from_genspec("tree:n=6,seed=7") == gen_random_tree(6, 7));
  CHECK(graph_from_genspec("degenerate:n=8,d=2,seed=3") == gen_d_degenerate(8, 2, 3).graph);
  CHECK_THROWS_AS(graph_from_genspec("cube:n=3"), ParseError);
  CHECK_THROWS_AS(graph_from_genspec("gnp:n=5,p=0.5"), ParseError);
  CHECK_THROWS_AS(graph_from_genspec("gnp:n=5,p=2,seed=1"), ParseError);
  CHECK_THROWS_AS(graph_from_genspec("grid:w=3,h=2,z=1"), ParseError);
  CHECK_THROWS_AS(graph_from_genspec("grid:w=x,h=2"), ParseError);
}

TEST_CASE("run_bench: grid sweep with the exact oracle") {
  const auto algos = parse_algo_list("classical,fixed:2,hybrid:2");
  BenchOptions opts;
  opts.with_exact = true;
  opts.exact_max_n = 36;
  const auto rows = run_bench(grid_family(), algos, opts);
  REQUIRE(rows.size() == 75);
  for (std::size_t k = 0; k < rows.size(); k += 3) {
    CHECK(rows[k].graph_name == rows[k + 2].graph_name);
    CHECK(rows[k].algorithm == "classical");
    CHECK(rows[k + 2].algorithm == "hybrid");
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(rows[k + a].error.empty());
      REQUIRE(rows[k + a].ratio);
      CHECK(*rows[k + a].ratio >= 1.0);
    }
    CHECK(*rows[k + 2].ratio <= *rows[k].ratio);
    CHECK(*rows[k + 1].ds_size == *rows[k].ds_size);  // fixed i=2 is the classical greedy
  }
  CHECK(rows[0].n == 4);
  CHECK(rows[0].m == 4);
  CHECK(rows[0].opt_size == std::size_t{2});
}

TEST_CASE("run_bench: empty inputs give a header-only CSV") {
  const auto rows = run_bench({}, parse_algo_list("classical"), {});
  CHECK(rows.empty());
  CHECK(to_csv(rows) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("run_bench: auto on trees detects t = 2") {
  std::vector<Instance> trees;
  for (int seed = 0; seed < 10; ++seed)
    trees.push_back(instance_from_genspec("tree:n=" + std::to_string(3 + seed) + ",seed=" +
                                          std::to_string(seed)));
  for (const BenchRecord& r : run_bench(trees, parse_algo_list("auto"), {})) {
    CHECK(r.t_detected == 2U);
    CHECK(r.error.empty());
  }
}

TEST_CASE("CSV formatting") {
  BenchRecord r;
  r.graph_name = "a,\"b\"";
  r.n = 3;
  r.m = 2;
  r.algorithm = "fixed";
  r.i_param = 3;
  r.ds_size = 2;
  r.opt_size = 1;
  r.ratio = 2.0;
  r.rounds = 1;
  r.elapsed_micros = 17;
  const std::vector<BenchRecord> rows{r};
  CHECK(to_csv(rows) == std::string(kCsvHeader) + "\n\"a,\"\"b\"\"\",3,2,fixed,3,2,1,2.000000,,1,17,\n");
}

TEST_CASE("run_bench: unreadable files become error rows") {
  const auto dir = std::filesystem::temp_directory_path() / "bcdom_bench_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "a_good.gr") << "p ds 2 1\ne 0 1\n";
  std::ofstream(dir / "b_bad.gr") << "p ds 2 1\ne 0 5\n";
  std::ofstream(dir / "c_ignored.txt") << "nothing";

  const auto instances = instances_from_dir(dir.string());
  REQUIRE(instances.size() == 2);
  CHECK(instances[0].name == "a_good.gr");
  CHECK(instances[1].name == "b_bad.gr");
  CHECK_FALSE(instances[1].graph);

  BenchOptions opts;
  opts.timing = false;
  const auto rows = run_bench(instances, parse_algo_list("classical,auto"), opts);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].error.empty());
  CHECK(rows[0].ds_size == std::size_t{1});
  CHECK_FALSE(rows[2].error.empty());
  CHECK_FALSE(rows[3].ds_size);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run_bench: thread count does not change the output") {
  std::vector<Instance> inst;
  for (int seed = 0; seed < 12; ++seed)
    inst.push_back(instance_from_genspec("gnp:n=18,p=0.2,seed=" + std::to_string(seed)));
  const auto algos = parse_algo_list("classical,fixed:3,auto,hybrid:3");
  BenchOptions one;
  one.timing = false;
  one.with_exact = true;
  BenchOptions four = one;
  four.threads = 4;
  CHECK(to_csv(run_bench(inst, algos, one)) == to_csv(run_bench(inst, algos, four)));
}
