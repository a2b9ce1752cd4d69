#include <doctest.h>

#include <sstream>

#include "blkd/sweep.hpp"

using namespace blkd;

namespace {

int data_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    int rows = -1;  // minus the header row
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++rows;
    return rows;
}

}  // namespace

TEST_CASE("path sweep: one row per grid point and seed, deterministic") {
    SweepConfig cfg;
    cfg.experiment = "path-success";
    cfg.k = 2;
    cfg.eps_list = {Rat(1, 2), Rat(1, 4)};
    cfg.W_list = {6, 8};
    cfg.seeds = {1, 2, 3};
    std::string csv1 = run_sweep(cfg);
    CHECK(data_rows(csv1) == 12);
    std::string csv2 = run_sweep(cfg);
    CHECK(csv1 == csv2);
    CHECK(csv1.find("eps,W,seed") != std::string::npos);
}

TEST_CASE("triangle probe runs, labelled exploratory") {
    SweepConfig cfg;
    cfg.experiment = "triangle-probe";
    cfg.eps_list = {Rat(1, 2)};
    cfg.c_list = {Rat(1, 2)};
    cfg.W_list = {5};
    cfg.seeds = {1, 2};
    std::string csv = run_sweep(cfg);
    CHECK(data_rows(csv) == 2);
    CHECK(csv.find("no theorem claimed") != std::string::npos);
    CHECK(csv.find("transversal_triangle") != std::string::npos);
}

TEST_CASE("empty grid is an error") {
    SweepConfig cfg;
    cfg.experiment = "path-success";
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg.experiment = "no-such";
    cfg.eps_list = {Rat(1)};
    cfg.W_list = {4};
    cfg.seeds = {1};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}
