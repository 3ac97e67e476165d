#pragma once

#include <optional>
#include <string>

#include "report.hpp"

namespace qzeta::cli {

struct Options {
    std::string name;  // series, verify target or kernel id
    std::string q = "1/2";
    std::optional<std::string> a;
    std::optional<int> s;
    int digits = 30;
    int grid = 20;
    int K = 5;
    int max_terms = 20000;
    unsigned bits = 0;
    std::string format = "json";
    std::string out;
    std::string pair = "bbb";
    std::optional<int> L1;
    std::optional<int> L2;
    std::optional<std::string> init;
    int nmax = 10;
    bool plain_mate = false;
};

// Each command fills the report and throws qzeta errors for the caller to map
// onto exit codes. A verification that runs but fails sets report.ok = false.
void cmd_compute(const Options& o, Report& r);
void cmd_verify(const Options& o, Report& r);
void cmd_bench(const Options& o, Report& r);
void cmd_solve(const Options& o, Report& r);

}  // namespace qzeta::cli
