// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matwig/core.hpp"

namespace matwig::verify {

struct Check {
    std::string name;
    double value = 0;
    double bound = 0;
    bool lower = false;  // pass when value > bound (negative controls) instead of value < bound

    bool pass() const;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    bool full = false;
    bool break_det = false;  // debug: perturb the |det A| factor in the orthogonality check
    Exec exec = Exec::parallel;
};

struct SuiteResult {
    std::string name;
    int criterion = 0;
    std::vector<Check> checks;
    double seconds = 0;

    bool pass() const;
    const Check* worst() const;  // failing check with the largest value/bound ratio, else the tightest passing one
};

// Suite names in criterion order (1..16).
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace matwig::verify
