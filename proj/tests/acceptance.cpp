// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, fast scale, fixed seed.

#include <cstdio>

#include "matwig/verify.hpp"

int main() {
    using namespace matwig::verify;
    SuiteOptions opt;
    opt.seed = 42;
    int failed = 0;
    double total = 0;
    for (const auto& name : suite_names()) {
        const auto r = run_suite(name, opt);
        total += r.seconds;
        for (const auto& c : r.checks)
            if (!c.pass()) std::printf("    failing: %s value %.3e bound %.1e\n", c.name.c_str(), c.value, c.bound);
        const Check* w = r.worst();
        std::printf("%s criterion %2d %-12s checks=%-3zu worst=%.3e (bound %.1e: %s) %.1fs\n", r.pass() ? "PASS" : "FAIL",
                    r.criterion, name.c_str(), r.checks.size(), w ? w->value : 0.0, w ? w->bound : 0.0,
                    w ? w->name.c_str() : "-", r.seconds);
        std::fflush(stdout);
        if (!r.pass()) ++failed;
    }
    std::printf("%d of %zu criteria failed, %.1fs total\n", failed, suite_names().size(), total);
    return failed == 0 ? 0 : 1;
}
