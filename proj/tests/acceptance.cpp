// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <exception>

#include "coulres/verify.hpp"

int main()
{
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        coulres::CriterionResult r;
        try {
            r = coulres::run_criterion(id);
        } catch (const std::exception& e) {
            std::printf("criterion %2d FAIL  %s: exception: %s\n", id, coulres::criterion_title(id).c_str(), e.what());
            ++failed;
            continue;
        }
        const coulres::Check* bad = r.first_failure();
        std::printf("criterion %2d %s  %s (%.1f s)\n", id, r.pass() ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        for (const auto& c : r.checks)
        {
            char bound[96];
            if (c.relation == coulres::Relation::within)
                std::snprintf(bound, sizeof bound, "%.6g +- %.6g", c.target, c.tolerance);
            else
                std::snprintf(bound, sizeof bound, "%s %.6g", c.relation == coulres::Relation::at_most ? "<=" : ">=",
                              c.tolerance);
            std::printf("    [%s] %s: %.6g (%s%s%s)\n", c.pass ? "ok" : "!!", c.name.c_str(), c.measured, bound,
                        c.detail.empty() ? "" : "; ", c.detail.c_str());
        }
        if (bad) ++failed;
    }
    std::printf("%d of 10 criteria failed\n", failed);
    return failed ? 1 : 0;
}
