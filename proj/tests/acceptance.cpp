// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>

#include "rq/acceptance.hpp"

int main(int argc, char** argv) {
    uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
    int failed = 0;
    rq::run_acceptance(seed, [&](const rq::CriterionResult& r) {
        failed += !r.pass;
        std::printf("[%s] %2d %-20s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    });
    std::printf("%d/%d criteria pass\n", rq::acceptance_count() - failed, rq::acceptance_count());
    return failed ? 1 : 0;
}
