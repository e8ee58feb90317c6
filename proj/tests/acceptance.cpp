// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <fbmlab/verify.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    fbmlab::Suite suite = fbmlab::Suite::Full;
    std::uint64_t seed = 7;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--suite") == 0) suite = fbmlab::parse_suite(argv[i + 1]);
        else if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);
    }
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        const fbmlab::CriterionResult r = fbmlab::run_criterion(id, suite, seed);
        std::printf("%s [%d] %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d/10 criteria passed (suite %s, seed %llu)\n", 10 - failed, std::string(fbmlab::to_string(suite)).c_str(),
                static_cast<unsigned long long>(seed));
    return failed ? 1 : 0;
}
