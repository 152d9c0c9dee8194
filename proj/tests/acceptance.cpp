#include <iostream>

#include "puzzle/acceptance.hpp"

int main(int argc, char** argv) {
    puzzle::AcceptanceOptions o;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "-v") o.verbose = true;
    auto res = puzzle::run_acceptance(std::cout, o);
    int failed = 0;
    for (const auto& r : res) failed += !r.pass;
    std::cout << (res.size() - failed) << "/" << res.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
