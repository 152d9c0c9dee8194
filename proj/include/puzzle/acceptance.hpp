#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace puzzle {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    std::vector<std::string> notes;
};

struct AcceptanceOptions {
    bool verbose = false;        // print notes for passing criteria too
    unsigned seed = 20261016;    // random triples of the equivariant check
};

// Runs the eight criteria in order, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const AcceptanceOptions& opt = {});

}  // namespace puzzle
