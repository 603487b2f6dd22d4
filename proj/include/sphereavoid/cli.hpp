#pragma once

// Command dispatch behind the executable. Parsing stays in the binary
// (tools/main.cpp); everything here is testable with plain streams.
//
// Exit codes: 0 success or certificate accepted, 1 certificate rejected
// or validation found violations, 2 usage or input error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sphereavoid {

enum class OutputFormat { human, json };

struct RunConfig {
    std::string command;
    int degree = 40;
    long q_max = 5;
    int rounds = 10;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    std::string input_path;        // verify FILE, graph-bound --points
    std::string output_path;       // bound --emit-certificate
    OutputFormat format = OutputFormat::human;

    std::string t;                 // construct --t (exact rational text)
    bool validate = false;         // construct --validate
    std::string nu = "1/2";        // gegenbauer --nu
    std::string at;                // gegenbauer --at: rational or "[+|-]t(p,q)"
    std::optional<long> p, q;      // circle --p --q
    bool irrational = false;       // circle --irrational
    std::string forbid;            // graph-bound --forbid x1,x2,...
    int n = 3;                     // mu --n
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sphereavoid
