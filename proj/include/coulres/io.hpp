// CSV/JSON output with byte-deterministic number formatting.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coulres/line_ode.hpp"

namespace coulres {

inline constexpr const char* version = "0.1.0";

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    // hashed into the "# coulres <version> config=<hash>" comment line
    std::string config;
};

std::string to_csv(const CsvTable& t);

// Write to path.tmp then rename over path.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace coulres
