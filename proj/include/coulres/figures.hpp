// Figure datasets: rescaled C-, U(5; E), transitional Whittaker profiles.
#pragma once

#include <string>
#include <vector>

#include "coulres/io.hpp"

namespace coulres {

struct FigureSpec {
    std::string name;
    std::string file;  // default file name inside the output directory
    std::string description;
    std::vector<std::string> columns;
};

const std::vector<FigureSpec>& figure_specs();
const FigureSpec& figure_spec(const std::string& name);

struct FigureOptions {
    double Z_c_minus = 1.0, Z_U = 1.0, Z_transitional = 3.0;
    double U_radius = 5.0;
    std::vector<double> varsigmas{0.05, 0.25, 0.5};
    int n_sigma = 1000;       // c_minus: sigma uniform on [0.05, 2]
    int n_E = 400;            // U_at_5: E = 2 j / n_E, j = 0..n_E
    int n_raw = 4000;         // transitional_raw: r^{1/2} uniform on [0.1, 20]
    int n_rho = 200;          // transitional_rescaled: rho geometric on [0.01, 1]
};

CsvTable figure_data(const std::string& name, const FigureOptions& opt = {});

}  // namespace coulres
