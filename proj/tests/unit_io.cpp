#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"

#include "coulres/errors.hpp"
#include "coulres/figures.hpp"
#include "coulres/io.hpp"

using namespace coulres;

TEST_CASE("number formatting round trips")
{
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double v : {1.0 / 3, -2.5e-300, 6.02214076e23, 1e-5}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv and hashing")
{
    CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
    CsvTable t;
    t.columns = {"a", "b"};
    t.rows = {{1.0, 0.5}, {2.0, -0.25}};
    t.config = "demo";
    std::string s = to_csv(t);
    std::istringstream in(s);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1 == "# coulres " + std::string(version) + " config=" + hex64(fnv1a64("demo")));
    CHECK(l2 == "a,b");
    CHECK(l3 == "1,0.5");
    CHECK(to_csv(t) == s);
}

TEST_CASE("atomic write")
{
    auto dir = std::filesystem::temp_directory_path() / "coulres_unit_io";
    std::filesystem::remove_all(dir);
    auto path = (dir / "sub" / "x.csv").string();
    write_atomic(path, "hello\n");
    std::ifstream in(path);
    std::string s;
    std::getline(in, s);
    CHECK(s == "hello");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("figure datasets are deterministic")
{
    FigureOptions o;
    o.n_sigma = 20;
    o.n_E = 10;
    o.n_raw = 20;
    o.n_rho = 10;
    for (const auto& spec : figure_specs()) {
        auto a = figure_data(spec.name, o), b = figure_data(spec.name, o);
        CHECK(to_csv(a) == to_csv(b));
        CHECK(a.columns == spec.columns);
        CHECK_FALSE(a.rows.empty());
    }
    CHECK_THROWS_AS(figure_spec("nope"), DomainError);
}
