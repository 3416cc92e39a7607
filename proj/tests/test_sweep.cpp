// Copyright 2026 The mzent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mzent/io.hpp"
#include "mzent/sweep.hpp"

using namespace mzent;

TEST_CASE("heatmap grid layout and the clamped corner") {
    const int n = 6;
    auto cells = heatmap_cells(n);
    REQUIRE(cells.size() == static_cast<std::size_t>(n) * n);
    const double step = 1.0 / (n - 1);

    // Corner cell sits at the smallest positive grid value on both axes.
    CHECK(cells[0].x1 == step);
    CHECK(cells[0].x2 == step);
    CHECK(cells[0].entropy == 1.0);

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const HeatmapCell& c = cells[static_cast<std::size_t>(i) * n + j];
            if (i != 0 || j != 0) {
                CHECK(c.x1 == i * step);
                CHECK(c.x2 == j * step);
            }
            if (c.x1 == c.x2) {
                CHECK(c.entropy == 1.0);  // diagonal cells are exactly 1
            }
        }
    }
    CHECK_THROWS_AS(heatmap_cells(1), std::invalid_argument);
}

TEST_CASE("heatmap entropy decays monotonically toward each axis") {
    const int n = 12;
    auto cells = heatmap_cells(n);
    for (int i = 1; i < n; ++i) {
        // Fixed x1 row: S is nondecreasing in x2 up to the diagonal.
        for (int j = 1; j + 1 <= i; ++j) {
            const double lower = cells[static_cast<std::size_t>(i) * n + j].entropy;
            const double upper = cells[static_cast<std::size_t>(i) * n + j + 1].entropy;
            CHECK(lower <= upper + 1e-12);
        }
        // The x2 = 0 cell is exactly 0.
        CHECK(cells[static_cast<std::size_t>(i) * n].entropy == 0.0);
        CHECK(cells[i].entropy == 0.0);  // x1 = 0 column
    }
}

TEST_CASE("heatmap parallel kernel equals the serial reference") {
#ifdef _OPENMP
    omp_set_num_threads(3);
#endif
    auto par = heatmap_cells(33);
    auto ser = heatmap_cells_serial(33);
    REQUIRE(par.size() == ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].x1 == ser[k].x1);
        CHECK(par[k].x2 == ser[k].x2);
        CHECK(par[k].entropy == ser[k].entropy);
    }
}

TEST_CASE("decoherence sweep hits the strong-coupling line") {
    auto rows = decoherence_sweep(CouplingAngle{std::numbers::pi / 2.0}, 5);
    REQUIRE(rows.size() == 10);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const DecoherenceRow& r = rows[k];
        CHECK(r.port == (k % 2 == 0 ? Port::R : Port::U));
        CHECK(r.gamma == 0.25 * static_cast<double>(k / 2));
        CHECK(std::abs(r.negativity - r.gamma) <= 1e-9);
        CHECK(std::abs(r.concurrence - r.gamma) <= 1e-9);
    }
    CHECK(rows[0].negativity == 0.0);
    CHECK(rows[0].concurrence == 0.0);
    CHECK_THROWS_AS(decoherence_sweep(CouplingAngle{0.0}, 5), std::invalid_argument);
}

TEST_CASE("decoherence parallel kernel equals the serial reference") {
#ifdef _OPENMP
    omp_set_num_threads(3);
#endif
    auto par = decoherence_sweep(CouplingAngle{1.1}, 17);
    auto ser = decoherence_sweep_serial(CouplingAngle{1.1}, 17);
    REQUIRE(par.size() == ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].gamma == ser[k].gamma);
        CHECK(par[k].negativity == ser[k].negativity);
        CHECK(par[k].concurrence == ser[k].concurrence);
    }
}

TEST_CASE("number formatting is 12-significant-digit shortest form") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(0.654321987654321) == "0.654321987654");
    CHECK(format_complex(Cx{0.5, -0.25}) == "(0.5,-0.25)");
}

TEST_CASE("csv emitters produce clean tables") {
    auto cells = heatmap_cells(4);
    const std::string csv = heatmap_csv(cells);
    CHECK(csv.rfind("x1,x2,S\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);  // header + 16 cells
    CHECK(csv.back() == '\n');
    CHECK(csv.find(" \n") == std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);

    auto rows = decoherence_sweep(CouplingAngle{1.0}, 3);
    const std::string dcsv = decoherence_csv(rows);
    CHECK(dcsv.rfind("gamma,port,negativity,concurrence\n", 0) == 0);
    CHECK(std::count(dcsv.begin(), dcsv.end(), '\n') == 7);
    CHECK(dcsv.find(",R,") != std::string::npos);
    CHECK(dcsv.find(",U,") != std::string::npos);

    const std::string ocsv = optimize_csv({{0.0, -0.5}, {1.0, 0.75}});
    CHECK(ocsv == "w,best_N_over_U\n0,-0.5\n1,0.75\n");
}

TEST_CASE("svg heatmap is a self-contained grayscale grid") {
    const int n = 8;
    auto cells = heatmap_cells(n);
    const std::string svg = heatmap_svg(cells, n);
    CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("</svg>\n") != std::string::npos);
    // One rect per cell plus background and frame.
    std::size_t rects = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) {
        ++rects;
        pos += 5;
    }
    CHECK(rects == static_cast<std::size_t>(n) * n + 2);
    CHECK(svg.find("#ffffff") != std::string::npos);  // diagonal cells are white
    CHECK(svg.find(">x1</text>") != std::string::npos);
    CHECK(svg.find(">0.5</text>") != std::string::npos);
    CHECK_THROWS_AS(heatmap_svg(cells, n + 1), std::invalid_argument);
}

TEST_CASE("write_file reports unwritable paths") {
    CHECK_THROWS_AS(write_file("/nonexistent-dir/out.csv", "x"), std::runtime_error);
}
