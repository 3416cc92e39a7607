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

#include "mzent/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mzent {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_complex(Cx v) {
    return "(" + format_number(v.real()) + "," + format_number(v.imag()) + ")";
}

std::string heatmap_csv(const std::vector<HeatmapCell>& cells) {
    std::string out = "x1,x2,S\n";
    for (const HeatmapCell& c : cells) {
        out += format_number(c.x1);
        out += ',';
        out += format_number(c.x2);
        out += ',';
        out += format_number(c.entropy);
        out += '\n';
    }
    return out;
}

std::string heatmap_svg(const std::vector<HeatmapCell>& cells, int grid_n) {
    if (grid_n < 2 || cells.size() != static_cast<std::size_t>(grid_n) * grid_n) {
        throw std::invalid_argument("heatmap_svg: cell count does not match grid");
    }
    constexpr int kPlot = 500;
    constexpr int kLeft = 70;
    constexpr int kTop = 20;
    constexpr int kBottom = 50;
    constexpr int kRight = 20;
    const int width = kLeft + kPlot + kRight;
    const int height = kTop + kPlot + kBottom;
    const double cell = static_cast<double>(kPlot) / grid_n;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";

    // Cells are placed by grid index; x1 runs right, x2 runs up.
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const HeatmapCell& c = cells[static_cast<std::size_t>(i) * grid_n + j];
            const double gray = std::clamp(c.entropy, 0.0, 1.0);
            const int level = static_cast<int>(std::lround(gray * 255.0));
            char color[8];
            std::snprintf(color, sizeof color, "#%02x%02x%02x", level, level, level);
            const double x = kLeft + i * cell;
            const double y = kTop + (grid_n - 1 - j) * cell;
            out += "<rect x=\"" + format_number(x) + "\" y=\"" + format_number(y) +
                   "\" width=\"" + format_number(cell) + "\" height=\"" + format_number(cell) +
                   "\" fill=\"" + color + "\"/>\n";
        }
    }

    out += "<rect x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(kTop) +
           "\" width=\"" + std::to_string(kPlot) + "\" height=\"" + std::to_string(kPlot) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // Ticks at 0, 0.5 and 1 on both axes.
    const double ticks[3] = {0.0, 0.5, 1.0};
    for (double t : ticks) {
        const double px = kLeft + t * kPlot;
        const double py = kTop + (1.0 - t) * kPlot;
        out += "<line x1=\"" + format_number(px) + "\" y1=\"" + std::to_string(kTop + kPlot) +
               "\" x2=\"" + format_number(px) + "\" y2=\"" + std::to_string(kTop + kPlot + 6) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + format_number(px) + "\" y=\"" + std::to_string(kTop + kPlot + 22) +
               "\" font-size=\"14\" text-anchor=\"middle\">" + format_number(t) + "</text>\n";
        out += "<line x1=\"" + std::to_string(kLeft - 6) + "\" y1=\"" + format_number(py) +
               "\" x2=\"" + std::to_string(kLeft) + "\" y2=\"" + format_number(py) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + std::to_string(kLeft - 10) + "\" y=\"" + format_number(py + 5.0) +
               "\" font-size=\"14\" text-anchor=\"end\">" + format_number(t) + "</text>\n";
    }

    out += "<text x=\"" + format_number(kLeft + kPlot / 2.0) + "\" y=\"" +
           std::to_string(height - 10) + "\" font-size=\"16\" text-anchor=\"middle\">x1</text>\n";
    out += "<text x=\"18\" y=\"" + format_number(kTop + kPlot / 2.0) +
           "\" font-size=\"16\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           format_number(kTop + kPlot / 2.0) + ")\">x2</text>\n";
    out += "</svg>\n";
    return out;
}

std::string decoherence_csv(const std::vector<DecoherenceRow>& rows) {
    std::string out = "gamma,port,negativity,concurrence\n";
    for (const DecoherenceRow& r : rows) {
        out += format_number(r.gamma);
        out += ',';
        out += port_name(r.port);
        out += ',';
        out += format_number(r.negativity);
        out += ',';
        out += format_number(r.concurrence);
        out += '\n';
    }
    return out;
}

std::string optimize_csv(const std::vector<WProfilePoint>& profile) {
    std::string out = "w,best_N_over_U\n";
    for (const WProfilePoint& p : profile) {
        out += format_number(p.w);
        out += ',';
        out += format_number(p.best_n);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

}  // namespace mzent
