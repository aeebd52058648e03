#include "meander/render.hpp"

#include <array>
#include <sstream>

#include "meander/billiards.hpp"
#include "meander/errors.hpp"

namespace meander {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#e41a1c", "#377eb8", "#4daf4a",
                                                 "#984ea3", "#ff7f00", "#a65628"};

void require_scale(const RenderOptions& options) {
    if (options.scale < 4) {
        throw Error("scale must be >= 4 pixels per unit, got " +
                    std::to_string(options.scale));
    }
}

// Halved doubled coordinate in pixels; prints as an integer or with ".5".
std::string px(int doubled, int scale) {
    int v = doubled * scale;
    std::ostringstream out;
    out << v / 2;
    if (v % 2 != 0) {
        out << ".5";
    }
    return out.str();
}

}  // namespace

std::string render_polygon_svg(const DyckPath& p, const DyckPath& q,
                               const RenderOptions& options) {
    require_scale(options);
    GridPolygon polygon(p, q);
    int n = polygon.size();
    int s = options.scale;
    int margin = s;
    int side = n * s + 2 * margin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side
        << "\">\n";
    // Mathematical orientation: y grows upward.
    svg << "<g transform=\"translate(" << margin << ',' << side - margin
        << ") scale(1,-1)\">\n";

    svg << "<g class=\"cells\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!polygon.is_cell(i, j)) {
                continue;
            }
            const char* fill = square_color(i + 1, j + 1) == SquareColor::White
                                   ? "#ffffff"
                                   : "#d8d8d8";
            svg << "<rect x=\"" << i * s << "\" y=\"" << j * s << "\" width=\"" << s
                << "\" height=\"" << s << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    svg << "</g>\n";

    // Boundary outline through the lattice vertices, P up then -Q back.
    svg << "<polygon class=\"boundary\" fill=\"none\" stroke=\"#000000\" "
           "stroke-width=\"2\" points=\"";
    int x = 0;
    int y = 0;
    svg << x * s << ',' << y * s;
    for (Step st : p.steps()) {
        (st == Step::North ? y : x) += 1;
        svg << ' ' << x * s << ',' << y * s;
    }
    std::vector<std::pair<int, int>> reflected;
    x = 0;
    y = 0;
    reflected.emplace_back(y, x);
    for (Step st : q.steps()) {
        (st == Step::North ? y : x) += 1;
        reflected.emplace_back(y, x);
    }
    for (std::size_t i = reflected.size() - 1; i > 0; --i) {
        svg << ' ' << reflected[i - 1].first * s << ',' << reflected[i - 1].second * s;
    }
    svg << "\"/>\n";

    TrajectorySet set = trajectories(polygon);
    const auto& boundary = polygon.boundary();
    for (std::size_t t = 0; t < set.cycles.size(); ++t) {
        const char* color = kPalette[t % kPalette.size()];
        svg << "<g class=\"trajectory\" stroke=\"" << color
            << "\" stroke-width=\"2\" fill=\"none\">\n<polygon points=\"";
        const std::vector<int>& labels = set.cycles[t].labels;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const BoundaryStep& step =
                boundary[static_cast<std::size_t>(labels[i] - 1)];
            if (i > 0) {
                svg << ' ';
            }
            svg << px(step.a, s) << ',' << px(step.b, s);
        }
        svg << "\" fill=\"none\"/>\n</g>\n";
    }

    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::string render_meander_svg(const Meander& t, const RenderOptions& options) {
    require_scale(options);
    int n = t.order;
    int s = options.scale;
    int margin = s;
    int width = (2 * n + 1) * s + 2 * margin;
    int height = 2 * n * s + 2 * margin;
    int base = height / 2;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << base << "\" x2=\""
        << width - margin << "\" y2=\"" << base
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (int i = 1; i <= 2 * n; ++i) {
        svg << "<circle cx=\"" << margin + i * s << "\" cy=\"" << base
            << "\" r=\"3\" fill=\"#000000\"/>\n";
    }
    auto draw = [&](const ArchConfiguration& cfg, bool upper) {
        for (const auto& [a, b] : cfg.arches) {
            int x1 = margin + a * s;
            int x2 = margin + b * s;
            std::string r = px(b - a, s);  // radius (b-a)/2 lattice units
            svg << "<path class=\"arch " << (upper ? "upper" : "lower")
                << "\" fill=\"none\" stroke=\"" << (upper ? "#1f78b4" : "#33a02c")
                << "\" stroke-width=\"2\" d=\"M " << x1 << ' ' << base << " A " << r
                << ' ' << r << " 0 0 " << (upper ? 1 : 0) << ' ' << x2 << ' ' << base
                << "\"/>\n";
        }
    };
    draw(t.upper, true);
    draw(t.lower, false);
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace meander
