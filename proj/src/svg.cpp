#include "qrel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace qrel {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 24;
constexpr int kMarginBottom = 56;
constexpr size_t kMaxVertices = 2000;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Round the tick step to 1/2/5 times a power of ten.
double nice_step(double range, int target_ticks) {
    const double raw = range / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    if (norm <= 1.0)
        step = 1.0;
    else if (norm <= 2.0)
        step = 2.0;
    else if (norm <= 5.0)
        step = 5.0;
    return step * mag;
}

}  // namespace

std::string render_svg(const std::vector<CsvRow>& rows, const SweepSpec& spec) {
    if (rows.empty()) throw EmptyDataError("render_svg: no rows");

    // Group rows into curves, preserving first-seen label order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> curves;
    for (const CsvRow& r : rows) {
        if (!curves.count(r.series_label)) order.push_back(r.series_label);
        curves[r.series_label].emplace_back(r.axis_value, r.coherence);
    }

    double xmin = rows.front().axis_value, xmax = xmin;
    double ymin = rows.front().coherence, ymax = ymin;
    for (const CsvRow& r : rows) {
        xmin = std::min(xmin, r.axis_value);
        xmax = std::max(xmax, r.axis_value);
        ymin = std::min(ymin, r.coherence);
        ymax = std::max(ymax, r.coherence);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return kMarginTop + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // frame
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // ticks and grid
    const double xstep = nice_step(xmax - xmin, 6);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9 * xstep; x += xstep) {
        const double px = sx(x);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << num(px) << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << num(px) << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << num(x)
            << "</text>\n";
    }
    const double ystep = nice_step(ymax - ymin, 6);
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9 * ystep; y += ystep) {
        const double py = sy(y);
        out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << num(py) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << num(py) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << num(py + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << num(y)
            << "</text>\n";
    }

    // axis labels
    out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 14
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << spec.axis.name << "</text>\n";
    out << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 18 " << kMarginTop + plot_h / 2 << ")\">C_H</text>\n";

    // curves
    int color_idx = 0;
    for (const std::string& label : order) {
        auto& pts = curves[label];
        std::sort(pts.begin(), pts.end());
        const size_t stride = pts.size() > kMaxVertices ? (pts.size() + kMaxVertices - 1) / kMaxVertices
                                                        : 1;
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[color_idx % 10]
            << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < pts.size(); i += stride) {
            if (i) out << ' ';
            out << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second));
        }
        if ((pts.size() - 1) % stride != 0)
            out << ' ' << num(sx(pts.back().first)) << ',' << num(sy(pts.back().second));
        out << "\"/>\n";
        ++color_idx;
    }

    // legend (only when there is more than one curve)
    if (order.size() > 1) {
        const double lx = kMarginLeft + plot_w - 150;
        double ly = kMarginTop + 10;
        color_idx = 0;
        for (const std::string& label : order) {
            out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly + 4) << "\" x2=\""
                << num(lx + 22) << "\" y2=\"" << num(ly + 4) << "\" stroke=\""
                << kPalette[color_idx % 10] << "\" stroke-width=\"1.5\"/>\n";
            out << "<text x=\"" << num(lx + 28) << "\" y=\"" << num(ly + 8)
                << "\" font-family=\"sans-serif\" font-size=\"12\">"
                << (spec.series_name.empty() ? label : spec.series_name + "=" + label)
                << "</text>\n";
            ly += 16;
            ++color_idx;
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace qrel
