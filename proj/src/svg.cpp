#include "pfh/svg.hpp"

#include <algorithm>
#include <sstream>

namespace pfh {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<ConvexPath>& paths,
                       const std::vector<SvgLabel>& labels) {
    const long long scale = 20;
    long long x0 = 0, x1 = 4, y0 = 0, y1 = 4;
    bool seen = false;
    auto widen = [&](const Vec2& v) {
        if (!seen) {
            x0 = x1 = v.p;
            y0 = y1 = v.q;
            seen = true;
            return;
        }
        x0 = std::min(x0, v.p);
        x1 = std::max(x1, v.p);
        y0 = std::min(y0, v.q);
        y1 = std::max(y1, v.q);
    };
    for (const ConvexPath& p : paths)
        for (const Vec2& v : p.vertices()) widen(v);
    for (const SvgLabel& l : labels) widen(l.at);
    x0 = std::min(x0, (long long)0);
    y0 = std::min(y0, (long long)0);
    x1 = std::max(x1, x0 + 1);
    y1 = std::max(y1, y0 + 1);

    long long pad = scale / 2 + 10;
    long long left = scale * x0 - pad, top = -scale * y1 - pad;
    long long width = scale * (x1 - x0) + 2 * pad;
    long long height = scale * (y1 - y0) + 2 * pad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"" << left << ' ' << top << ' ' << width << ' ' << height
        << "\" width=\"" << width << "\" height=\"" << height << "\">\n";

    for (long long x = x0; x <= x1; ++x)
        out << "  <line x1=\"" << scale * x << "\" y1=\"" << -scale * y0
            << "\" x2=\"" << scale * x << "\" y2=\"" << -scale * y1
            << "\" stroke=\"" << (x == 0 ? "#999" : "#ddd")
            << "\" stroke-width=\"1\"/>\n";
    for (long long y = y0; y <= y1; ++y)
        out << "  <line x1=\"" << scale * x0 << "\" y1=\"" << -scale * y
            << "\" x2=\"" << scale * x1 << "\" y2=\"" << -scale * y
            << "\" stroke=\"" << (y == 0 ? "#999" : "#ddd")
            << "\" stroke-width=\"1\"/>\n";

    const char* colors[4] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
    for (size_t i = 0; i < paths.size(); ++i) {
        out << "  <polyline points=\"";
        bool first = true;
        for (const Vec2& v : paths[i].vertices()) {
            if (!first) out << ' ';
            out << scale * v.p << ',' << -scale * v.q;
            first = false;
        }
        out << "\" fill=\"none\" stroke=\"" << colors[i % 4]
            << "\" stroke-width=\"2\"/>\n";
    }

    for (const SvgLabel& l : labels)
        out << "  <text x=\"" << scale * l.at.p + 4 << "\" y=\""
            << -scale * l.at.q - 4
            << "\" font-family=\"monospace\" font-size=\"12\">"
            << escape(l.text) << "</text>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace pfh
