#include <algorithm>
#include <cstdio>
#include <sstream>

#include "stabkit/representation.hpp"

namespace stabkit {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string comment_safe(std::string s) {
    for (std::size_t p; (p = s.find("--")) != std::string::npos;) s.replace(p, 2, "- -");
    return s;
}

}  // namespace

std::string to_svg(const StabbedRepresentation& r, const std::string& comment) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    auto grow = [&](double xa, double xb, double ya, double yb) {
        if (first) {
            x0 = xa, x1 = xb, y0 = ya, y1 = yb;
            first = false;
            return;
        }
        x0 = std::min(x0, xa), x1 = std::max(x1, xb), y0 = std::min(y0, ya), y1 = std::max(y1, yb);
    };
    for (const auto& q : r.rects) grow(q.x_lo.get_d(), q.x_hi.get_d(), q.y_lo.get_d(), q.y_hi.get_d());
    for (const auto& s : r.stabs) grow(x0, x1, s.get_d(), s.get_d());
    if (x1 - x0 <= 0) x1 = x0 + 1;
    if (y1 - y0 <= 0) y1 = y0 + 1;
    const double width = 960, margin = 40;
    double sx = (width - 2 * margin) / (x1 - x0);
    double sy = std::min(sx * 4, 480.0 / (y1 - y0));
    double height = (y1 - y0) * sy + 2 * margin;
    auto px = [&](double x) { return margin + (x - x0) * sx; };
    auto py = [&](double y) { return height - margin - (y - y0) * sy; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!comment.empty()) o << "<!-- " << comment_safe(comment) << " -->\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
    for (const auto& s : r.stabs) {
        double y = py(s.get_d());
        o << "<line class=\"stab\" x1=\"" << num(margin / 2) << "\" y1=\"" << num(y) << "\" x2=\"" << num(width - margin / 2)
          << "\" y2=\"" << num(y) << "\" stroke=\"#c03030\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (int i = 0; i < r.size(); ++i) {
        const Rect& q = r.rects[i];
        double xa = px(q.x_lo.get_d()), xb = px(q.x_hi.get_d());
        double ya = py(q.y_hi.get_d()), yb = py(q.y_lo.get_d());
        std::string label = escape(r.labels[i]);
        bool flat_x = q.x_lo == q.x_hi, flat_y = q.y_lo == q.y_hi;
        if (flat_x && flat_y) {
            o << "<circle class=\"vertex\" cx=\"" << num(xa) << "\" cy=\"" << num(ya) << "\" r=\"2\" fill=\"#204080\">";
        } else if (flat_x || flat_y) {
            o << "<line class=\"vertex\" x1=\"" << num(xa) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(xb) << "\" y2=\""
              << num(yb) << "\" stroke=\"#204080\" stroke-width=\"1.5\">";
        } else {
            o << "<rect class=\"vertex\" x=\"" << num(xa) << "\" y=\"" << num(ya) << "\" width=\"" << num(xb - xa)
              << "\" height=\"" << num(yb - ya) << "\" fill=\"#4060a0\" fill-opacity=\"0.15\" stroke=\"#204080\" stroke-width=\"0.8\">";
        }
        o << "<title>" << label << "</title>";
        o << (flat_x && flat_y ? "</circle>\n" : (flat_x || flat_y) ? "</line>\n" : "</rect>\n");
        if (r.size() <= 200)
            o << "<text x=\"" << num(xa + 1) << "\" y=\"" << num(ya - 2) << "\" font-size=\"8\" font-family=\"monospace\">"
              << label << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace stabkit
