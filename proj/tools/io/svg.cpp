#include "io/svg.hpp"

#include <cstdio>

namespace polyfoil::io {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void SvgWriter::grow(Vec2 p) {
    if (!any_) {
        min_x_ = max_x_ = p.x;
        min_y_ = max_y_ = p.y;
        any_ = true;
        return;
    }
    if (p.x < min_x_) min_x_ = p.x;
    if (p.x > max_x_) max_x_ = p.x;
    if (p.y < min_y_) min_y_ = p.y;
    if (p.y > max_y_) max_y_ = p.y;
}

void SvgWriter::path(const std::vector<Vec2>& pts, bool closed, const std::string& stroke,
                     double width) {
    if (pts.size() < 2) return;
    std::string d = "M " + num(pts[0].x) + " " + num(pts[0].y);
    grow(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        d += " L " + num(pts[i].x) + " " + num(pts[i].y);
        grow(pts[i]);
    }
    if (closed) d += " Z";
    body_ += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
             "\" stroke-width=\"" + num(width) + "\"/>\n";
}

void SvgWriter::line(Vec2 a, Vec2 b, const std::string& stroke, double width) {
    grow(a);
    grow(b);
    body_ += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
             "\" y2=\"" + num(b.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             num(width) + "\"/>\n";
}

void SvgWriter::circle(Vec2 center, double radius, const std::string& fill) {
    grow({center.x - radius, center.y - radius});
    grow({center.x + radius, center.y + radius});
    body_ += "  <circle cx=\"" + num(center.x) + "\" cy=\"" + num(center.y) + "\" r=\"" +
             num(radius) + "\" fill=\"" + fill + "\"/>\n";
}

std::string SvgWriter::finish() const {
    const double margin = 0.5;
    const double x0 = min_x_ - margin, y0 = min_y_ - margin;
    const double w = (max_x_ - min_x_ + 2 * margin) * scale_;
    const double h = (max_y_ - min_y_ + 2 * margin) * scale_;
    // y-up convention: flip the axis and shift the top edge to zero.
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "<g transform=\"matrix(" + num(scale_) + " 0 0 " + num(-scale_) + " " +
           num(-x0 * scale_) + " " + num((y0)*scale_ + h) + ")\">\n";
    out += body_;
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace polyfoil::io
