#pragma once

// Minimal SVG emitter.  Geometry is given in mathematical (y-up)
// coordinates; the writer tracks the bounding box and wraps the body in
// an explicit flip transform, one length unit = px_per_unit pixels.

#include <string>
#include <vector>

#include <polyfoil/polygon.hpp>

namespace polyfoil::io {

class SvgWriter {
public:
    explicit SvgWriter(double px_per_unit = 40.0) : scale_(px_per_unit) {}

    void path(const std::vector<Vec2>& pts, bool closed, const std::string& stroke,
              double width);
    void line(Vec2 a, Vec2 b, const std::string& stroke, double width);
    void circle(Vec2 center, double radius, const std::string& fill);

    // Complete document with computed viewBox and the y-flip transform.
    std::string finish() const;

private:
    void grow(Vec2 p);

    double scale_;
    double min_x_ = 0.0, min_y_ = 0.0, max_x_ = 0.0, max_y_ = 0.0;
    bool any_ = false;
    std::string body_;
};

} // namespace polyfoil::io
