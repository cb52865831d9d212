#include "descartes/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "descartes/euclid.hpp"
#include "descartes/hyperbolic.hpp"
#include "descartes/spherical.hpp"
#include "descartes/transform.hpp"

namespace descartes {

std::optional<LabelMode> parse_label_mode(std::string_view text) {
    if (text == "bend") return LabelMode::Bend;
    if (text == "none") return LabelMode::None;
    return std::nullopt;
}

std::optional<Projection> parse_projection(std::string_view text) {
    if (text == "orthographic") return Projection::Orthographic;
    if (text == "stereographic") return Projection::Stereographic;
    return std::nullopt;
}

void RenderOptions::validate() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("canvas size must be positive");
    if (!(cutoff > 0.0 && cutoff < 1.0)) throw std::invalid_argument("cutoff must lie in (0, 1)");
    if (!(stroke > 0.0)) throw std::invalid_argument("stroke width must be positive");
}

template <Scalar T>
std::string bend_label(const T& x) {
    using Tr = ScalarTraits<T>;
    if constexpr (Tr::is_exact) {
        if (x.is_integer()) return x.str();
    } else {
        const double r = std::round(x);
        if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.0f", r == 0.0 ? 0.0 : r);
            return buf;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", Tr::to_double(x));
    return buf;
}

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Box {
    double x0, y0, x1, y1;
};

// World-to-canvas map fitting `box` into the canvas, y pointing up.
class Canvas {
public:
    Canvas(const RenderOptions& o, Box box) : o_(o) {
        const double w = box.x1 - box.x0, h = box.y1 - box.y0;
        scale_ = std::min(o.width / w, o.height / h);
        cx_ = (box.x0 + box.x1) / 2;
        cy_ = (box.y0 + box.y1) / 2;
        out_.svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_.svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(o.width) +
                    "\" height=\"" + std::to_string(o.height) + "\" viewBox=\"0 0 " + std::to_string(o.width) + " " +
                    std::to_string(o.height) + "\">\n";
        out_.svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out_.svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + num(o.stroke) + "\">\n";
    }

    double px(double x) const { return o_.width / 2.0 + (x - cx_) * scale_; }
    double py(double y) const { return o_.height / 2.0 - (y - cy_) * scale_; }
    double len(double r) const { return r * scale_; }
    bool too_small(double r) const { return len(r) < o_.cutoff * std::min(o_.width, o_.height); }
    Box view() const {
        const double hw = o_.width / (2 * scale_), hh = o_.height / (2 * scale_);
        return {cx_ - hw, cy_ - hh, cx_ + hw, cy_ + hh};
    }

    void circle(double x, double y, double r, bool dashed = false) {
        shapes_ += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"" + num(len(r)) + "\"" +
                   (dashed ? " stroke-dasharray=\"4 3\"" : "") + "/>\n";
        ++out_.circles;
    }

    // Ellipse with semi-axis a along direction angle theta (world radians)
    // and semi-axis b across it.
    void ellipse(double x, double y, double a, double b, double theta, bool dashed) {
        if (std::fabs(a - b) <= 1e-12) return circle(x, y, a, dashed);
        char rot[48];
        // Canvas y points down, so world angles flip sign.
        std::snprintf(rot, sizeof rot, "%.3f", -theta * 180.0 / M_PI);
        std::string r = rot;
        if (r == "-0.000") r = "0.000";
        shapes_ += "<ellipse cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" rx=\"" + num(len(a)) + "\" ry=\"" +
                   num(len(b)) + "\" transform=\"rotate(" + r + " " + num(px(x)) + " " + num(py(y)) + ")\"" +
                   (dashed ? " stroke-dasharray=\"4 3\"" : "") + "/>\n";
        ++out_.circles;
    }

    // The line {h . x = d} clipped to the view.
    void line(const Vec<double>& h, double d) {
        const Box b = view();
        const double p0 = d * h[0], p1 = d * h[1];
        const double t0 = -h[1], t1 = h[0];
        double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
        auto clip = [&](double p, double t, double mn, double mx) {
            if (std::fabs(t) < 1e-15) {
                if (p < mn || p > mx) lo = 1, hi = 0;
                return;
            }
            double a = (mn - p) / t, c = (mx - p) / t;
            if (a > c) std::swap(a, c);
            lo = std::max(lo, a);
            hi = std::min(hi, c);
        };
        clip(p0, t0, b.x0, b.x1);
        clip(p1, t1, b.y0, b.y1);
        if (lo >= hi) return;
        shapes_ += "<line x1=\"" + num(px(p0 + lo * t0)) + "\" y1=\"" + num(py(p1 + lo * t1)) + "\" x2=\"" +
                   num(px(p0 + hi * t0)) + "\" y2=\"" + num(py(p1 + hi * t1)) + "\"/>\n";
        ++out_.lines;
    }

    void label(double x, double y, double r, const std::string& text, bool faint = false) {
        if (o_.labels == LabelMode::None) return;
        const double size = 1.1 * len(r) / std::max(1.0, 0.6 * static_cast<double>(text.size()));
        labels_ += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) + "\" font-size=\"" + num(size) + "\"" +
                   (faint ? " fill=\"#888888\"" : "") + ">" + text + "</text>\n";
        out_.labels.push_back(text);
    }

    RenderResult& result() { return out_; }

    RenderResult finish() {
        out_.svg += shapes_;
        out_.svg += "</g>\n";
        if (!labels_.empty()) {
            out_.svg += "<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
            out_.svg += labels_;
            out_.svg += "</g>\n";
        }
        out_.svg += "</svg>\n";
        return std::move(out_);
    }

private:
    const RenderOptions& o_;
    double scale_, cx_, cy_;
    std::string shapes_, labels_;
    RenderResult out_;
};

template <Scalar T>
CoordRow<double> to_double_row(const CoordRow<T>& r) {
    CoordRow<double> out{{}, r.kind};
    for (const auto& x : r.entries) out.entries.push_back(ScalarTraits<T>::to_double(x));
    return out;
}

template <Scalar T>
void require_planar(const Packing<T>& p, Geometry g, const char* what) {
    if (p.n != 2) throw DimensionError(std::string(what) + " rendering needs n = 2, got n = " + std::to_string(p.n));
    if (p.geometry != g)
        throw std::invalid_argument(std::string(what) + " rendering got a " + std::string(to_string(p.geometry)) +
                                    " packing");
}

Box pad(Box b, double frac) {
    const double m = frac * std::max(b.x1 - b.x0, b.y1 - b.y0);
    return {b.x0 - m, b.y0 - m, b.x1 + m, b.y1 + m};
}

// Draws planar objects, labeling positive circles with the given labels.
template <Scalar T>
void draw_planar(Canvas& c, const std::vector<EuclidObject<double>>& objs, const std::vector<T>& bends,
                 std::optional<std::size_t> boundary) {
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (const auto* s = std::get_if<OrientedSphere<double>>(&objs[i])) {
            const double r = std::fabs(s->radius());
            if (boundary != i && c.too_small(r)) {
                ++c.result().skipped_small;
                continue;
            }
            c.circle(s->center[0], s->center[1], r);
            if (s->curvature > 0) c.label(s->center[0], s->center[1], r, bend_label(bends[i]));
        } else {
            const auto& h = std::get<OrientedHyperplane<double>>(objs[i]);
            c.line(h.normal, h.offset);
        }
    }
}

}  // namespace

template <Scalar T>
RenderResult render_euclidean(const Packing<T>& p, const RenderOptions& o) {
    o.validate();
    require_planar(p, Geometry::Euclidean, "euclidean");
    std::vector<EuclidObject<double>> objs;
    std::vector<T> bends;
    std::optional<std::size_t> boundary;
    double boundary_r = 0;
    Box box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& row : p.rows) {
        objs.push_back(object_from_augmented(to_double_row(row)));
        bends.push_back(row[1]);
        if (const auto* s = std::get_if<OrientedSphere<double>>(&objs.back())) {
            const double r = std::fabs(s->radius());
            if (s->curvature < 0 && r > boundary_r) {
                boundary = objs.size() - 1;
                boundary_r = r;
            }
            box = {std::min(box.x0, s->center[0] - r), std::min(box.y0, s->center[1] - r),
                   std::max(box.x1, s->center[0] + r), std::max(box.y1, s->center[1] + r)};
        }
    }
    if (boundary) {
        const auto& s = std::get<OrientedSphere<double>>(objs[*boundary]);
        box = {s.center[0] - boundary_r, s.center[1] - boundary_r, s.center[0] + boundary_r, s.center[1] + boundary_r};
    }
    if (!std::isfinite(box.x0)) box = {-1, -1, 1, 1};  // lines only
    Canvas c(o, pad(box, 0.02));
    draw_planar(c, objs, bends, boundary);
    return c.finish();
}

template <Scalar T>
RenderResult render_hyperbolic_disk(const Packing<T>& p, const RenderOptions& o) {
    o.validate();
    require_planar(p, Geometry::Hyperbolic, "hyperbolic");
    Canvas c(o, pad({-1, -1, 1, 1}, 0.02));
    c.circle(0, 0, 1);
    const Matrix<double> to_plane = conversion_matrix<double>(Geometry::Hyperbolic, Geometry::Euclidean, 2).matrix;
    for (const auto& row : p.rows) {
        const CoordRow<double> d = to_double_row(row);
        const CoordRow<double> e{d.entries * to_plane, Geometry::Euclidean};
        const EuclidObject<double> obj = object_from_augmented(e);
        const auto* s = std::get_if<OrientedSphere<double>>(&obj);
        if (classify_row(d) == RowClass::Virtual || !s || s->curvature <= 0) {
            // The absolute itself is already drawn.
            const bool absolute = s && std::fabs(std::fabs(s->radius()) - 1) < 1e-9 &&
                                  std::hypot(s->center[0], s->center[1]) < 1e-9;
            if (!absolute) ++c.result().skipped_virtual;
            continue;
        }
        const double r = s->radius();
        if (c.too_small(r)) {
            ++c.result().skipped_small;
            continue;
        }
        c.circle(s->center[0], s->center[1], r);
        c.label(s->center[0], s->center[1], r, bend_label(row[0]));
    }
    return c.finish();
}

template <Scalar T>
RenderResult render_spherical(const Packing<T>& p, const RenderOptions& o) {
    o.validate();
    require_planar(p, Geometry::Spherical, "spherical");
    if (o.projection == Projection::Stereographic) {
        std::vector<EuclidObject<double>> objs;
        std::vector<T> bends;
        for (const auto& row : p.rows) {
            objs.push_back(cap_to_plane(cap_from_coords(to_double_row(row))));
            bends.push_back(row[0]);
        }
        // The equator maps to the unit circle.
        Canvas c(o, {-2.5, -2.5, 2.5, 2.5});
        draw_planar(c, objs, bends, std::nullopt);
        return c.finish();
    }

    Canvas c(o, pad({-1, -1, 1, 1}, 0.02));
    c.circle(0, 0, 1);
    for (const auto& row : p.rows) {
        const SphericalCap<double> cap = cap_from_coords(to_double_row(row));
        const double csc = cap.csc_radius();
        const double sin_a = 1 / csc, cos_a = cap.cot_radius / csc;
        const Vec<double>& y = cap.center;
        if (c.too_small(sin_a)) {
            ++c.result().skipped_small;
            continue;
        }
        // The boundary circle has center cos(a) y and radius sin(a) in the
        // plane normal to y; seen along the first axis it is an ellipse.
        const bool back = cos_a * y[0] < -1e-12;
        const double theta = std::atan2(y[2], y[1]);
        c.ellipse(cos_a * y[1], cos_a * y[2], sin_a * std::fabs(y[0]), sin_a, theta, back);
        c.label(y[1], y[2], sin_a * std::max(std::fabs(y[0]), 0.2), bend_label(row[0]), y[0] < 0);
    }
    return c.finish();
}

template <Scalar T>
RenderResult render(const Packing<T>& p, const RenderOptions& o) {
    switch (p.geometry) {
        case Geometry::Euclidean: return render_euclidean(p, o);
        case Geometry::Hyperbolic: return render_hyperbolic_disk(p, o);
        case Geometry::Spherical: return render_spherical(p, o);
    }
    throw std::logic_error("unknown geometry");
}

#define DESCARTES_INSTANTIATE(T)                                                          \
    template std::string bend_label<T>(const T&);                                         \
    template RenderResult render_euclidean<T>(const Packing<T>&, const RenderOptions&);   \
    template RenderResult render_hyperbolic_disk<T>(const Packing<T>&, const RenderOptions&); \
    template RenderResult render_spherical<T>(const Packing<T>&, const RenderOptions&);   \
    template RenderResult render<T>(const Packing<T>&, const RenderOptions&);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
