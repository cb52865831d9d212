#pragma once

// SVG pictures of planar packings: Euclidean circles, hyperbolic circles in
// the Poincare disk, and spherical caps seen from outside the sphere.
// Output depends only on the packing and the options.

#include "descartes/apollonian.hpp"

namespace descartes {

enum class LabelMode { Bend, None };
enum class Projection { Orthographic, Stereographic };

std::optional<LabelMode> parse_label_mode(std::string_view text);
std::optional<Projection> parse_projection(std::string_view text);

struct RenderOptions {
    int width = 800;
    int height = 800;
    double cutoff = 1.0 / 400;  // smallest drawn radius, as a fraction of the canvas
    LabelMode labels = LabelMode::Bend;
    double stroke = 1.0;
    Projection projection = Projection::Orthographic;  // spherical packings only

    /// Throws std::invalid_argument for a non-positive canvas or stroke, or
    /// a cutoff outside (0, 1).
    void validate() const;
};

struct RenderResult {
    std::string svg;
    std::size_t circles = 0;          // circle and ellipse elements, boundary included
    std::size_t lines = 0;
    std::size_t skipped_small = 0;
    std::size_t skipped_virtual = 0;  // hyperbolic rows with no real locus
    std::vector<std::string> labels;  // in drawing order
};

/// Integers print exactly; anything else with 6 significant digits.
template <Scalar T>
std::string bend_label(const T& x);

/// Viewport is the bounding circle when there is one, otherwise the box
/// around every circle.  Throws DimensionError unless n = 2.
template <Scalar T>
RenderResult render_euclidean(const Packing<T>& p, const RenderOptions& o);

/// Unit boundary circle plus the disk-model image of every real circle
/// and horocycle, labeled with coth.
template <Scalar T>
RenderResult render_hyperbolic_disk(const Packing<T>& p, const RenderOptions& o);

/// Cap boundaries labeled with cot.  Orthographic: view down the first
/// axis, caps on the far side dashed.  Stereographic: the planar image
/// from the point opposite the first axis.
template <Scalar T>
RenderResult render_spherical(const Packing<T>& p, const RenderOptions& o);

/// Dispatches on p.geometry.
template <Scalar T>
RenderResult render(const Packing<T>& p, const RenderOptions& o);

}  // namespace descartes
