// svg_plot.hpp — deterministic SVG scatter plots of embeddings.
#pragma once

#include <string>
#include <vector>

#include "roleembed/labels.hpp"
#include "roleembed/stress_solver.hpp"

namespace roleembed {

struct PlotSpec {
    int width = 800;
    int height = 600;
    double point_radius = 5.0;
    double padding_fraction = 0.08;
};

/// Projects an n x d embedding (d > 2) onto its top two principal
/// components via deterministic power iteration; the sign convention makes
/// each component's largest-magnitude coordinate positive. d == 2 is
/// returned unchanged. Throws for d < 2.
EmbeddingMatrix project_to_2d(const EmbeddingMatrix& X);

/// Scatter plot, one circle per node colored by label, with a legend.
/// Byte-identical output for identical inputs. Throws for d < 2.
std::string render_svg(const EmbeddingMatrix& X, const LabeledDataset& labels,
                       const PlotSpec& spec);

} // namespace roleembed
