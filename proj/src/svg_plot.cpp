#include "roleembed/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace roleembed {

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

std::string class_color(std::size_t c) {
    constexpr std::size_t palette_size = sizeof(kPalette) / sizeof(kPalette[0]);
    if (c < palette_size) return kPalette[c];
    // deterministic fallback hues past the fixed palette
    const unsigned hue = static_cast<unsigned>((47 * (c - palette_size + 1)) % 360);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "hsl(%u,65%%,45%%)", hue);
    return buf;
}

// Deterministic power iteration for the top eigenvector of the d x d scatter
// matrix, orthogonalized against already-found components.
std::vector<double> principal_component(const std::vector<double>& scatter,
                                        std::size_t d,
                                        const std::vector<std::vector<double>>& found) {
    std::vector<double> v(d, 1.0 / std::sqrt(static_cast<double>(d)));
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<double> next(d, 0.0);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) next[r] += scatter[r * d + c] * v[c];
        for (const auto& f : found) {
            double dot = 0.0;
            for (std::size_t r = 0; r < d; ++r) dot += next[r] * f[r];
            for (std::size_t r = 0; r < d; ++r) next[r] -= dot * f[r];
        }
        double norm = 0.0;
        for (double x : next) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-300) break; // degenerate direction; keep previous vector
        for (std::size_t r = 0; r < d; ++r) next[r] /= norm;
        v = std::move(next);
    }
    // sign convention: the largest-magnitude coordinate is positive
    std::size_t arg = 0;
    for (std::size_t r = 1; r < d; ++r)
        if (std::abs(v[r]) > std::abs(v[arg])) arg = r;
    if (v[arg] < 0.0)
        for (double& x : v) x = -x;
    return v;
}

} // namespace

EmbeddingMatrix project_to_2d(const EmbeddingMatrix& X) {
    if (X.d < 2)
        throw std::invalid_argument("plotting needs an embedding dimension >= 2");
    if (X.d == 2) return X;

    // center columns
    EmbeddingMatrix centered = X;
    for (std::size_t k = 0; k < X.d; ++k) {
        double mean = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) mean += X.at(i, k);
        mean /= static_cast<double>(X.n);
        for (std::size_t i = 0; i < X.n; ++i) centered.at(i, k) -= mean;
    }

    std::vector<double> scatter(X.d * X.d, 0.0);
    for (std::size_t i = 0; i < X.n; ++i)
        for (std::size_t r = 0; r < X.d; ++r)
            for (std::size_t c = 0; c < X.d; ++c)
                scatter[r * X.d + c] += centered.at(i, r) * centered.at(i, c);

    std::vector<std::vector<double>> components;
    components.push_back(principal_component(scatter, X.d, components));
    components.push_back(principal_component(scatter, X.d, components));

    EmbeddingMatrix out(X.n, 2);
    for (std::size_t i = 0; i < X.n; ++i)
        for (std::size_t k = 0; k < 2; ++k) {
            double dot = 0.0;
            for (std::size_t r = 0; r < X.d; ++r)
                dot += centered.at(i, r) * components[k][r];
            out.at(i, k) = dot;
        }
    return out;
}

std::string render_svg(const EmbeddingMatrix& X, const LabeledDataset& labels,
                       const PlotSpec& spec) {
    if (labels.labels.size() != X.n)
        throw std::invalid_argument("labels must cover all embedded nodes");
    if (spec.width <= 0 || spec.height <= 0)
        throw std::invalid_argument("plot dimensions must be positive");

    const EmbeddingMatrix P = project_to_2d(X);

    double min_x = P.at(0, 0), max_x = P.at(0, 0);
    double min_y = P.at(0, 1), max_y = P.at(0, 1);
    for (std::size_t i = 0; i < P.n; ++i) {
        min_x = std::min(min_x, P.at(i, 0));
        max_x = std::max(max_x, P.at(i, 0));
        min_y = std::min(min_y, P.at(i, 1));
        max_y = std::max(max_y, P.at(i, 1));
    }
    const double span_x = max_x - min_x, span_y = max_y - min_y;
    const double span = std::max({span_x, span_y, 1e-12});
    const double pad = spec.padding_fraction * span;

    // uniform scale, centered in the frame, SVG y axis pointing down
    const double scale = std::min(spec.width / (span_x + 2 * pad),
                                  spec.height / (span_y + 2 * pad));
    const double offset_x = (spec.width - scale * span_x) / 2.0;
    const double offset_y = (spec.height - scale * span_y) / 2.0;
    auto px = [&](double x) { return offset_x + scale * (x - min_x); };
    auto py = [&](double y) { return offset_y + scale * (max_y - y); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
        << spec.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t i = 0; i < P.n; ++i) {
        const auto c = static_cast<std::size_t>(labels.labels[i]);
        svg << "<circle cx=\"" << fmt2(px(P.at(i, 0))) << "\" cy=\"" << fmt2(py(P.at(i, 1)))
            << "\" r=\"" << fmt2(spec.point_radius) << "\" fill=\"" << class_color(c)
            << "\" fill-opacity=\"0.85\"/>\n";
    }

    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t c = 0; c < labels.class_count(); ++c) {
        const double y = 16.0 + 18.0 * static_cast<double>(c);
        svg << "<rect x=\"" << spec.width - 150 << "\" y=\"" << fmt2(y - 10)
            << "\" width=\"12\" height=\"12\" fill=\"" << class_color(c) << "\"/>\n"
            << "<text x=\"" << spec.width - 132 << "\" y=\"" << fmt2(y)
            << "\">" << xml_escape(labels.class_names[c]) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace roleembed
