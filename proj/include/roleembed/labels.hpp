// labels.hpp — per-node class labels shared by generators and evaluation.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace roleembed {

/// Node -> class assignment with dense class ids 0..class_count()-1.
/// class_names[c] is the human-readable name of class c.
struct LabeledDataset {
    std::vector<int> labels;
    std::vector<std::string> class_names;

    std::size_t size() const { return labels.size(); }
    std::size_t class_count() const { return class_names.size(); }
};

} // namespace roleembed
