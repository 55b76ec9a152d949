#ifndef SLP_DIAGRAM_HPP
#define SLP_DIAGRAM_HPP

#include <string>
#include <vector>

#include "slp/decomposition.hpp"
#include "slp/hilbert.hpp"

namespace slp {

/// Decomposition diagram: a header row of Hilbert coefficients and one 0/1
/// support row per summand, rows in descending lexicographic order of their
/// support vectors. Column sums reproduce the header.
struct Diagram {
    std::vector<int> header;
    struct Row {
        std::string label;         // S(-i)/(l^d)
        std::vector<int> support;  // 0/1 per degree 0..p
    };
    std::vector<Row> rows;

    /// Fixed-width text table; deterministic for identical inputs.
    std::string text() const;
};

Diagram make_diagram(const CyclicDecomposition& decomposition, const HilbertSeries& series);

/// Convenience: build and format in one step.
std::string render_diagram(const CyclicDecomposition& decomposition, const HilbertSeries& series);

}  // namespace slp

#endif
