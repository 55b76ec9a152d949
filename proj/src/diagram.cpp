#include "slp/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace slp {

Diagram make_diagram(const CyclicDecomposition& decomposition, const HilbertSeries& series) {
    int p = series.socle_degree();
    require(decomposition.socle_degree() <= p, ErrorKind::InconsistentDecomposition,
            "decomposition reaches past the socle degree");

    Diagram diagram;
    diagram.header = series.coeffs;
    for (const CyclicSummand& s : decomposition.summands()) {
        Diagram::Row row;
        row.label = s.str();
        row.support.assign(p + 1, 0);
        for (int d = s.start(); d <= s.end(); ++d)
            row.support[d] = 1;
        diagram.rows.push_back(std::move(row));
    }

    // canonical summand order equals descending lex on support rows
    std::sort(diagram.rows.begin(), diagram.rows.end(),
              [](const Diagram::Row& a, const Diagram::Row& b) { return a.support > b.support; });

    std::vector<int> sums(p + 1, 0);
    for (const Diagram::Row& row : diagram.rows)
        for (int d = 0; d <= p; ++d)
            sums[d] += row.support[d];
    for (int d = 0; d <= p; ++d)
        require(sums[d] == diagram.header[d], ErrorKind::InconsistentDecomposition,
                "column sums at degree " + std::to_string(d) + " give " + std::to_string(sums[d]) +
                    ", series has " + std::to_string(diagram.header[d]));
    return diagram;
}

std::string Diagram::text() const {
    std::size_t label_width = 0;
    for (const Row& row : rows)
        label_width = std::max(label_width, row.label.size());
    std::size_t cell_width = 1;
    for (int h : header)
        cell_width = std::max(cell_width, std::to_string(h).size());

    std::ostringstream out;
    auto emit = [&](const std::string& label, const std::vector<int>& cells) {
        out << label;
        out.width(0);
        for (std::size_t i = label.size(); i < label_width; ++i)
            out << ' ';
        out << " |";
        for (int c : cells) {
            std::string s = std::to_string(c);
            out << ' ';
            for (std::size_t i = s.size(); i < cell_width; ++i)
                out << ' ';
            out << s;
        }
        out << '\n';
    };
    emit("", header);
    for (const Row& row : rows)
        emit(row.label, row.support);
    return out.str();
}

std::string render_diagram(const CyclicDecomposition& decomposition, const HilbertSeries& series) {
    return make_diagram(decomposition, series).text();
}

}  // namespace slp
