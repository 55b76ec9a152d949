#include "slp/hilbert.hpp"

#include <sstream>

namespace slp {

std::string HilbertSeries::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out << ", ";
        out << coeffs[i];
    }
    out << ")";
    return out.str();
}

HilbertSeries convolve(const HilbertSeries& a, const HilbertSeries& b) {
    std::vector<int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    return HilbertSeries(std::move(c));
}

}  // namespace slp
