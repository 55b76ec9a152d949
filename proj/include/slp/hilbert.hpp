#ifndef SLP_HILBERT_HPP
#define SLP_HILBERT_HPP

#include <string>
#include <vector>

#include "slp/errors.hpp"

namespace slp {

/// Coefficients h_0..h_p of the Hilbert series; p is the socle degree.
/// Normalized series only: h_0 > 0 and h_p > 0.
struct HilbertSeries {
    std::vector<int> coeffs;

    explicit HilbertSeries(std::vector<int> c) : coeffs(std::move(c)) {
        require(!coeffs.empty(), ErrorKind::ZeroModule, "empty Hilbert series");
        require(coeffs.front() > 0 && coeffs.back() > 0, ErrorKind::ShapeMismatch,
                "Hilbert series must have positive first and last coefficients");
        for (int h : coeffs)
            require(h >= 0, ErrorKind::ShapeMismatch, "negative Hilbert coefficient");
    }

    int socle_degree() const { return static_cast<int>(coeffs.size()) - 1; }

    int at(int d) const {
        return d >= 0 && d < static_cast<int>(coeffs.size()) ? coeffs[d] : 0;
    }

    long total() const {
        long t = 0;
        for (int h : coeffs)
            t += h;
        return t;
    }

    bool operator==(const HilbertSeries& other) const = default;

    std::string str() const;
};

HilbertSeries convolve(const HilbertSeries& a, const HilbertSeries& b);

}  // namespace slp

#endif
