#include "slp/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace slp {

std::string Monomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!first)
            out << "*";
        out << "x" << (i + 1);
        if (exponents[i] > 1)
            out << "^" << exponents[i];
        first = false;
    }
    if (first)
        out << "1";
    return out.str();
}

bool monomial_order_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    // within a degree: lex with x1 > x2 > ..., larger first
    return a.exponents > b.exponents;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
    require(num_vars >= 1, ErrorKind::ShapeMismatch, "ideal needs at least one variable");
    for (const Monomial& g : generators) {
        require(g.num_vars() == num_vars, ErrorKind::ShapeMismatch,
                "generator exponent vector length " + std::to_string(g.num_vars()) +
                    " does not match vars=" + std::to_string(num_vars));
        for (int e : g.exponents)
            require(e >= 0, ErrorKind::InvalidExponent, "negative exponent in generator");
        require(g.degree() >= 1, ErrorKind::InvalidExponent,
                "degree-zero generator would make the quotient the zero module");
    }
    // divisibility pruning; duplicates fall to unique() below
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            if (j != i && generators[j].divides(generators[i]) && !(generators[j] == generators[i]))
                redundant = true;
        if (!redundant)
            generators_.push_back(generators[i]);
    }
    std::sort(generators_.begin(), generators_.end(), monomial_order_less);
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

std::string MonomialIdeal::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i)
            out << ", ";
        out << generators_[i].str();
    }
    out << ")";
    return out.str();
}

bool is_artinian(const MonomialIdeal& ideal) {
    for (int v = 0; v < ideal.num_vars(); ++v) {
        bool has_pure_power = false;
        for (const Monomial& g : ideal.generators()) {
            bool pure = g.exponents[v] >= 1;
            for (int w = 0; w < ideal.num_vars() && pure; ++w)
                if (w != v && g.exponents[w] != 0)
                    pure = false;
            if (pure) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power)
            return false;
    }
    return true;
}

std::vector<std::vector<Monomial>> quotient_basis(const MonomialIdeal& ideal) {
    require(is_artinian(ideal), ErrorKind::NotArtinian,
            "quotient of " + ideal.str() + " is not finite dimensional");

    int n = ideal.num_vars();
    // box bounds: the pure power x_v^e caps exponent of x_v at e-1
    std::vector<int> bound(n, 0);
    for (int v = 0; v < n; ++v) {
        for (const Monomial& g : ideal.generators()) {
            bool pure = g.exponents[v] >= 1;
            for (int w = 0; w < n && pure; ++w)
                if (w != v && g.exponents[w] != 0)
                    pure = false;
            if (pure)
                bound[v] = bound[v] == 0 ? g.exponents[v] : std::min(bound[v], g.exponents[v]);
        }
    }

    long long box = 1;
    for (int v = 0; v < n; ++v) {
        box *= bound[v];
        require(box <= 2'000'000, ErrorKind::ShapeMismatch,
                "quotient basis too large (> 2e6 candidate monomials)");
    }

    std::vector<std::vector<Monomial>> by_degree;
    Monomial m;
    m.exponents.assign(n, 0);
    while (true) {
        if (!ideal.contains(m)) {
            int d = m.degree();
            if (d >= static_cast<int>(by_degree.size()))
                by_degree.resize(d + 1);
            by_degree[d].push_back(m);
        }
        // odometer over the box
        int v = n - 1;
        while (v >= 0 && m.exponents[v] == bound[v] - 1) {
            m.exponents[v] = 0;
            --v;
        }
        if (v < 0)
            break;
        ++m.exponents[v];
    }

    for (auto& degree_block : by_degree)
        std::sort(degree_block.begin(), degree_block.end(), monomial_order_less);
    while (!by_degree.empty() && by_degree.back().empty())
        by_degree.pop_back();
    return by_degree;
}

}  // namespace slp
