#ifndef SLP_MONOMIAL_HPP
#define SLP_MONOMIAL_HPP

#include <string>
#include <vector>

#include "slp/errors.hpp"

namespace slp {

/// Monomial in a fixed number of variables, stored as its exponent vector.
struct Monomial {
    std::vector<int> exponents;

    int degree() const {
        int d = 0;
        for (int e : exponents)
            d += e;
        return d;
    }

    int num_vars() const { return static_cast<int>(exponents.size()); }

    bool divides(const Monomial& other) const {
        if (exponents.size() != other.exponents.size())
            return false;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > other.exponents[i])
                return false;
        return true;
    }

    bool operator==(const Monomial& other) const = default;

    /// Display form like "x1^2*x2"; degree zero renders as "1".
    std::string str() const;
};

/// Degree-then-lex order with x1 > x2 > ...; ties broken so that x-heavy
/// monomials come first within a degree.
bool monomial_order_less(const Monomial& a, const Monomial& b);

/// Monomial ideal given by generators; minimalized on construction
/// (generators divisible by another generator are dropped). Generators of
/// degree zero are rejected, so the quotient is never the zero module.
class MonomialIdeal {
public:
    MonomialIdeal(int num_vars, std::vector<Monomial> generators);

    int num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    bool contains(const Monomial& m) const {
        for (const Monomial& g : generators_)
            if (g.divides(m))
                return true;
        return false;
    }

    bool operator==(const MonomialIdeal& other) const = default;

    std::string str() const;

private:
    int num_vars_;
    std::vector<Monomial> generators_;  // minimal, sorted by monomial_order_less
};

/// True iff each variable has a pure power among the minimal generators,
/// i.e. the quotient is finite dimensional.
bool is_artinian(const MonomialIdeal& ideal);

/// Standard monomials of the quotient, grouped by degree and sorted within a
/// degree by the fixed monomial order. Throws NotArtinian otherwise.
std::vector<std::vector<Monomial>> quotient_basis(const MonomialIdeal& ideal);

}  // namespace slp

#endif
