#ifndef SLP_MODULE_HPP
#define SLP_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "slp/decomposition.hpp"
#include "slp/field.hpp"
#include "slp/hilbert.hpp"
#include "slp/matrix.hpp"
#include "slp/monomial.hpp"

namespace slp {

/// Degree-one form c_1 x_1 + ... + c_n x_n; not all coefficients zero.
template <typename K>
struct LinearForm {
    std::vector<K> coefficients;

    explicit LinearForm(std::vector<K> coeffs) : coefficients(std::move(coeffs)) {
        bool nonzero = false;
        for (const K& c : coefficients)
            if (!is_zero(c))
                nonzero = true;
        require(nonzero, ErrorKind::InvalidForm, "linear form must be nonzero");
    }

    int num_vars() const { return static_cast<int>(coefficients.size()); }
};

template <typename K>
LinearForm<K> form_from_ints(const FieldSpec& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<K> scalars;
    scalars.reserve(coeffs.size());
    for (std::int64_t c : coeffs)
        scalars.push_back(make_scalar<K>(field, c));
    return LinearForm<K>(std::move(scalars));
}

template <typename K>
LinearForm<K> all_ones_form(const FieldSpec& field, int num_vars) {
    return form_from_ints<K>(field, std::vector<std::int64_t>(num_vars, 1));
}

/// Whether construction verifies that variable maps commute. Products of
/// validated modules commute by construction; skipping the quadratic check
/// there keeps tensor and extension towers cheap. Property tests re-verify.
enum class MapValidation { Check, TrustCommutation };

/// Finite graded module over k[x_1..x_n], stored as per-degree dimensions and
/// per-variable degree +1 multiplication matrices. Instances are
/// shift-normalized: internal degree 0 is the first nonzero degree, and the
/// original shift is kept only for display. Immutable after construction.
template <typename K>
class GradedModule {
public:
    /// Validated construction from raw data. `var_maps[v][d]` maps degree d
    /// to degree d+1 and must have shape dims[d+1] x dims[d]. Leading zero
    /// dimensions are stripped into the shift; trailing zeros are dropped.
    GradedModule(FieldSpec field, int num_vars, std::vector<int> dims,
                 std::vector<std::vector<Matrix<K>>> var_maps,
                 std::optional<std::vector<std::vector<Monomial>>> basis = std::nullopt,
                 MapValidation validation = MapValidation::Check)
        : field_(field), num_vars_(num_vars), dims_(std::move(dims)), var_maps_(std::move(var_maps)),
          basis_(std::move(basis)) {
        require(field_spec_matches<K>(field_), ErrorKind::FieldMismatch,
                "scalar type does not match field spec " + field_.describe());
        require(num_vars_ >= 1, ErrorKind::ShapeMismatch, "module needs at least one variable");
        normalize_shift();
        validate_shapes();
        if (validation == MapValidation::Check)
            check_commutation();
    }

    const FieldSpec& field() const { return field_; }
    int num_vars() const { return num_vars_; }

    /// Socle degree in the normalized grading.
    int socle_degree() const { return static_cast<int>(dims_.size()) - 1; }

    /// Dimension at normalized degree d (0 outside 0..p).
    int dim(int d) const {
        return d >= 0 && d < static_cast<int>(dims_.size()) ? dims_[d] : 0;
    }

    long total_dim() const {
        long t = 0;
        for (int d : dims_)
            t += d;
        return t;
    }

    /// Display shift recorded at construction or by shift_module.
    int shift() const { return shift_; }

    /// Dimensions as presented, including `shift()` leading zeros.
    std::vector<int> presented_dims() const {
        std::vector<int> out(static_cast<std::size_t>(shift_), 0);
        out.insert(out.end(), dims_.begin(), dims_.end());
        return out;
    }

    /// Multiplication matrix of x_v from degree d to d+1; the map out of the
    /// socle degree is the empty 0 x dims[p] matrix.
    const Matrix<K>& var_map(int v, int d) const {
        static const Matrix<K> empty;
        if (d == socle_degree())
            return top_maps_[v];
        return var_maps_[v][d];
    }

    const std::optional<std::vector<std::vector<Monomial>>>& basis() const { return basis_; }

    /// Exhaustive pairwise commutation check; throws NonCommutingMaps.
    void check_commutation() const {
        for (int v = 0; v < num_vars_; ++v)
            for (int w = v + 1; w < num_vars_; ++w)
                for (int d = 0; d + 2 <= socle_degree(); ++d) {
                    if (!(var_maps_[v][d + 1] * var_maps_[w][d] ==
                          var_maps_[w][d + 1] * var_maps_[v][d]))
                        fail(ErrorKind::NonCommutingMaps,
                             "maps of x" + std::to_string(v + 1) + " and x" + std::to_string(w + 1) +
                                 " do not commute at degree " + std::to_string(d));
                }
    }

    GradedModule with_shift(int extra) const {
        GradedModule copy = *this;
        copy.shift_ += extra;
        return copy;
    }

private:
    void normalize_shift() {
        std::size_t lead = 0;
        while (lead < dims_.size() && dims_[lead] == 0)
            ++lead;
        require(lead < dims_.size(), ErrorKind::ZeroModule, "module has no nonzero component");
        if (lead > 0) {
            shift_ = static_cast<int>(lead);
            dims_.erase(dims_.begin(), dims_.begin() + lead);
            for (auto& maps : var_maps_)
                if (maps.size() >= lead)
                    maps.erase(maps.begin(), maps.begin() + lead);
            if (basis_) {
                require(basis_->size() >= lead, ErrorKind::ShapeMismatch, "basis/dims mismatch");
                basis_->erase(basis_->begin(), basis_->begin() + lead);
            }
        }
        while (!dims_.empty() && dims_.back() == 0) {
            dims_.pop_back();
            if (basis_ && basis_->size() > dims_.size())
                basis_->pop_back();
        }
        require(!dims_.empty(), ErrorKind::ZeroModule, "module has no nonzero component");
        for (int d : dims_)
            require(d >= 0, ErrorKind::ShapeMismatch, "negative dimension");
        // graded pieces between 0 and p may be zero-dimensional; maps handle it
    }

    void validate_shapes() {
        int p = socle_degree();
        require(static_cast<int>(var_maps_.size()) == num_vars_, ErrorKind::ShapeMismatch,
                "expected one map family per variable");
        for (int v = 0; v < num_vars_; ++v) {
            auto& maps = var_maps_[v];
            // drop maps at or beyond the socle degree; targets there are zero
            if (static_cast<int>(maps.size()) > p)
                maps.resize(p);
            require(static_cast<int>(maps.size()) == p, ErrorKind::ShapeMismatch,
                    "variable x" + std::to_string(v + 1) + " needs " + std::to_string(p) +
                        " degree maps, got " + std::to_string(maps.size()));
            for (int d = 0; d < p; ++d)
                require(maps[d].rows() == dims_[d + 1] && maps[d].cols() == dims_[d],
                        ErrorKind::ShapeMismatch,
                        "map of x" + std::to_string(v + 1) + " at degree " + std::to_string(d) +
                            " has wrong shape");
        }
        if (basis_) {
            require(static_cast<int>(basis_->size()) == p + 1, ErrorKind::ShapeMismatch,
                    "basis/dims length mismatch");
            for (int d = 0; d <= p; ++d)
                require(static_cast<int>((*basis_)[d].size()) == dims_[d], ErrorKind::ShapeMismatch,
                        "basis size mismatch at degree " + std::to_string(d));
        }
        top_maps_.assign(num_vars_, Matrix<K>(0, dims_.back()));
    }

    FieldSpec field_;
    int num_vars_;
    std::vector<int> dims_;
    std::vector<std::vector<Matrix<K>>> var_maps_;
    std::optional<std::vector<std::vector<Monomial>>> basis_;
    std::vector<Matrix<K>> top_maps_;  // empty maps out of the socle degree
    int shift_ = 0;
};

/// Quotient by an Artinian monomial ideal with the standard-monomial basis.
template <typename K>
GradedModule<K> module_from_ideal(const MonomialIdeal& ideal, const FieldSpec& field) {
    auto basis = quotient_basis(ideal);
    int p = static_cast<int>(basis.size()) - 1;
    int n = ideal.num_vars();

    std::vector<int> dims(p + 1);
    for (int d = 0; d <= p; ++d)
        dims[d] = static_cast<int>(basis[d].size());

    // index of each standard monomial inside its degree block
    auto index_of = [&](const Monomial& m) -> int {
        int d = m.degree();
        if (d > p)
            return -1;
        for (std::size_t i = 0; i < basis[d].size(); ++i)
            if (basis[d][i] == m)
                return static_cast<int>(i);
        return -1;
    };

    std::vector<std::vector<Matrix<K>>> var_maps(n);
    for (int v = 0; v < n; ++v) {
        var_maps[v].reserve(p);
        for (int d = 0; d < p; ++d) {
            Matrix<K> map(dims[d + 1], dims[d]);
            for (int col = 0; col < dims[d]; ++col) {
                Monomial product = basis[d][col];
                ++product.exponents[v];
                int row = ideal.contains(product) ? -1 : index_of(product);
                if (row >= 0)
                    map.at(row, col) = make_scalar<K>(field, 1);
            }
            var_maps[v].push_back(std::move(map));
        }
    }
    return GradedModule<K>(field, n, std::move(dims), std::move(var_maps), std::move(basis));
}

/// General-input path: explicit dimensions and multiplication maps. An empty
/// map list is accepted for modules concentrated in a single degree.
template <typename K>
GradedModule<K> module_from_maps(const FieldSpec& field, int num_vars, std::vector<int> dims,
                                 std::vector<std::vector<Matrix<K>>> var_maps) {
    if (var_maps.empty())
        var_maps.resize(num_vars);
    return GradedModule<K>(field, num_vars, std::move(dims), std::move(var_maps));
}

template <typename K>
HilbertSeries hilbert_series(const GradedModule<K>& module) {
    std::vector<int> coeffs(module.socle_degree() + 1);
    for (int d = 0; d <= module.socle_degree(); ++d)
        coeffs[d] = module.dim(d);
    return HilbertSeries(std::move(coeffs));
}

/// Matrix of multiplication by the form from degree d to d+1.
template <typename K>
Matrix<K> mult_matrix(const GradedModule<K>& module, const LinearForm<K>& form, int d) {
    require(form.num_vars() == module.num_vars(), ErrorKind::ShapeMismatch,
            "form has " + std::to_string(form.num_vars()) + " coefficients, module has " +
                std::to_string(module.num_vars()) + " variables");
    require(d >= 0 && d <= module.socle_degree(), ErrorKind::DegreeOutOfRange,
            "degree " + std::to_string(d) + " outside 0.." +
                std::to_string(module.socle_degree()));
    Matrix<K> out(module.dim(d + 1), module.dim(d));
    for (int v = 0; v < module.num_vars(); ++v)
        out.add_scaled(module.var_map(v, d), form.coefficients[v]);
    return out;
}

/// Tensor product over k: variables are the disjoint union, graded pieces are
/// pairs of basis elements, and each variable acts on its own factor.
template <typename K>
GradedModule<K> tensor_module(const GradedModule<K>& left, const GradedModule<K>& right) {
    require(left.field() == right.field(), ErrorKind::FieldMismatch,
            "tensor factors over different fields: " + left.field().describe() + " vs " +
                right.field().describe());
    const FieldSpec& field = left.field();
    int pl = left.socle_degree(), pr = right.socle_degree();
    int p = pl + pr;
    int nl = left.num_vars(), nr = right.num_vars();

    std::vector<int> dims(p + 1, 0);
    for (int d = 0; d <= p; ++d)
        for (int e = 0; e <= d; ++e)
            dims[d] += left.dim(e) * right.dim(d - e);

    // block offset of the (e, d-e) component inside degree d, blocks ordered
    // by ascending left degree, u-major within a block
    auto block_offset = [&](int d, int e) {
        int offset = 0;
        for (int f = 0; f < e; ++f)
            offset += left.dim(f) * right.dim(d - f);
        return offset;
    };

    std::vector<std::vector<Matrix<K>>> var_maps(nl + nr);
    for (auto& maps : var_maps)
        maps.reserve(p);
    for (int d = 0; d < p; ++d) {
        for (int v = 0; v < nl + nr; ++v)
            var_maps[v].emplace_back(dims[d + 1], dims[d]);
        for (int e = 0; e <= d; ++e) {
            int dl = left.dim(e), dr = right.dim(d - e);
            if (dl == 0 || dr == 0)
                continue;
            int src = block_offset(d, e);
            // left variables: (e, d-e) -> (e+1, d-e)
            if (left.dim(e + 1) > 0) {
                int dst = block_offset(d + 1, e + 1);
                for (int v = 0; v < nl; ++v) {
                    const Matrix<K>& step = left.var_map(v, e);
                    for (int u2 = 0; u2 < step.rows(); ++u2)
                        for (int u = 0; u < step.cols(); ++u) {
                            if (is_zero(step.at(u2, u)))
                                continue;
                            for (int w = 0; w < dr; ++w)
                                var_maps[v][d].at(dst + u2 * dr + w, src + u * dr + w) = step.at(u2, u);
                        }
                }
            }
            // right variables: (e, d-e) -> (e, d-e+1)
            if (right.dim(d - e + 1) > 0) {
                int dst = block_offset(d + 1, e);
                int dr2 = right.dim(d - e + 1);
                for (int v = 0; v < nr; ++v) {
                    const Matrix<K>& step = right.var_map(v, d - e);
                    for (int w2 = 0; w2 < step.rows(); ++w2)
                        for (int w = 0; w < step.cols(); ++w) {
                            if (is_zero(step.at(w2, w)))
                                continue;
                            for (int u = 0; u < dl; ++u)
                                var_maps[nl + v][d].at(dst + u * dr2 + w2, src + u * dr + w) =
                                    step.at(w2, w);
                        }
                }
            }
        }
    }

    std::optional<std::vector<std::vector<Monomial>>> basis;
    if (left.basis() && right.basis()) {
        basis.emplace(p + 1);
        for (int d = 0; d <= p; ++d)
            for (int e = 0; e <= d; ++e) {
                if (left.dim(e) == 0 || right.dim(d - e) == 0)
                    continue;
                for (const Monomial& u : (*left.basis())[e])
                    for (const Monomial& w : (*right.basis())[d - e]) {
                        Monomial m;
                        m.exponents = u.exponents;
                        m.exponents.insert(m.exponents.end(), w.exponents.begin(),
                                           w.exponents.end());
                        (*basis)[d].push_back(std::move(m));
                    }
            }
    }

    return GradedModule<K>(field, nl + nr, std::move(dims), std::move(var_maps), std::move(basis),
                           MapValidation::TrustCommutation);
}

/// Truncated polynomial ring k[y]/(y^m) as a module over itself.
template <typename K>
GradedModule<K> truncated_polynomial_module(const FieldSpec& field, int m) {
    require(m >= 1, ErrorKind::InvalidM, "truncation order must be >= 1");
    std::vector<int> dims(m, 1);
    std::vector<std::vector<Matrix<K>>> maps(1);
    for (int d = 0; d + 1 < m; ++d) {
        Matrix<K> step(1, 1);
        step.at(0, 0) = make_scalar<K>(field, 1);
        maps[0].push_back(std::move(step));
    }
    std::vector<std::vector<Monomial>> basis(m);
    for (int d = 0; d < m; ++d)
        basis[d].push_back(Monomial{{d}});
    return GradedModule<K>(field, 1, std::move(dims), std::move(maps), std::move(basis));
}

/// M tensor k[y]/(y^m): adds one variable, multiplies total dimension by m.
template <typename K>
GradedModule<K> extend_module(const GradedModule<K>& module, int m) {
    require(m >= 1, ErrorKind::InvalidM, "extension order must be >= 1");
    return tensor_module(module, truncated_polynomial_module<K>(module.field(), m));
}

/// Append the coefficient of the new extension variable to a form.
template <typename K>
LinearForm<K> extended_form(const GradedModule<K>& base, const LinearForm<K>& form) {
    std::vector<K> coeffs = form.coefficients;
    coeffs.push_back(make_scalar<K>(base.field(), 1));
    return LinearForm<K>(std::move(coeffs));
}

template <typename K>
GradedModule<K> shift_module(const GradedModule<K>& module, int j) {
    require(j >= 0, ErrorKind::DegreeOutOfRange, "shift must be nonnegative");
    return module.with_shift(j);
}

/// Direct sum of abstract chain modules over one variable; the variable acts
/// as the chain step. Used to realize a decomposition as a module again.
template <typename K>
GradedModule<K> chain_module(const CyclicDecomposition& decomposition, const FieldSpec& field) {
    require(!decomposition.empty(), ErrorKind::ZeroModule, "empty decomposition");
    std::vector<int> dims = decomposition.cover_counts();
    int p = static_cast<int>(dims.size()) - 1;
    const auto& summands = decomposition.summands();

    // slot of each summand within a degree: summands in canonical order
    auto slot = [&](std::size_t target, int degree) {
        int s = 0;
        for (std::size_t i = 0; i < target; ++i)
            if (summands[i].covers(degree))
                ++s;
        return s;
    };

    std::vector<std::vector<Matrix<K>>> maps(1);
    for (int d = 0; d < p; ++d) {
        Matrix<K> step(dims[d + 1], dims[d]);
        for (std::size_t i = 0; i < summands.size(); ++i)
            if (summands[i].covers(d) && summands[i].covers(d + 1))
                step.at(slot(i, d + 1), slot(i, d)) = make_scalar<K>(field, 1);
        maps[0].push_back(std::move(step));
    }
    return GradedModule<K>(field, 1, std::move(dims), std::move(maps));
}

}  // namespace slp

#endif
