#include "slp/matrix.hpp"

#include <cassert>
#include <cstdlib>

namespace slp {

int bareiss_rank(std::vector<mpz_class> a, int rows, int cols) {
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * cols + j]; };

    mpz_class prev = 1;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        // pivot on the smallest nonzero magnitude to slow entry growth
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (sgn(at(i, col)) == 0)
                continue;
            if (pivot < 0 || mpz_cmpabs(at(i, col).get_mpz_t(), at(pivot, col).get_mpz_t()) < 0)
                pivot = i;
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = col; j < cols; ++j)
                std::swap(at(pivot, j), at(row, j));

        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                mpz_class num = at(row, col) * at(i, j) - at(i, col) * at(row, j);
                // Sylvester's identity: division by the previous pivot is exact
                assert(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

int exact_rank(const Matrix<Rational>& m) {
    if (m.empty())
        return 0;
    std::vector<mpz_class> cleared(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            cleared[static_cast<std::size_t>(i) * m.cols() + j] = q.get_num() * (lcm / q.get_den());
        }
    }
    return bareiss_rank(std::move(cleared), m.rows(), m.cols());
}

int exact_rank(const Matrix<Zp>& m) {
    if (m.empty())
        return 0;
    Matrix<Zp> a = m;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = col; j < a.cols(); ++j)
                std::swap(a.at(pivot, j), a.at(row, j));
        Zp inv_pivot = Zp(1, a.at(row, col).modulus()) / a.at(row, col);
        for (int i = row + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero())
                continue;
            Zp factor = a.at(i, col) * inv_pivot;
            for (int j = col; j < a.cols(); ++j)
                a.at(i, j) -= factor * a.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    while (exp) {
        if (exp & 1)
            result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv(std::uint64_t x) { return pow(x, kPrime - 2); }

Mat64 mat_mul(const Mat64& a, const Mat64& b) {
    assert(a.cols == b.rows);
    Mat64 c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            std::uint64_t aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols; ++j) {
                std::uint64_t bkj = b.at(k, j);
                if (bkj != 0)
                    c.at(i, j) = add(c.at(i, j), mul(aik, bkj));
            }
        }
    return c;
}

int rank(Mat64 a) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = col; j < a.cols; ++j)
                std::swap(a.at(pivot, j), a.at(row, j));
        std::uint64_t inv_pivot = inv(a.at(row, col));
        for (int i = row + 1; i < a.rows; ++i) {
            if (a.at(i, col) == 0)
                continue;
            std::uint64_t factor = mul(a.at(i, col), inv_pivot);
            for (int j = col; j < a.cols; ++j) {
                std::uint64_t sub = mul(factor, a.at(row, j));
                a.at(i, j) = add(a.at(i, j), sub == 0 ? 0 : kPrime - sub);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<Mat64> reduce(const Matrix<Rational>& m) {
    Mat64 out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kPrime);
            if (den == 0)
                return std::nullopt;
            // fdiv floors, so negative numerators land on the canonical residue
            std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), kPrime);
            out.at(i, j) = num == 0 ? 0 : mul(num, inv(den));
        }
    return out;
}

}  // namespace modp

}  // namespace slp
