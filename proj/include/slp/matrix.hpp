#ifndef SLP_MATRIX_HPP
#define SLP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "slp/field.hpp"

namespace slp {

/// Dense matrix over an exact field. Sizes here are per-degree dimensions of
/// graded modules, so a dense representation is the right tradeoff.
template <typename K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool empty() const { return rows_ == 0 || cols_ == 0; }

    /// C = A * B, skipping zero entries of A (module maps are very sparse).
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorKind::ShapeMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (is_zero(aik))
                    continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bkj = b.at(k, j);
                    if (!is_zero(bkj))
                        c.at(i, j) += aik * bkj;
                }
            }
        }
        return c;
    }

    /// this += scale * other
    void add_scaled(const Matrix& other, const K& scale) {
        require(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::ShapeMismatch,
                "matrix sum shape mismatch");
        if (is_zero(scale))
            return;
        for (std::size_t t = 0; t < a_.size(); ++t)
            if (!is_zero(other.a_[t]))
                a_[t] += scale * other.a_[t];
    }

    bool operator==(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            return false;
        for (std::size_t t = 0; t < a_.size(); ++t)
            if (!(a_[t] == other.a_[t]))
                return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

/// Rank by fraction-free (Bareiss) elimination on a row-wise integer clearing
/// of the matrix. Intermediate entries stay minors of the cleared matrix, so
/// no rational arithmetic appears after the clearing step.
int exact_rank(const Matrix<Rational>& m);

/// Rank by standard Gaussian elimination over F_p.
int exact_rank(const Matrix<Zp>& m);

int bareiss_rank(std::vector<mpz_class> entries, int rows, int cols);

namespace modp {

/// Word-sized mirror of a rational matrix modulo the fixed Mersenne prime
/// 2^61 - 1, used to certify ranks cheaply: a full-rank result mod p proves
/// full rank over Q exactly (a nonzero minor mod p lifts).
inline constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

struct Mat64 {
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    Mat64() = default;
    Mat64(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

inline std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
    unsigned __int128 z = static_cast<unsigned __int128>(x) * y;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime)
        s -= kPrime;
    return s;
}

inline std::uint64_t add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t s = x + y;
    if (s >= kPrime)
        s -= kPrime;
    return s;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t inv(std::uint64_t x);

Mat64 mat_mul(const Mat64& a, const Mat64& b);
int rank(Mat64 m);

/// Image of the matrix under Q -> F_p; nullopt when some denominator is
/// divisible by p (then the homomorphism is undefined and callers must take
/// the exact path).
std::optional<Mat64> reduce(const Matrix<Rational>& m);

}  // namespace modp

}  // namespace slp

#endif
