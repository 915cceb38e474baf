#pragma once

#include <cstdint>
#include <vector>

namespace grk {

inline constexpr std::uint32_t kDefaultPrime = 2;

bool is_prime(std::uint32_t p);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Dense matrix over GF(p), row-major, entries kept in [0, p).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, std::uint32_t p = kDefaultPrime);

    static Matrix identity(int n, std::uint32_t p = kDefaultPrime);
    static Matrix zero(int rows, int cols, std::uint32_t p = kDefaultPrime);
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p = kDefaultPrime);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);
    std::uint32_t* row(int r) { return a_.data() + static_cast<std::size_t>(r) * cols_; }
    const std::uint32_t* row(int r) const { return a_.data() + static_cast<std::size_t>(r) * cols_; }

    Matrix transpose() const;
    Matrix negated() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::uint32_t p_ = kDefaultPrime;
    std::vector<std::uint32_t> a_;
};

Matrix compose(const Matrix& a, const Matrix& b);  // a * b
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix select_rows(const Matrix& a, int first, int count);

struct Rref {
    Matrix r;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; the pivot in each column is the first row with a nonzero entry.
Rref rref(Matrix a);
int rank(const Matrix& a);

// Columns form a basis of ker(a).
Matrix kernel_basis(const Matrix& a);

struct CokernelProjection {
    int quotient_dim = 0;
    Matrix projector;  // quotient_dim x rows(a), surjective, kernel = col(a)
};
CokernelProjection cokernel_projector(const Matrix& a);

Matrix inverse(const Matrix& a);

}  // namespace grk
