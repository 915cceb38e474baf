#include "grk/fflinalg.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace grk {

namespace {

std::uint32_t reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime()) throw InputError("matrix field mismatch");
}

std::string shape(const Matrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw InputError("zero has no inverse");
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Matrix::Matrix(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
    a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(int n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.a_[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
}

Matrix Matrix::zero(int rows, int cols, std::uint32_t p) { return Matrix(rows, cols, p); }

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(int r, int c, long long v) {
    a_[static_cast<std::size_t>(r) * cols_ + c] = reduce(v, p_);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.a_[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
    return t;
}

Matrix Matrix::negated() const {
    Matrix n = *this;
    for (auto& v : n.a_) v = v ? p_ - v : 0;
    return n;
}

bool Matrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

Matrix compose(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw InputError("cannot compose " + shape(a) + " with " + shape(b));
    const std::uint64_t p = a.prime();
    Matrix c(a.rows(), b.cols(), a.prime());
    std::vector<std::uint64_t> acc(b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const std::uint32_t* ar = a.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            std::uint64_t f = ar[k];
            if (!f) continue;
            const std::uint32_t* br = b.row(k);
            for (int j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + f * br[j]) % p;
        }
        std::uint32_t* cr = c.row(i);
        for (int j = 0; j < b.cols(); ++j) cr[j] = static_cast<std::uint32_t>(acc[j]);
    }
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return compose(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("cannot add " + shape(a) + " and " + shape(b));
    Matrix c(a.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.set(i, j, static_cast<long long>(a(i, j)) + b(i, j));
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.negated(); }

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw InputError("hstack row mismatch: " + shape(a) + " vs " + shape(b));
    Matrix c(a.rows(), a.cols() + b.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c.row(i)[j] = a(i, j);
        for (int j = 0; j < b.cols(); ++j) c.row(i)[a.cols() + j] = b(i, j);
    }
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw InputError("vstack column mismatch: " + shape(a) + " vs " + shape(b));
    Matrix c(a.rows() + b.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.row(i)[j] = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.row(a.rows() + i)[j] = b(i, j);
    return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix c(a.rows() + b.rows(), a.cols() + b.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.row(i)[j] = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.row(a.rows() + i)[a.cols() + j] = b(i, j);
    return c;
}

Matrix select_rows(const Matrix& a, int first, int count) {
    if (first < 0 || count < 0 || first + count > a.rows()) throw InputError("row range out of bounds");
    Matrix c(count, a.cols(), a.prime());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < a.cols(); ++j) c.row(i)[j] = a(first + i, j);
    return c;
}

Rref rref(Matrix a) {
    const std::uint64_t p = a.prime();
    Rref out;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.row(piv)[j], a.row(r)[j]);
        std::uint32_t* pr = a.row(r);
        std::uint64_t inv = mod_inverse(pr[c], a.prime());
        if (inv != 1)
            for (int j = c; j < a.cols(); ++j) pr[j] = static_cast<std::uint32_t>(pr[j] * inv % p);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            std::uint32_t* ri = a.row(i);
            std::uint64_t f = ri[c];
            if (!f) continue;
            std::uint64_t nf = p - f;
            for (int j = c; j < a.cols(); ++j)
                if (pr[j]) ri[j] = static_cast<std::uint32_t>((ri[j] + nf * pr[j]) % p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.r = std::move(a);
    return out;
}

int rank(const Matrix& a) {
    if (a.empty()) return 0;
    // Eliminate on the shorter side.
    if (a.rows() > a.cols()) return static_cast<int>(rref(a.transpose()).pivots.size());
    return static_cast<int>(rref(a).pivots.size());
}

Matrix kernel_basis(const Matrix& a) {
    const std::uint32_t p = a.prime();
    Rref e = rref(a);
    std::vector<char> is_pivot(a.cols(), 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    int nfree = a.cols() - static_cast<int>(e.pivots.size());
    Matrix k(a.cols(), nfree, p);
    int col = 0;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        k.set(f, col, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            std::uint32_t v = e.r(static_cast<int>(i), f);
            if (v) k.set(e.pivots[i], col, static_cast<long long>(p) - v);
        }
        ++col;
    }
    return k;
}

CokernelProjection cokernel_projector(const Matrix& a) {
    CokernelProjection out;
    out.projector = kernel_basis(a.transpose()).transpose();
    out.quotient_dim = out.projector.rows();
    return out;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw InputError("inverse of non-square matrix");
    int n = a.rows();
    Rref e = rref(hstack(a, Matrix::identity(n, a.prime())));
    if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] >= n))
        throw InputError("matrix is singular");
    Matrix inv(n, n, a.prime());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.row(i)[j] = e.r(i, n + j);
    return inv;
}

}  // namespace grk
