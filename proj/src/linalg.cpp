#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMat();
    IntMat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows())
            throw std::invalid_argument("from_cols: ragged input");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMat::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IntVec IntMat::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVec IntMat::mul(const IntVec& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("mul: dimension mismatch");
    IntVec y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

IntMat IntMat::mul(const IntMat& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("mul: dimension mismatch");
    IntMat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r(i, j) += (*this)(i, k) * other(k, j);
        }
    return r;
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMat& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// row a -= q * row b
void axpy_row(IntMat& m, std::size_t a, const Int& q, std::size_t b) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& M) {
    if (M.rows() == 0 || M.cols() == 0)
        throw std::invalid_argument("hermite_normal_form: empty matrix");
    IntMat H = M;
    IntMat U = IntMat::identity(M.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
        // Euclid down column c until one nonzero entry remains at row r.
        while (true) {
            std::size_t piv = H.rows();
            for (std::size_t i = r; i < H.rows(); ++i)
                if (H(i, c) != 0 && (piv == H.rows() ||
                                     cmp(abs(H(i, c)), abs(H(piv, c))) < 0))
                    piv = i;
            if (piv == H.rows()) break;  // column clear below r
            swap_rows(H, r, piv);
            swap_rows(U, r, piv);
            if (H(r, c) < 0) { negate_row(H, r); negate_row(U, r); }
            bool below_clear = true;
            for (std::size_t i = r + 1; i < H.rows(); ++i) {
                if (H(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
                axpy_row(H, i, q, r);
                axpy_row(U, i, q, r);
                if (H(i, c) != 0) below_clear = false;
            }
            if (below_clear) break;
        }
        if (H(r, c) == 0) continue;
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
            axpy_row(H, i, q, r);
            axpy_row(U, i, q, r);
        }
        ++r;
    }
    return {H, U};
}

Int determinant(const IntMat& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMat a = M;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv == n) return 0;
            swap_rows(a, k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::size_t rank(const IntMat& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    HermiteResult h = hermite_normal_form(M);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < h.H.cols(); ++j)
            if (h.H(i, j) != 0) { nz = true; break; }
        if (nz) ++r;
    }
    return r;
}

std::vector<IntVec> kernel_lattice_basis(const IntMat& M) {
    // U * M^T = H; the rows of U matching zero rows of H form a basis of
    // { a : M*a = 0 }.
    HermiteResult h = hermite_normal_form(M.transpose());
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.H.cols(); ++j)
            if (h.H(i, j) != 0) { zero = false; break; }
        if (zero) basis.push_back(h.U.row(i));
    }
    return basis;
}

bool spans_standard_lattice(const IntMat& M) {
    if (M.rows() == 0 || M.cols() == 0) return M.cols() == 0;
    HermiteResult h = hermite_normal_form(M);
    std::size_t n = M.cols();
    if (M.rows() < n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.H(i, j) != (i == j ? 1 : 0)) return false;
    for (std::size_t i = n; i < M.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.H(i, j) != 0) return false;
    return true;
}

}  // namespace toric
