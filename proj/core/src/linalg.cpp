#include "segre/linalg.hpp"

namespace segre {

MatQ MatQ::transpose() const {
    MatQ out(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

MatQ MatQ::kronecker(const MatQ& x, const MatQ& y) {
    MatQ out(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < y.rows(); ++k)
                for (std::size_t l = 0; l < y.cols(); ++l)
                    out.at(i * y.rows() + k, j * y.cols() + l) = x.at(i, j) * y.at(k, l);
        }
    return out;
}

MatQ MatQ::direct_sum(const std::vector<MatQ>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    MatQ out(r, c);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

MatQ MatQ::operator+(const MatQ& o) const {
    MatQ out(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
    return out;
}

MatQ MatQ::operator*(const MatQ& o) const {
    MatQ out(r_, o.cols());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols(); ++j)
                if (o.at(k, j) != 0) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref(MatQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(MatQ m) { return rref(m).size(); }

MatQ kernel_basis(MatQ m) {
    std::size_t n = m.cols();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    MatQ out(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out.at(pivots[i], k) = -m.at(i, fc);
    }
    return out;
}

}  // namespace segre
