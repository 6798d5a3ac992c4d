// Dense exact linear algebra over Q, sized for cohomology groups of a few
// hundred dimensions at most.
#pragma once

#include <vector>

#include "segre/chow.hpp"

namespace segre {

class MatQ {
  public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    MatQ transpose() const;
    static MatQ kronecker(const MatQ& x, const MatQ& y);
    // Block-diagonal stack: maps the direct sum of the domains.
    static MatQ direct_sum(const std::vector<MatQ>& blocks);
    MatQ operator+(const MatQ& o) const;
    MatQ operator*(const MatQ& o) const;

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

std::size_t rank(MatQ m);
// Basis of the right kernel {v : Mv = 0}, as columns.
MatQ kernel_basis(MatQ m);

}  // namespace segre
