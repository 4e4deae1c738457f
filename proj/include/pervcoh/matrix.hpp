#pragma once

#include <vector>

#include "pervcoh/poly.hpp"

namespace pervcoh {

// Dense matrix over the polynomial ring, row-major. Zero rows/cols are legal
// (maps from or to the zero free module).
class Matrix {
  public:
    Matrix() = default;
    Matrix(RingPtr ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Polynomial(ring_)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Polynomial& at(int r, int c) const { return e_.at(index(r, c)); }
    Polynomial& at(int r, int c) { return e_.at(index(r, c)); }

    FreeElement col(int c) const {
        std::vector<Polynomial> comps;
        comps.reserve(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r) comps.push_back(at(r, c));
        return FreeElement(ring_, std::move(comps));
    }

    void set_col(int c, const FreeElement& v) {
        if (v.rank() != rows_) throw std::invalid_argument("set_col rank mismatch");
        for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(ring_, cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    static Matrix from_cols(RingPtr ring, int rows, const std::vector<FreeElement>& cols) {
        Matrix m(std::move(ring), rows, static_cast<int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(static_cast<int>(c), cols[c]);
        return m;
    }

    std::vector<FreeElement> cols_as_elements() const {
        std::vector<FreeElement> out;
        out.reserve(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c) out.push_back(col(c));
        return out;
    }

  private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> e_;

    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
};

Matrix matrix_product(const Matrix& a, const Matrix& b);

}  // namespace pervcoh
