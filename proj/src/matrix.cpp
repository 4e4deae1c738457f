#include "pervcoh/matrix.hpp"

namespace pervcoh {

Matrix matrix_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix_product: shape mismatch");
    Matrix p(a.ring(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Polynomial acc(a.ring());
            for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            p.at(i, j) = acc;
        }
    return p;
}

}  // namespace pervcoh
