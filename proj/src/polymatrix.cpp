#include "menage/polymatrix.hpp"

#include <stdexcept>

namespace menage {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("PolyMatrix: dimension must be positive");
    e_.resize(static_cast<std::size_t>(dim) * dim);
}

PolyMatrix PolyMatrix::identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::constant(1);
    return m;
}

LaurentPoly PolyMatrix::trace() const {
    LaurentPoly t;
    for (int i = 0; i < dim_; ++i) t = t + at(i, i);
    return t;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& factor) const {
    PolyMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = at(i, j) * factor;
    return m;
}

PolyMatrix PolyMatrix::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != dim_)
        throw std::invalid_argument("PolyMatrix::permuted: bad permutation size");
    PolyMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = at(perm[i], perm[j]);
    return m;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix m(a.dim_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix m(a.dim_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const PolyCaps& caps) {
    if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const int n = a.dim();
    PolyMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly acc;
            for (int k = 0; k < n; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc = acc + poly_mul(a.at(i, k), b.at(k, j), caps);
            }
            out.at(i, j) = std::move(acc);
        }
    return out;
}

PolyMatrix mat_pow(const PolyMatrix& m, unsigned e, const PolyCaps& caps) {
    PolyMatrix result = PolyMatrix::identity(m.dim());
    PolyMatrix base = m;
    while (e > 0) {
        if (e & 1u) result = mat_mul(result, base, caps);
        e >>= 1u;
        if (e > 0) base = mat_mul(base, base, caps);
    }
    return result;
}

LaurentPoly mat_pow_trace(const PolyMatrix& m, unsigned e, const PolyCaps& caps) {
    if (e == 0) return LaurentPoly::constant(m.dim());
    return mat_pow(m, e, caps).trace();
}

}  // namespace menage
