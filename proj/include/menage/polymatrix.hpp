#pragma once

#include <span>
#include <vector>

#include "menage/laurent.hpp"

namespace menage {

// Square matrix over LaurentPoly. Carrier for the weighted adjacency
// matrices and the constant U/V pairs derived from them.
class PolyMatrix {
  public:
    explicit PolyMatrix(int dim);

    static PolyMatrix identity(int dim);

    int dim() const { return dim_; }

    LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
    const LaurentPoly& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * dim_ + j];
    }

    LaurentPoly trace() const;

    /// Entrywise product with a fixed polynomial (used for U*t and y*B).
    PolyMatrix scaled(const LaurentPoly& factor) const;

    /// Applies the same permutation to rows and columns: result(i, j) =
    /// m(perm[i], perm[j]).
    PolyMatrix permuted(std::span<const int> perm) const;

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  private:
    int dim_;
    std::vector<LaurentPoly> e_;
};

/// Exact polynomial matrix product, with optional degree caps applied to
/// every entry product. Throws std::invalid_argument on dimension mismatch.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const PolyCaps& caps = {});

/// m^e by square-and-multiply. m^0 is the identity.
PolyMatrix mat_pow(const PolyMatrix& m, unsigned e, const PolyCaps& caps = {});

/// tr(m^e) by square-and-multiply; tr(m^0) = dim as a constant polynomial.
LaurentPoly mat_pow_trace(const PolyMatrix& m, unsigned e, const PolyCaps& caps = {});

}  // namespace menage
