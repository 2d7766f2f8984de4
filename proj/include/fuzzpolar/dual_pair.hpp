#ifndef FUZZPOLAR_DUAL_PAIR_HPP
#define FUZZPOLAR_DUAL_PAIR_HPP

#include "fuzzpolar/errors.hpp"
#include "fuzzpolar/linalg.hpp"

namespace fuzzpolar {

// Finite-dimensional dual pair (E, E') with <x, x'> = x^T P x'.
// Nonsingularity of P is exactly the nondegeneracy of the pairing.
class DualPair {
public:
    explicit DualPair(int dimension)
        : dim_(dimension), pairing_(identity_mat(dimension)) {}

    DualPair(int dimension, Mat pairing)
        : dim_(dimension), pairing_(std::move(pairing)) {
        if (static_cast<int>(pairing_.size()) != dim_)
            throw InvalidInput("pairing matrix dimension mismatch");
        for (const auto& row : pairing_)
            if (static_cast<int>(row.size()) != dim_)
                throw InvalidInput("pairing matrix dimension mismatch");
        if (determinant(pairing_) == 0)
            throw InvalidInput("pairing matrix is singular");
    }

    int dim() const { return dim_; }
    const Mat& pairing() const { return pairing_; }

    Rational apply(const Vec& x, const Vec& x_dual) const {
        return dot(x, mat_apply(pairing_, x_dual));
    }

    bool is_standard() const { return pairing_ == identity_mat(dim_); }

private:
    int dim_;
    Mat pairing_;
};

} // namespace fuzzpolar

#endif
