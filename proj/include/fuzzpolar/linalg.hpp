#ifndef FUZZPOLAR_LINALG_HPP
#define FUZZPOLAR_LINALG_HPP

#include <optional>
#include <vector>

#include "fuzzpolar/rational.hpp"

namespace fuzzpolar {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>; // row-major

Rational dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& t, const Vec& v);
Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);

Mat identity_mat(int n);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);

Rational determinant(Mat m);
int rank(Mat m);

// Solves A x = b. Empty optional when inconsistent; when the system is
// underdetermined, returns one particular solution (free variables at 0).
std::optional<Vec> solve_linear(Mat a, Vec b);

// Basis of {x : A x = 0}.
std::vector<Vec> null_space(Mat a);

// Scales v by a positive rational so entries are coprime integers.
// Zero vector maps to itself.
Vec primitive_integer_direction(const Vec& v);

// Lexicographic comparison, used everywhere canonical order is needed.
int compare_vec(const Vec& a, const Vec& b);

} // namespace fuzzpolar

#endif
