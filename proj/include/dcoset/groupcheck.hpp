#ifndef DCOSET_GROUPCHECK_HPP
#define DCOSET_GROUPCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcoset {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Square matrix, row major. Sizes 2..6 are what the identities use.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& x);

/// sum_{k=1}^{terms} (-1)^{N+k} M_k y_k for an N x N matrix, where M_k
/// deletes row k and the last column and y_k = x[k][N]. With terms = N
/// this is the Laplace expansion along the last column.
BigInt last_column_expansion(const IntMatrix& x, std::size_t terms);

/// True iff the full expansion equals det X. Requires 1 <= n <= 5 and X of
/// size n + 1. Throws InvalidParameters / LengthMismatch otherwise.
bool minor_identity(int n, const IntMatrix& x);

/// Skew form on k^4 in the basis order e1, e2, e'2, e'1 with
/// omega(e_i, e'_i) = 1: omega(u, v) = u0 v3 - u3 v0 + u1 v2 - u2 v1.
BigInt symplectic_pairing(const std::vector<BigInt>& u, const std::vector<BigInt>& v);

/// (u1,u2)(u3,u4) - (u1,u3)(u2,u4) + (u1,u4)(u2,u3) on the rows of X.
BigInt symplectic_expression(const IntMatrix& x);

/// True iff symplectic_expression(X) == det X. X must be 4 x 4.
bool symplectic_identity(const IntMatrix& x);

enum class QuadricParity { Even, Odd };

/// Coordinates are ordered x1..xn, x'n..x'1 (even, 2n entries) or
/// x1..xn, x, x'n..x'1 (odd, 2n + 1 entries).
struct QuadricImage {
  std::vector<BigRational> z;   // z_i = x_i x'_i
  std::optional<BigRational> x;  // odd parity only
  bool on_quadric = false;       // sum x_i x'_i (+ x^2) == 1
  bool on_image = false;         // sum z_i (+ x^2) == 1
};

/// Throws InvalidParameters for n < 1, LengthMismatch for a wrong
/// coordinate count.
QuadricImage quadric_quotient_image(std::size_t n, const std::vector<BigRational>& point,
                                    QuadricParity parity);

enum class Identity { Minor, Symplectic, Quadric };

std::string_view identity_name(Identity which);
std::optional<Identity> identity_from_name(std::string_view name);

struct TrialFailure {
  std::size_t trial = 0;
  std::string input;  // the offending matrix or point
};

struct TrialReport {
  Identity which = Identity::Minor;
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialFailure> failures;
};

/// Seeded random trials with entries in [-9, 9]. Minor uses (n+1) x (n+1)
/// matrices; symplectic ignores n; quadric runs `trials` points of each
/// parity, solving x'1 so the point lies on the quadric (x1 nonzero).
TrialReport run_trials(Identity which, int n, std::size_t trials, std::uint64_t seed);

std::string format_matrix(const IntMatrix& x);

}  // namespace dcoset

#endif  // DCOSET_GROUPCHECK_HPP
