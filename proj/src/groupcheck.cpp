#include "dcoset/groupcheck.hpp"

#include <random>
#include <sstream>

#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

void require_square(const IntMatrix& x, std::size_t size, const char* what) {
  if (x.size() != size) {
    throw LengthMismatch(std::string(what) + ": expected " + std::to_string(size) + " rows, got " +
                         std::to_string(x.size()));
  }
  for (const auto& row : x) {
    if (row.size() != size) {
      throw LengthMismatch(std::string(what) + ": expected " + std::to_string(size) +
                           " columns, got " + std::to_string(row.size()));
    }
  }
}

IntMatrix minor(const IntMatrix& x, std::size_t row, std::size_t col) {
  IntMatrix out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == row) continue;
    std::vector<BigInt> r;
    for (std::size_t j = 0; j < x[i].size(); ++j) {
      if (j != col) r.push_back(x[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_point(const std::vector<BigRational>& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::int64_t entry() { return dist_(rng_); }
  std::int64_t nonzero() {
    std::int64_t v;
    do v = entry();
    while (v == 0);
    return v;
  }
  IntMatrix matrix(std::size_t size) {
    IntMatrix x(size, std::vector<BigInt>(size));
    for (auto& row : x)
      for (auto& v : row) v = entry();
    return x;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<std::int64_t> dist_{-9, 9};
};

// x'1 is solved from the remaining coordinates; everything else is drawn.
std::vector<BigRational> quadric_point(Sampler& s, std::size_t n, QuadricParity parity) {
  const bool odd = parity == QuadricParity::Odd;
  const std::size_t len = 2 * n + (odd ? 1 : 0);
  std::vector<BigRational> p(len);
  for (auto& v : p) v = s.entry();
  p[0] = s.nonzero();
  BigRational rest = odd ? p[n] * p[n] : BigRational(0);
  for (std::size_t i = 1; i < n; ++i) rest += p[i] * p[len - 1 - i];
  p[len - 1] = (1 - rest) / p[0];
  return p;
}

}  // namespace

BigInt determinant(const IntMatrix& x) {
  const std::size_t n = x.size();
  require_square(x, n, "determinant");
  if (n == 0) return 1;
  IntMatrix a = x;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt last_column_expansion(const IntMatrix& x, std::size_t terms) {
  const std::size_t size = x.size();
  require_square(x, size, "last_column_expansion");
  if (terms > size) throw InvalidParameters("last_column_expansion: more terms than rows");
  BigInt sum = 0;
  for (std::size_t k = 1; k <= terms; ++k) {
    const BigInt term = determinant(minor(x, k - 1, size - 1)) * x[k - 1][size - 1];
    if ((size + k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

bool minor_identity(int n, const IntMatrix& x) {
  if (n < 1 || n > 5) throw InvalidParameters("minor_identity: n must be in 1..5");
  const auto size = static_cast<std::size_t>(n) + 1;
  require_square(x, size, "minor_identity");
  return last_column_expansion(x, size) == determinant(x);
}

BigInt symplectic_pairing(const std::vector<BigInt>& u, const std::vector<BigInt>& v) {
  if (u.size() != 4 || v.size() != 4) throw LengthMismatch("symplectic_pairing: vectors of length 4");
  return u[0] * v[3] - u[3] * v[0] + u[1] * v[2] - u[2] * v[1];
}

BigInt symplectic_expression(const IntMatrix& x) {
  require_square(x, 4, "symplectic_expression");
  auto w = [&](std::size_t i, std::size_t j) { return symplectic_pairing(x[i], x[j]); };
  return w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2);
}

bool symplectic_identity(const IntMatrix& x) { return symplectic_expression(x) == determinant(x); }

QuadricImage quadric_quotient_image(std::size_t n, const std::vector<BigRational>& point,
                                    QuadricParity parity) {
  if (n < 1) throw InvalidParameters("quadric_quotient_image: n must be >= 1");
  const bool odd = parity == QuadricParity::Odd;
  const std::size_t len = 2 * n + (odd ? 1 : 0);
  if (point.size() != len) {
    throw LengthMismatch("quadric_quotient_image: expected " + std::to_string(len) +
                         " coordinates, got " + std::to_string(point.size()));
  }
  QuadricImage out;
  BigRational quadric = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.z.push_back(point[i] * point[len - 1 - i]);
    quadric += point[i] * point[len - 1 - i];
  }
  BigRational image = 0;
  for (const auto& z : out.z) image += z;
  if (odd) {
    out.x = point[n];
    quadric += point[n] * point[n];
    image += *out.x * *out.x;
  }
  out.on_quadric = quadric == 1;
  out.on_image = image == 1;
  return out;
}

std::string_view identity_name(Identity which) {
  switch (which) {
    case Identity::Minor:
      return "minor";
    case Identity::Symplectic:
      return "symplectic";
    case Identity::Quadric:
      return "quadric";
  }
  return "";
}

std::optional<Identity> identity_from_name(std::string_view name) {
  for (Identity i : {Identity::Minor, Identity::Symplectic, Identity::Quadric}) {
    if (identity_name(i) == name) return i;
  }
  return std::nullopt;
}

TrialReport run_trials(Identity which, int n, std::size_t trials, std::uint64_t seed) {
  TrialReport report{which, n, trials, seed, {}};
  Sampler s(seed);
  switch (which) {
    case Identity::Minor: {
      if (n < 1 || n > 5) throw InvalidParameters("minor trials: n must be in 1..5");
      for (std::size_t t = 0; t < trials; ++t) {
        const IntMatrix x = s.matrix(static_cast<std::size_t>(n) + 1);
        if (!minor_identity(n, x)) report.failures.push_back({t, format_matrix(x)});
      }
      break;
    }
    case Identity::Symplectic:
      for (std::size_t t = 0; t < trials; ++t) {
        const IntMatrix x = s.matrix(4);
        if (!symplectic_identity(x)) report.failures.push_back({t, format_matrix(x)});
      }
      break;
    case Identity::Quadric: {
      if (n < 1) throw InvalidParameters("quadric trials: n must be >= 1");
      const auto k = static_cast<std::size_t>(n);
      for (QuadricParity parity : {QuadricParity::Even, QuadricParity::Odd}) {
        for (std::size_t t = 0; t < trials; ++t) {
          const auto p = quadric_point(s, k, parity);
          const auto img = quadric_quotient_image(k, p, parity);
          if (!img.on_quadric || !img.on_image) {
            report.failures.push_back(
                {t, (parity == QuadricParity::Odd ? "odd " : "even ") + format_point(p)});
          }
        }
      }
      break;
    }
  }
  return report;
}

std::string format_matrix(const IntMatrix& x) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < x[i].size(); ++j) os << (j ? ", " : "") << x[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace dcoset
