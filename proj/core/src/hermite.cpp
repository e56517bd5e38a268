#include "snspec/hermite.hpp"

#include <atomic>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>

#include "snspec/errors.hpp"

namespace snspec {

namespace {

// Bivariate integer polynomial on a dense (power of u) x (power of w) grid.
using Grid = std::vector<std::vector<BigInt>>;

Grid make_grid(std::size_t nu, std::size_t nw) {
  return Grid(nu, std::vector<BigInt>(nw));
}

Grid multiply(const Grid& x, const Grid& y) {
  Grid out = make_grid(x.size() + y.size() - 1, x[0].size() + y[0].size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < x[i].size(); ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        for (std::size_t l = 0; l < y[j].size(); ++l) {
          if (y[j][l] == 0) continue;
          out[i + j][k + l] += x[i][k] * y[j][l];
        }
      }
    }
  }
  return out;
}

std::vector<BigInt> hermite_int_coeffs(int n) {
  std::vector<BigInt> prev{1};  // H_0
  if (n == 0) return prev;
  std::vector<BigInt> cur{0, 2};  // H_1
  for (int k = 1; k < n; ++k) {
    std::vector<BigInt> next(static_cast<std::size_t>(k) + 2);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2 * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::atomic<int> g_ceiling{14};

}  // namespace

int p_poly_ceiling() { return g_ceiling.load(); }

void set_p_poly_ceiling(int n) {
  if (n < 0) throw DomainError("ceiling must be non-negative");
  g_ceiling.store(n);
}

Polynomial hermite(int n) {
  if (n < 0) throw DomainError("hermite: n must be non-negative");
  auto ints = hermite_int_coeffs(n);
  std::vector<Rational> coeffs;
  coeffs.reserve(ints.size());
  for (auto& c : ints) coeffs.emplace_back(std::move(c));
  return Polynomial(std::move(coeffs));
}

EvenPolynomial p_poly(int n) {
  if (n < 0) throw DomainError("p_poly: n must be non-negative");
  if (n > g_ceiling.load()) {
    std::clog << "snspec: constructing P_n for n = " << n
              << " above the cost ceiling " << g_ceiling.load()
              << "; construction time grows super-proportionally with n\n";
  }

  const auto h = hermite_int_coeffs(n);
  const std::size_t N = static_cast<std::size_t>(n);

  // Binomials up to n.
  std::vector<std::vector<BigInt>> binom(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    binom[k].resize(k + 1);
    binom[k][0] = binom[k][k] = 1;
    for (std::size_t j = 1; j < k; ++j) {
      binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
    }
  }

  // A(u, w) = H_n(u + w); with w = z/2 every coefficient stays an integer.
  Grid A = make_grid(N + 1, N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    if (h[k] == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      A[j][k - j] += h[k] * binom[k][j];
    }
  }

  // S = A^2; H_n(u - w)^2 is S with odd w-powers negated, so one more
  // product gives Q = H_n(u+w)^2 H_n(u-w)^2.
  Grid S = multiply(A, A);
  Grid T = S;
  for (std::size_t j = 0; j < T.size(); ++j) {
    for (std::size_t l = 1; l < T[j].size(); l += 2) T[j][l] = -T[j][l];
  }
  Grid Q = multiply(S, T);  // (4n+1) x (4n+1)

  // Integrate over u against exp(-2u^2): odd powers vanish and
  // u^{2k} -> (2k-1)!!/4^k times a sqrt(pi/2) that cancels against the
  // normalization. Collect numerators over the common denominator 4^{2n}.
  std::vector<BigInt> dfact(2 * N + 1);  // dfact[k] = (2k-1)!!
  dfact[0] = 1;
  for (std::size_t k = 1; k <= 2 * N; ++k) dfact[k] = dfact[k - 1] * (2 * k - 1);
  std::vector<BigInt> four_pow(2 * N + 1);
  four_pow[0] = 1;
  for (std::size_t k = 1; k <= 2 * N; ++k) four_pow[k] = four_pow[k - 1] * 4;

  BigInt norm = 1;  // (2^n n!)^2
  for (std::size_t k = 1; k <= N; ++k) norm *= 2 * k;
  norm *= norm;

  std::vector<Rational> coeffs(4 * N + 1, Rational(0));
  BigInt two_pow_l = 1;
  for (std::size_t l = 0; l <= 4 * N; ++l) {
    BigInt num = 0;
    for (std::size_t k = 0; k <= 2 * N; ++k) {
      const BigInt& q = Q[2 * k][l];
      if (q != 0) num += q * dfact[k] * four_pow[2 * N - k];
    }
    if (l % 2 == 1 && num != 0) {
      throw Error("p_poly internal error: odd coefficient survived at power " +
                  std::to_string(l));
    }
    // w^l = (z/2)^l contributes the 2^l.
    coeffs[l] = Rational(num, four_pow[2 * N] * two_pow_l * norm);
    two_pow_l *= 2;
  }

  EvenPolynomial result{Polynomial(std::move(coeffs))};
  if (result.degree() != 4 * n) {
    throw Error("p_poly internal error: degree mismatch for n = " + std::to_string(n));
  }
  if (!(result.coefficient(0) > 0)) {
    throw Error("p_poly internal error: P_n(0) must be positive");
  }
  return result;
}

const PPolyTables& p_poly_cached(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PPolyTables>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto exact = p_poly(n);
    auto coeffs = exact.double_coefficients();
    it = cache.emplace(n, std::make_unique<PPolyTables>(PPolyTables{
                              std::move(exact), std::move(coeffs)}))
             .first;
  }
  return *it->second;
}

}  // namespace snspec
