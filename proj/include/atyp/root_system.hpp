#pragma once

#include <string>
#include <vector>

#include "atyp/linalg.hpp"
#include "atyp/rational.hpp"

namespace atyp {

/// The algebra sl(m+1/n+1). Equal block sizes are rejected: the supertrace
/// functional degenerates there and the h_i no longer form a Cartan basis.
struct AlgebraSignature {
  int m = 0;
  int n = 0;

  AlgebraSignature() = default;
  AlgebraSignature(int m_, int n_);

  int rank() const { return m + n + 1; }          // Cartan dimension
  int matrix_size() const { return m + n + 2; }   // defining representation
  int odd_count() const { return (m + 1) * (n + 1); }

  bool operator==(const AlgebraSignature& o) const { return m == o.m && n == o.n; }
  bool operator!=(const AlgebraSignature& o) const { return !(*this == o); }
  bool operator<(const AlgebraSignature& o) const { return m != o.m ? m < o.m : n < o.n; }

  /// "sl(p/q)" with p = m+1, q = n+1.
  std::string str() const;
};

/// A positive root alpha_{ij} = alpha_i + ... + alpha_j, -m <= i <= j <= n.
/// Simple roots are the diagonal case i == j.
struct Root {
  int i = 0;
  int j = 0;

  Root() = default;
  Root(int i_, int j_) : i(i_), j(j_) {}

  bool is_simple() const { return i == j; }
  bool is_odd() const { return i <= 0 && 0 <= j; }

  bool operator==(const Root& o) const { return i == o.i && j == o.j; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  bool operator<(const Root& o) const { return i != o.i ? i < o.i : j < o.j; }

  std::string str() const;
};

/// A point of H* in Dynkin coordinates a_i = value on h_i, i = -m..n.
class Weight {
 public:
  Weight() = default;
  Weight(AlgebraSignature sig, std::vector<Rational> labels);

  const AlgebraSignature& signature() const { return sig_; }

  const Rational& label(int i) const { return labels_.at(static_cast<size_t>(i + sig_.m)); }
  void set_label(int i, Rational v) { labels_.at(static_cast<size_t>(i + sig_.m)) = std::move(v); }
  const std::vector<Rational>& labels() const { return labels_; }

  /// a_i a non-negative integer for all i != 0; a_0 is unconstrained.
  bool is_integral_dominant() const;

  Weight operator-() const;

  bool operator==(const Weight& o) const { return sig_ == o.sig_ && labels_ == o.labels_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const;  // lexicographic; for container keys only

  /// "sl(p/q) [a_{-m},..,a_{-1};a_0;a_1,..,a_n]"
  std::string str() const;

 private:
  AlgebraSignature sig_;
  std::vector<Rational> labels_;
};

Weight zero_weight(const AlgebraSignature& sig);

/// Diagonal-functional coordinates: x over the even block, y over the odd
/// block, gauge-normalized to y_{n+1} = 0.
struct EpsDeltaCoords {
  AlgebraSignature sig;
  std::vector<Rational> x;  // size m+1
  std::vector<Rational> y;  // size n+1
};

/// alpha_p(h_q), the evaluation of a simple root on a Cartan generator.
int simple_root_pairing(const AlgebraSignature& sig, int p, int q);

/// The bilinear form on simple roots: (alpha_i, alpha_j).
int inner_product(const AlgebraSignature& sig, int i, int j);

/// (lambda, alpha_i) = lambda(h_i) for i <= 0 and -lambda(h_i) for i > 0.
Rational inner_product(const Weight& lambda, int i);

/// (lambda, alpha_{ij}) by linearity.
Rational inner_product(const Weight& lambda, const Root& r);

/// lambda + sign * alpha_{ij} in Dynkin coordinates.
Weight add_root(const Weight& lambda, const Root& r, int sign);

EpsDeltaCoords to_eps_delta(const Weight& lambda);
Weight from_eps_delta(const EpsDeltaCoords& c);

/// Image under the longest Weyl element of the even part: reverses each of
/// the x- and y-blocks. An involution.
Weight longest_weyl_image(const Weight& lambda);

enum class RhoKind { Rho0, Rho1, Rho };

/// Half-sums of positive even/odd roots (gauge-normalized coordinates).
EpsDeltaCoords rho_vector(const AlgebraSignature& sig, RhoKind kind);

/// Same as rho_vector but without gauge normalization (the raw root sums).
EpsDeltaCoords rho_vector_raw(const AlgebraSignature& sig, RhoKind kind);

/// rho as a weight in Dynkin coordinates.
Weight rho_weight(const AlgebraSignature& sig, RhoKind kind);

/// 2*rho_1 as a weight (sum of all positive odd roots).
Weight two_rho1_weight(const AlgebraSignature& sig);

enum class Ordering { Greater, Less, Equal, Incomparable };

/// The well order: lambda > mu iff lambda - mu = sum a_i alpha_i with the
/// first nonzero a_i positive. Incomparable only on signature mismatch.
Ordering compare(const Weight& lambda, const Weight& mu);

/// Coefficients a_i expressing lambda - mu over the simple roots.
RatVector root_coefficients(const Weight& lambda, const Weight& mu);

bool is_dominant(const Weight& lambda);

std::vector<Root> positive_roots(const AlgebraSignature& sig);
std::vector<Root> odd_positive_roots(const AlgebraSignature& sig);

}  // namespace atyp
