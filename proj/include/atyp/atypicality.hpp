#pragma once

#include <vector>

#include "atyp/root_system.hpp"

namespace atyp {

/// The (m+1)x(n+1) matrix A(Lambda) with entry (i,j) = (Lambda + rho, alpha_{ij})
/// over the odd positive roots, i in {-m..0} (rows) and j in {0..n} (columns).
struct AtypicalityMatrix {
  AlgebraSignature sig;
  RatMatrix entries;  // row i+m, column j

  const Rational& at(int i, int j) const { return entries(i + sig.m, j); }
  Rational& at(int i, int j) { return entries(i + sig.m, j); }

  std::vector<Root> zeros() const;
  std::string str() const;
};

AtypicalityMatrix atypicality_matrix(const Weight& lambda);

struct TypicalityClass {
  enum class Kind { Typical, SinglyAtypical, MultiplyAtypical };
  Kind kind = Kind::Typical;
  std::vector<Root> atypical_roots;  // empty / exactly one / two or more

  bool typical() const { return kind == Kind::Typical; }
  bool singly_atypical() const { return kind == Kind::SinglyAtypical; }
};

/// Requires an integral dominant weight.
TypicalityClass classify(const Weight& lambda);

struct WalkStep {
  Root root;       // the root subtracted or added at this step
  Weight weight;   // the weight after the step
};

struct WalkTrace {
  Weight start;
  Weight end;
  int direction = -1;  // -1 southwest (minus), +1 northeast (plus)
  std::vector<WalkStep> steps;
};

/// Southwest chain walk: repeatedly subtract the odd root at the unique zero
/// of the atypicality matrix (excluding the previously used position) until
/// none remains. The end weight is integral dominant.
WalkTrace lambda_minus(const Weight& lambda);

/// Northeast chain walk; mirror of lambda_minus with addition.
WalkTrace lambda_plus(const Weight& lambda);

/// Lambda^{(k)}: iterate lambda_plus (k > 0) or lambda_minus (k < 0).
Weight lambda_shift(const Weight& lambda, int k);

/// The list Lambda^{(i)}, ..., Lambda^{(j)} for i <= j.
std::vector<Weight> phi_segment(const Weight& lambda, int i, int j);

/// Lowest weight of the Kac module with highest weight Lambda^+:
/// w_0(Lambda^+) - 2 rho_1.
Weight lambda_low(const Weight& lambda);

}  // namespace atyp
