#include "atyp/atypicality.hpp"

#include <sstream>
#include <stdexcept>

namespace atyp {

std::vector<Root> AtypicalityMatrix::zeros() const {
  std::vector<Root> out;
  for (int i = -sig.m; i <= 0; ++i)
    for (int j = 0; j <= sig.n; ++j)
      if (at(i, j).is_zero()) out.emplace_back(i, j);
  return out;
}

std::string AtypicalityMatrix::str() const {
  std::ostringstream os;
  for (int i = -sig.m; i <= 0; ++i) {
    for (int j = 0; j <= sig.n; ++j) os << at(i, j).str() << (j < sig.n ? " " : "");
    if (i < 0) os << "\n";
  }
  return os.str();
}

AtypicalityMatrix atypicality_matrix(const Weight& lambda) {
  const AlgebraSignature& sig = lambda.signature();
  AtypicalityMatrix a;
  a.sig = sig;
  a.entries = RatMatrix::Constant(sig.m + 1, sig.n + 1, Rational(0));
  // Entry (i,j) = sum_{k=i}^0 a_k - sum_{k=1}^j a_k - i - j.
  for (int i = -sig.m; i <= 0; ++i) {
    for (int j = 0; j <= sig.n; ++j) {
      Rational v(-(long)i - (long)j);
      for (int k = i; k <= 0; ++k) v += lambda.label(k);
      for (int k = 1; k <= j; ++k) v -= lambda.label(k);
      a.at(i, j) = v;
    }
  }
  return a;
}

TypicalityClass classify(const Weight& lambda) {
  if (!lambda.is_integral_dominant())
    throw std::domain_error("classify: weight is not integral dominant");
  AtypicalityMatrix a = atypicality_matrix(lambda);
  TypicalityClass out;
  out.atypical_roots = a.zeros();
  if (out.atypical_roots.empty())
    out.kind = TypicalityClass::Kind::Typical;
  else if (out.atypical_roots.size() == 1)
    out.kind = TypicalityClass::Kind::SinglyAtypical;
  else
    out.kind = TypicalityClass::Kind::MultiplyAtypical;
  return out;
}

namespace {

WalkTrace chain_walk(const Weight& lambda, int direction) {
  if (!lambda.is_integral_dominant())
    throw std::domain_error("chain walk: weight is not integral dominant");
  TypicalityClass tc = classify(lambda);
  if (!tc.singly_atypical())
    throw std::domain_error("chain walk: weight is not singly atypical");

  WalkTrace trace;
  trace.start = lambda;
  trace.direction = direction;

  AtypicalityMatrix a = atypicality_matrix(lambda);
  Weight cur = lambda;
  Root last = tc.atypical_roots.front();
  bool have_last = false;
  const int max_steps = (lambda.signature().m + 1) * (lambda.signature().n + 1);

  while (true) {
    std::vector<Root> candidates;
    for (const Root& z : a.zeros())
      if (!have_last || z != last) candidates.push_back(z);
    if (candidates.empty()) break;
    if (candidates.size() > 1)
      throw std::runtime_error("chain walk: zero candidate is not unique at " + cur.str());
    if (static_cast<int>(trace.steps.size()) >= max_steps)
      throw std::runtime_error("chain walk: exceeded step cap at " + cur.str());

    const Root r = candidates.front();
    cur = add_root(cur, r, direction);
    // Incremental update: subtracting alpha_{ij} lowers row i by 1 and raises
    // column j by 1; adding does the opposite. Entry (i,j) itself stays fixed.
    for (int j = 0; j <= a.sig.n; ++j) a.at(r.i, j) += Rational(direction);
    for (int i = -a.sig.m; i <= 0; ++i) a.at(i, r.j) -= Rational(direction);
    const AtypicalityMatrix direct = atypicality_matrix(cur);
    for (int i = -a.sig.m; i <= 0; ++i)
      for (int j = 0; j <= a.sig.n; ++j)
        if (a.at(i, j) != direct.at(i, j))
          throw std::runtime_error("chain walk: incremental update disagrees with direct recomputation");
    trace.steps.push_back(WalkStep{r, cur});
    last = r;
    have_last = true;
  }

  if (!cur.is_integral_dominant())
    throw std::runtime_error("chain walk: end weight is not integral dominant: " + cur.str());
  trace.end = cur;
  return trace;
}

}  // namespace

WalkTrace lambda_minus(const Weight& lambda) { return chain_walk(lambda, -1); }
WalkTrace lambda_plus(const Weight& lambda) { return chain_walk(lambda, +1); }

Weight lambda_shift(const Weight& lambda, int k) {
  Weight cur = lambda;
  for (int s = 0; s < (k > 0 ? k : -k); ++s)
    cur = (k > 0 ? lambda_plus(cur) : lambda_minus(cur)).end;
  return cur;
}

std::vector<Weight> phi_segment(const Weight& lambda, int i, int j) {
  if (i > j) throw std::invalid_argument("phi_segment: i > j");
  std::vector<Weight> out;
  Weight cur = lambda_shift(lambda, i);
  out.push_back(cur);
  for (int k = i; k < j; ++k) {
    cur = lambda_plus(cur).end;
    out.push_back(cur);
  }
  return out;
}

Weight lambda_low(const Weight& lambda) {
  Weight plus = lambda_plus(lambda).end;
  Weight w0 = longest_weyl_image(plus);
  Weight shift = two_rho1_weight(lambda.signature());
  std::vector<Rational> labels;
  for (size_t k = 0; k < w0.labels().size(); ++k) labels.push_back(w0.labels()[k] - shift.labels()[k]);
  return Weight(lambda.signature(), std::move(labels));
}

}  // namespace atyp
