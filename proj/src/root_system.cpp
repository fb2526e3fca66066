#include "atyp/root_system.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace atyp {

AlgebraSignature::AlgebraSignature(int m_, int n_) : m(m_), n(n_) {
  if (m < 0 || n < 0) throw std::invalid_argument("AlgebraSignature: negative block size");
  if (m == n) throw std::invalid_argument("AlgebraSignature: equal block sizes sl(p/p) are not supported");
}

std::string AlgebraSignature::str() const {
  std::ostringstream os;
  os << "sl(" << (m + 1) << "/" << (n + 1) << ")";
  return os.str();
}

std::string Root::str() const {
  std::ostringstream os;
  os << "alpha(" << i << "," << j << ")";
  return os.str();
}

Weight::Weight(AlgebraSignature sig, std::vector<Rational> labels) : sig_(sig), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != sig_.rank())
    throw std::invalid_argument("Weight: expected " + std::to_string(sig_.rank()) + " labels");
}

bool Weight::is_integral_dominant() const {
  for (int i = -sig_.m; i <= sig_.n; ++i) {
    if (i == 0) continue;
    const Rational& a = label(i);
    if (!a.is_integer() || a.sign() < 0) return false;
  }
  return true;
}

Weight Weight::operator-() const {
  std::vector<Rational> neg;
  neg.reserve(labels_.size());
  for (const auto& a : labels_) neg.push_back(-a);
  return Weight(sig_, std::move(neg));
}

bool Weight::operator<(const Weight& o) const {
  if (sig_ != o.sig_) return sig_ < o.sig_;
  for (size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] != o.labels_[k]) return labels_[k] < o.labels_[k];
  }
  return false;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << sig_.str() << " [";
  for (int i = -sig_.m; i <= -1; ++i) {
    os << label(i).str();
    if (i < -1) os << ",";
  }
  os << ";" << label(0).str() << ";";
  for (int i = 1; i <= sig_.n; ++i) {
    os << label(i).str();
    if (i < sig_.n) os << ",";
  }
  os << "]";
  return os.str();
}

Weight zero_weight(const AlgebraSignature& sig) {
  return Weight(sig, std::vector<Rational>(static_cast<size_t>(sig.rank()), Rational(0)));
}

namespace {

void check_index(const AlgebraSignature& sig, int i, const char* what) {
  if (i < -sig.m || i > sig.n) throw std::out_of_range(std::string(what) + ": index out of range");
}

}  // namespace

int simple_root_pairing(const AlgebraSignature& sig, int p, int q) {
  check_index(sig, p, "simple_root_pairing");
  check_index(sig, q, "simple_root_pairing");
  if (q == 0) {
    // h_0 = E_{m+1,m+1} + E_{m+2,m+2}
    if (p == 1) return 1;
    if (p == -1) return -1;
    return 0;
  }
  if (p == q) return 2;
  if (p == q + 1 || p == q - 1) return -1;
  return 0;
}

int inner_product(const AlgebraSignature& sig, int i, int j) {
  check_index(sig, i, "inner_product");
  check_index(sig, j, "inner_product");
  if (i == j) {
    if (i < 0) return 2;
    if (i > 0) return -2;
    return 0;
  }
  int d = i - j;
  if (d < 0) d = -d;
  if (d >= 2) return 0;
  if (i <= 0 && j <= 0) return -1;
  return 1;  // |i-j| == 1 with i,j >= 0
}

Rational inner_product(const Weight& lambda, int i) {
  check_index(lambda.signature(), i, "inner_product");
  if (i > 0) return -lambda.label(i);
  return lambda.label(i);
}

Rational inner_product(const Weight& lambda, const Root& r) {
  Rational acc(0);
  for (int k = r.i; k <= r.j; ++k) acc += inner_product(lambda, k);
  return acc;
}

Weight add_root(const Weight& lambda, const Root& r, int sign) {
  const AlgebraSignature& sig = lambda.signature();
  check_index(sig, r.i, "add_root");
  check_index(sig, r.j, "add_root");
  if (r.i > r.j) throw std::invalid_argument("add_root: i > j");
  if (sign != 1 && sign != -1) throw std::invalid_argument("add_root: sign must be +-1");
  Weight out = lambda;
  for (int q = -sig.m; q <= sig.n; ++q) {
    long val = 0;
    for (int k = r.i; k <= r.j; ++k) val += simple_root_pairing(sig, k, q);
    if (val != 0) out.set_label(q, out.label(q) + Rational(sign * val));
  }
  return out;
}

EpsDeltaCoords to_eps_delta(const Weight& lambda) {
  const AlgebraSignature& sig = lambda.signature();
  EpsDeltaCoords c;
  c.sig = sig;
  c.x.assign(static_cast<size_t>(sig.m + 1), Rational(0));
  c.y.assign(static_cast<size_t>(sig.n + 1), Rational(0));
  // gauge y_{n+1} = 0, then y_j = a_j + y_{j+1} downward
  for (int j = sig.n; j >= 1; --j) c.y[static_cast<size_t>(j - 1)] = lambda.label(j) + c.y[static_cast<size_t>(j)];
  // x_{m+1} + y_1 = a_0
  c.x[static_cast<size_t>(sig.m)] = lambda.label(0) - c.y[0];
  // x_{m+i+1} - x_{m+i+2} = a_i for i < 0
  for (int i = -1; i >= -sig.m; --i)
    c.x[static_cast<size_t>(sig.m + i)] = lambda.label(i) + c.x[static_cast<size_t>(sig.m + i + 1)];
  return c;
}

Weight from_eps_delta(const EpsDeltaCoords& c) {
  const AlgebraSignature& sig = c.sig;
  std::vector<Rational> labels(static_cast<size_t>(sig.rank()), Rational(0));
  Weight out(sig, labels);
  for (int i = -sig.m; i <= -1; ++i)
    out.set_label(i, c.x[static_cast<size_t>(sig.m + i)] - c.x[static_cast<size_t>(sig.m + i + 1)]);
  out.set_label(0, c.x[static_cast<size_t>(sig.m)] + c.y[0]);
  for (int j = 1; j <= sig.n; ++j)
    out.set_label(j, c.y[static_cast<size_t>(j - 1)] - c.y[static_cast<size_t>(j)]);
  return out;
}

Weight longest_weyl_image(const Weight& lambda) {
  EpsDeltaCoords c = to_eps_delta(lambda);
  std::reverse(c.x.begin(), c.x.end());
  std::reverse(c.y.begin(), c.y.end());
  return from_eps_delta(c);
}

namespace {

EpsDeltaCoords gauge_normalize(EpsDeltaCoords c) {
  // (x, y) ~ (x + t, y - t): pick t = y_{n+1} so the last y vanishes.
  Rational t = c.y.back();
  for (auto& v : c.x) v += t;
  for (auto& v : c.y) v -= t;
  return c;
}

}  // namespace

EpsDeltaCoords rho_vector_raw(const AlgebraSignature& sig, RhoKind kind) {
  EpsDeltaCoords c;
  c.sig = sig;
  c.x.assign(static_cast<size_t>(sig.m + 1), Rational(0));
  c.y.assign(static_cast<size_t>(sig.n + 1), Rational(0));
  Rational half(1, 2);
  auto add_root_coords = [&](const Root& r, const Rational& coeff) {
    // alpha_{ij} = (coord functional at position m+i+1) - (at position m+j+2)
    int a = sig.m + r.i;      // 0-based position of m+i+1
    int b = sig.m + r.j + 1;  // 0-based position of m+j+2
    if (a <= sig.m) c.x[static_cast<size_t>(a)] += coeff; else c.y[static_cast<size_t>(a - sig.m - 1)] += coeff;
    if (b <= sig.m) c.x[static_cast<size_t>(b)] -= coeff; else c.y[static_cast<size_t>(b - sig.m - 1)] -= coeff;
  };
  for (const Root& r : positive_roots(sig)) {
    bool odd = r.is_odd();
    if (kind == RhoKind::Rho0 && odd) continue;
    if (kind == RhoKind::Rho1 && !odd) continue;
    Rational coeff = half;
    if (kind == RhoKind::Rho && odd) coeff = -half;  // rho = rho_0 - rho_1
    add_root_coords(r, coeff);
  }
  return c;
}

EpsDeltaCoords rho_vector(const AlgebraSignature& sig, RhoKind kind) {
  return gauge_normalize(rho_vector_raw(sig, kind));
}

Weight rho_weight(const AlgebraSignature& sig, RhoKind kind) {
  return from_eps_delta(rho_vector_raw(sig, kind));
}

Weight two_rho1_weight(const AlgebraSignature& sig) {
  Weight r1 = rho_weight(sig, RhoKind::Rho1);
  std::vector<Rational> doubled;
  for (const auto& a : r1.labels()) doubled.push_back(a + a);
  return Weight(sig, doubled);
}

namespace {

// Cached solver for the simple-root coefficient systems, one per signature.
const Eigen::FullPivLU<RatMatrix>& pairing_lu(const AlgebraSignature& sig) {
  static std::map<AlgebraSignature, Eigen::FullPivLU<RatMatrix>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(sig);
  if (it == cache.end()) {
    const int r = sig.rank();
    RatMatrix a(r, r);
    // column p holds the labels of alpha_p: a(q, p) = alpha_p(h_q)
    for (int p = -sig.m; p <= sig.n; ++p)
      for (int q = -sig.m; q <= sig.n; ++q)
        a(q + sig.m, p + sig.m) = Rational(simple_root_pairing(sig, p, q));
    it = cache.emplace(sig, Eigen::FullPivLU<RatMatrix>(a)).first;
  }
  return it->second;
}

}  // namespace

RatVector root_coefficients(const Weight& lambda, const Weight& mu) {
  if (lambda.signature() != mu.signature())
    throw std::invalid_argument("root_coefficients: signature mismatch");
  const AlgebraSignature& sig = lambda.signature();
  RatVector d(sig.rank());
  for (int q = -sig.m; q <= sig.n; ++q) d(q + sig.m) = lambda.label(q) - mu.label(q);
  return pairing_lu(sig).solve(d);
}

Ordering compare(const Weight& lambda, const Weight& mu) {
  if (lambda.signature() != mu.signature()) return Ordering::Incomparable;
  RatVector a = root_coefficients(lambda, mu);
  for (Index k = 0; k < a.size(); ++k) {
    if (a(k).is_zero()) continue;
    return a(k).sign() > 0 ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

bool is_dominant(const Weight& lambda) { return lambda.is_integral_dominant(); }

std::vector<Root> positive_roots(const AlgebraSignature& sig) {
  std::vector<Root> out;
  for (int i = -sig.m; i <= sig.n; ++i)
    for (int j = i; j <= sig.n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<Root> odd_positive_roots(const AlgebraSignature& sig) {
  std::vector<Root> out;
  for (int i = -sig.m; i <= 0; ++i)
    for (int j = 0; j <= sig.n; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace atyp
