#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "atyp/atypicality.hpp"

namespace atyp {

struct ChainNode {
  std::string id;
  int depth = 0;  // node weight is base^{(-depth)}; leftmost nodes have depth 0
};

enum class Arrow { TowardRight, TowardLeft };

/// A link joins a left node (depth d) to a right node (depth d+1). The arrow
/// records the derivation sense: TowardRight means the right node lies in
/// G_{-1}U(G^-) of the left one, TowardLeft means the left node lies in
/// G_{+1}U(G_{+1}) of the right one.
struct ChainLink {
  std::string left;
  std::string right;
  Arrow arrow = Arrow::TowardRight;
};

/// The classification datum (C, Lambda, x): a constrained diagram over the
/// orbit of a singly atypical base weight plus the circle scalar x.
struct Chain {
  Weight base;
  Rational x;
  std::vector<ChainNode> nodes;
  std::vector<ChainLink> links;

  const ChainNode& node(const std::string& id) const;
  bool has_node(const std::string& id) const;
  int degree(const std::string& id) const;
  Weight weight_of(const std::string& id) const;  // lambda_shift(base, -depth)
  bool is_circle() const;                         // connected 2-regular cycle
};

enum class ChainClause {
  NodeShape,        // degree or local shape outside the four allowed forms
  ForkDownDown,     // one vector deriving two lower primitives
  ForkUpUp,         // one vector deriving two higher primitives
  RunDownDown,      // derived from the left and deriving to the right
  RunUpUp,          // derived from the right and deriving to the left
  DerivationCycle,
  Disconnected,
  LinkDepth,        // link endpoints not at consecutive depths
  LeftmostDepth,    // a node without left link not at depth 0
  ScalarEndpoints,  // x = 0 iff the diagram is a line
  BaseClass,        // base weight not integral dominant singly atypical
  Structure         // malformed input (dangling ids, duplicate links, ...)
};

std::string clause_name(ChainClause c);

struct ChainViolation {
  ChainClause clause;
  std::string detail;
};

struct ValidationResult {
  std::vector<ChainViolation> reasons;
  bool ok() const { return reasons.empty(); }
  bool has(ChainClause c) const;
};

ValidationResult validate_chain(const Chain& c);

/// Nodes of degree <= 1; empty exactly for circles.
std::set<std::string> endpoints(const Chain& c);

enum class BreakMode { BottomsOnly, TopsAndBottoms };

struct PieceType {
  enum class Variant { FullZigzag, TopRemoved, BottomRemoved, BothRemoved };
  Variant variant = Variant::FullZigzag;
  int shift = 0;   // piece base weight = base^{(shift)} of the original chain
  int length = 0;  // the k of the matching zigzag family
};

struct ChainPiece {
  Chain chain;                                   // a standalone valid chain
  PieceType type;                                // only set in TopsAndBottoms mode
  std::map<std::string, std::string> origin;     // piece node id -> original node id
};

struct BreakResult {
  std::vector<ChainPiece> pieces;
  // For every split node: the two created halves as (piece index, node id).
  struct Split {
    std::string original;
    bool top = false;  // top point (both arrows out) vs bottom point
    std::pair<int, std::string> first;
    std::pair<int, std::string> second;
  };
  std::vector<Split> splits;
};

BreakResult break_pieces(const Chain& c, BreakMode mode);

/// Re-glue the output of break_pieces; the result is isomorphic to the input.
Chain reassemble(const BreakResult& broken, const Rational& x);

/// Isomorphism: bijection preserving depths, weights, arrows, base and x.
bool chain_iso(const Chain& a, const Chain& b);
std::optional<std::map<std::string, std::string>> chain_iso_witness(const Chain& a, const Chain& b);

/// Anti-isomorphism: arrow-reversing bijection with the lowest-weight
/// condition on the rightmost elements of the target and x = x'.
bool chain_anti_iso(const Chain& a, const Chain& b);

/// Deterministic representative: canonical node names and ordering.
Chain canonicalize(const Chain& c);

/// All valid chains with the given base, up to isomorphism; circles take
/// their scalars from x_samples (nonzero entries only).
std::vector<Chain> enumerate_chains(const Weight& base, int max_nodes,
                                    const std::vector<Rational>& x_samples);

}  // namespace atyp
