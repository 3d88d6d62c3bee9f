#pragma once

#include <optional>
#include <vector>

#include "twoway/bounds.hpp"
#include "twoway/flow.hpp"
#include "twoway/loops.hpp"
#include "twoway/run.hpp"

namespace twoway {

struct ForestNode {
  int x1 = 0, x2 = 0;  // interval covered by the node
  Effect effect;
  std::vector<int> children;  // indices into Forest::nodes, left to right
  int height = 1;             // a leaf has height 1
};

struct Forest {
  std::vector<int> positions;  // the base set X, increasing
  std::vector<ForestNode> nodes;
  int root = -1;
  BigInt height_bound;  // 3 * emax

  int height() const { return root < 0 ? 0 : nodes[root].height; }
};

// Leaves are the intervals between consecutive elements of X. Each round
// merges maximal stretches of equal idempotent effects, else pairs nodes.
// Throws std::invalid_argument if |X| < 2 or a product is bottom.
Forest build_forest(const Transducer& t, const Run& r, const std::vector<int>& positions);

// Partition, leaf adjacency, product law, the idempotent rule for nodes with
// more than two children, and the height bound.
bool validate_forest(const Forest& f, const Run& r);

struct ExtractionResult {
  Loop loop;
  Component component;
  Location anchor;
  int anchor_index = 0;
  Word trace_output;
  bool from_forest = true;  // false when found by the exhaustive fallback
};

// Induced output of r on Z = {locations with run index in [k1,k2] and
// position in [x1,x2]}.
Word zone_output(const Run& r, int x1, int x2, int k1, int k2);

// When |zone_output| > bound, looks for an idempotent loop strictly inside
// (x1,x2) with an anchor strictly inside (k1,k2) whose trace outputs
// something. Returns nothing when the output is at most bound.
std::optional<ExtractionResult> extract_idempotent_anchor(const Transducer& t, const Run& r, int x1, int x2, int k1,
                                                          int k2, long bound);

// Independent check of the three conditions on a result.
bool verify_extraction(const Run& r, int x1, int x2, int k1, int k2, const ExtractionResult& e);

}  // namespace twoway
