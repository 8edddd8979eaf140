#pragma once

#include "gitstrata/epsweight.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstrata {

/// One cell of a finite decomposition of the basin geometry: the
/// lambda-pairings occurring on it, its unipotent-stabiliser dimension,
/// the cell containing its lambda-limit, and closure relations.
struct StratumCell {
  std::string id;
  std::string label;
  std::vector<EpsWeight> lambda_weights;
  int ustab_dim = 0;
  std::string flows_to;
  std::vector<std::string> closed_in;  // ids of cells whose closure contains this cell
  bool exceptional = false;
};

/// Raised when a step is requested on a state that already satisfies
/// the constant-stabiliser condition.
class StepNotApplicable : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when the cell model contradicts the theory it encodes (the
/// maximal stabiliser dimension failed to drop across a blow-up).
class ModelInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct StepRecord {
  int step = 0;
  std::string case_tag;  // "case-1" or "case-2"
  std::vector<std::string> centre_ids;
  std::vector<std::string> new_exceptional_ids;
  std::optional<EpsWeight> r_min;  // case-2 only
  int d_max_after = 0;
};

/// State machine for the partial-desingularisation bookkeeping: blow up
/// the maximal-stabiliser locus, track the minimal weight space and its
/// basin, stop once the stabiliser dimension is constant there. States
/// are immutable; step() returns the successor.
class BlowupState {
public:
  /// Validates the flow graph (existing targets, limits must reach a
  /// fixed cell, weights non-increasing along flows) and computes the
  /// minimal weight cells and d_min/d_max over their basin.
  static BlowupState init(std::vector<StratumCell> cells);

  bool satisfied() const { return d_max_ == d_min_; }
  int d_min() const { return d_min_; }
  int d_max() const { return d_max_; }
  int step_count() const { return step_count_; }
  const std::vector<std::string>& zmin_ids() const { return zmin_ids_; }
  const std::vector<StepRecord>& trace() const { return trace_; }
  const std::vector<StratumCell>& cells() const { return cells_; }
  const std::set<std::string>& removed() const { return removed_; }

  /// Every cell has the stabiliser dimension of its limit.
  bool p_preserves() const;

  /// Non-exceptional cells in the basin of the current minimal cells:
  /// the model of the quotientable locus.
  std::vector<std::string> survivors() const;

  BlowupState step() const;

  /// Iterates step() until the constant-dimension condition holds.
  BlowupState run() const;

private:
  BlowupState() = default;
  void recompute();
  const StratumCell* find(const std::string& id) const;
  std::string terminal_flow(const std::string& id) const;
  bool active(const std::string& id) const { return removed_.count(id) == 0; }
  std::vector<std::string> basin() const;

  std::vector<StratumCell> cells_;
  std::set<std::string> removed_;
  std::vector<std::string> zmin_ids_;
  int d_min_ = 0;
  int d_max_ = 0;
  int step_count_ = 0;
  std::vector<StepRecord> trace_;
};

/// Weight clusters after blowing up along a centre spanned by a subset
/// of coordinates, for a symbolically large linearisation power: every
/// weight w_i spawns the cluster { w_i + eps * w_j : j off the centre }.
std::vector<EpsWeight> cluster_weights(const std::vector<Rational>& weights,
                                       const std::set<size_t>& centre);

}  // namespace gitstrata
