#pragma once

#include "gitstrata/blowup.hpp"
#include "gitstrata/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gitstrata::sheaf {

/// Direct sum of line bundles on the projective line, the splitting
/// type recorded as a degree multiset. Every bundle there is of this
/// shape, which is what makes this layer an exactly computable oracle.
struct SplitBundle {
  std::vector<long long> degrees;  // stored descending

  explicit SplitBundle(std::vector<long long> d);
  static SplitBundle parse(const std::string& text);  // "2,0,0"
  std::string to_string() const;
  size_t rank() const { return degrees.size(); }
  bool operator==(const SplitBundle& o) const { return degrees == o.degrees; }
};

/// Hilbert polynomial: sum of (t + a_i + 1) over the summands.
HilbertPolynomial hilbert_poly(const SplitBundle& b);

struct HnPiece {
  long long slope;
  SplitBundle piece;
};

struct HnResult {
  std::vector<HnPiece> pieces;  // strictly decreasing slopes
  std::vector<HilbertPolynomial> type;
};

/// Canonical filtration: group the summands by degree, descending.
HnResult hn_filtration(const SplitBundle& b);

/// dim Hom(from, to) = sum over summand pairs of max(0, a - b + 1).
long long hom_dim(const SplitBundle& from, const SplitBundle& to);
long long end_dim(const SplitBundle& b);

/// A sheaf of HN length 2, reduced to its discrete data: the type, the
/// subquotients (concrete bundles or abstract stable markers), whether
/// the filtration splits, dim Hom(F_2, F_1), and stability of the
/// subquotients. Non-split sheaves are abstract records; the relevant
/// extension groups vanish on the projective line, so no concrete
/// non-split witness exists there.
struct Length2Sheaf {
  HNType tau;
  std::optional<SplitBundle> gr1, gr2;
  bool is_split;
  long long hom;  // dim Hom(F_2, F_1)
  bool summands_stable;

  /// Concrete, hence split, sheaf gr1 + gr2; tau and hom computed.
  static Length2Sheaf concrete(const SplitBundle& first, const SplitBundle& second);
  /// Abstract record with caller-supplied discrete data.
  static Length2Sheaf abstract_record(HNType tau, long long hom, bool is_split,
                                      bool summands_stable);
};

/// Non-split with stable subquotients.
bool is_tau_stable(const Length2Sheaf& s);
/// Non-split, full stop.
bool is_indecomposable(const Length2Sheaf& s);

struct StabDims {
  long long ustab_dim;
  std::optional<long long> end_dim_claim;  // hom + 1 when tau-stable, absent otherwise
};

StabDims stab_dims(const Length2Sheaf& s);

/// Cell graph for the blow-up simulator: one cell per (hom, split?)
/// class, non-split cells flowing to the split cell of the same hom
/// dimension. All records must share tau.
std::vector<StratumCell> to_blowup_cells(const std::vector<Length2Sheaf>& records);

}  // namespace gitstrata::sheaf
