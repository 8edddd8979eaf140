#pragma once

#include "gitstrata/qvector.hpp"

#include <utility>
#include <vector>

namespace gitstrata {

/// Position of the origin relative to a convex hull. Interior is taken
/// with respect to the ambient space: a hull that does not affinely
/// span the space never reports Interior.
enum class HullPosition { Outside, Boundary, Interior };

const char* to_string(HullPosition p);

/// Exact hull-membership test for the origin, decided by simplex with
/// Bland's rule (phase one for membership, one auxiliary LP per point
/// for strict positivity of some barycentric representation).
HullPosition origin_position(const std::vector<QVector>& points);

struct MinNormResult {
  QVector point;
  Rational norm_sq;
  /// Convex combination over input indices witnessing point in the hull.
  std::vector<std::pair<size_t, Rational>> combination;
};

/// Unique closest point of conv(points) to the origin under ip,
/// computed by Wolfe's active-set iteration over exact rationals.
/// Entering-point ties are broken by lexicographic coordinate order.
MinNormResult min_norm_point(const std::vector<QVector>& points, const InnerProduct& ip);

}  // namespace gitstrata
