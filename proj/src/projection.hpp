#pragma once

#include <cstdint>
#include <vector>

#include "cartfact/color_partition.hpp"
#include "cartfact/product.hpp"

namespace cartfact::detail {

/// Projections of one vertex into the unit layers of all current classes in
/// O(number of colors): the code of p_X(v) is the root's code plus the
/// coordinate offsets of v on the colors of X.
class Projector {
 public:
  explicit Projector(const Coordinatization& coords)
      : coords_(coords),
        root_code_(coords.code_of(coords.root())),
        offset_(coords.num_factors(), 0),
        seen_(coords.num_factors(), 0) {}

  /// Loads v; classes are read from `partition`.
  void load(VertexId v, const ColorPartition& partition) {
    for (ClassId c : touched_) {
      offset_[c] = 0;
      seen_[c] = 0;
    }
    touched_.clear();
    const auto cv = coords_.coords(v);
    const auto cr = coords_.coords(coords_.root());
    for (std::size_t j = 0; j < cv.size(); ++j) {
      if (cv[j] == cr[j]) continue;
      const ClassId c = partition.class_of(static_cast<ColorId>(j));
      offset_[c] += (static_cast<std::int64_t>(cv[j]) - cr[j]) * static_cast<std::int64_t>(coords_.stride(j));
      if (!seen_[c]) {
        seen_[c] = 1;
        touched_.push_back(c);
      }
    }
  }

  /// Code of the projection of the loaded vertex into the unit layer of class c.
  std::uint64_t code(ClassId c) const noexcept { return static_cast<std::uint64_t>(root_code_ + offset_[c]); }
  VertexId vertex(ClassId c) const noexcept { return coords_.vertex_at_code(code(c)); }

  /// Classes on which the loaded vertex differs from the root; every other
  /// class projects it onto the root.
  const std::vector<ClassId>& differing_classes() const noexcept { return touched_; }

 private:
  const Coordinatization& coords_;
  std::int64_t root_code_;
  std::vector<std::int64_t> offset_;
  std::vector<std::uint8_t> seen_;
  std::vector<ClassId> touched_;
};

}  // namespace cartfact::detail
