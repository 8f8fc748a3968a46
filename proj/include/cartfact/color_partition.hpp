#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cartfact {

using ColorId = std::uint32_t;
using ClassId = std::uint32_t;

/// Partition of the original factor colors 0..k-1 into temporary classes.
/// Class ids are original color ids; a class survives a merge under the id of
/// its largest member list, so classes only ever coarsen.
class ColorPartition {
 public:
  ColorPartition() = default;
  /// Trivial partition: every color is its own class.
  explicit ColorPartition(std::size_t num_colors);

  std::size_t num_colors() const noexcept { return class_of_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }

  ClassId class_of(ColorId c) const noexcept { return class_of_[c]; }
  bool is_live(ClassId c) const noexcept { return c < members_.size() && !members_[c].empty(); }
  std::span<const ColorId> members(ClassId c) const noexcept { return members_[c]; }
  /// Live classes ordered by their smallest member color.
  std::vector<ClassId> classes() const;

  /// Unites the given live classes and returns the surviving id. Every color of
  /// a smaller class is repointed. Throws Error(kInvalidArgument) on unknown ids.
  ClassId merge(std::span<const ClassId> classes);

 private:
  std::vector<ClassId> class_of_;
  std::vector<std::vector<ColorId>> members_;
  std::size_t num_classes_ = 0;
};

}  // namespace cartfact
