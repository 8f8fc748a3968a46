#include "cartfact/color_partition.hpp"

#include <algorithm>
#include <string>

#include "cartfact/error.hpp"

namespace cartfact {

ColorPartition::ColorPartition(std::size_t num_colors)
    : class_of_(num_colors), members_(num_colors), num_classes_(num_colors) {
  for (ColorId c = 0; c < num_colors; ++c) {
    class_of_[c] = c;
    members_[c] = {c};
  }
}

std::vector<ClassId> ColorPartition::classes() const {
  std::vector<ClassId> out;
  for (ClassId c = 0; c < members_.size(); ++c) {
    if (!members_[c].empty()) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [&](ClassId a, ClassId b) {
    return *std::min_element(members_[a].begin(), members_[a].end()) <
           *std::min_element(members_[b].begin(), members_[b].end());
  });
  return out;
}

ClassId ColorPartition::merge(std::span<const ClassId> classes) {
  if (classes.empty()) throw Error(ErrorKind::kInvalidArgument, "merge of no classes");
  ClassId survivor = classes.front();
  for (ClassId c : classes) {
    if (!is_live(c)) throw Error(ErrorKind::kInvalidArgument, "unknown class " + std::to_string(c));
    if (members_[c].size() > members_[survivor].size() ||
        (members_[c].size() == members_[survivor].size() && c < survivor)) {
      survivor = c;
    }
  }
  for (ClassId c : classes) {
    if (c == survivor || members_[c].empty()) continue;
    for (ColorId color : members_[c]) class_of_[color] = survivor;
    members_[survivor].insert(members_[survivor].end(), members_[c].begin(), members_[c].end());
    members_[c].clear();
    --num_classes_;
  }
  return survivor;
}

}  // namespace cartfact
