#include "cartfact/arc_index.hpp"

#include <bit>

namespace cartfact {

ArcIndex::ArcIndex(std::size_t expected_size) {
  std::size_t capacity = std::bit_ceil(std::max<std::size_t>(16, expected_size * 2));
  slots_.assign(capacity, Slot{kEmpty, 0});
  mask_ = capacity - 1;
  shift_ = 64 - static_cast<unsigned>(std::countr_zero(capacity));
}

void ArcIndex::grow() {
  std::vector<Slot> old = std::move(slots_);
  *this = ArcIndex(old.size());
  for (const Slot& s : old) {
    if (s.key != kEmpty) insert(static_cast<VertexId>(s.key >> 32), static_cast<VertexId>(s.key), s.value);
  }
}

bool ArcIndex::insert(VertexId u, VertexId v, std::uint32_t value) {
  if (slots_.empty() || 2 * (size_ + 1) > slots_.size()) grow();
  const std::uint64_t k = key(u, v);
  for (std::size_t i = hash(k);; i = (i + 1) & mask_) {
    Slot& s = slots_[i];
    if (s.key == k) return false;
    if (s.key == kEmpty) {
      s = Slot{k, value};
      ++size_;
      return true;
    }
  }
}

}  // namespace cartfact
