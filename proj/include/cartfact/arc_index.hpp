#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cartfact {

using VertexId = std::uint32_t;

/// Open-addressing map from ordered vertex pairs to 32-bit payloads.
/// Insert-only; lookups are expected O(1).
class ArcIndex {
 public:
  static constexpr std::uint32_t kMissing = ~std::uint32_t{0};

  ArcIndex() = default;
  explicit ArcIndex(std::size_t expected_size);

  /// Returns false if (u, v) was already present; the stored value is kept.
  bool insert(VertexId u, VertexId v, std::uint32_t value);

  std::uint32_t find(VertexId u, VertexId v) const noexcept {
    if (slots_.empty()) return kMissing;
    const std::uint64_t k = key(u, v);
    for (std::size_t i = hash(k);; i = (i + 1) & mask_) {
      const Slot& s = slots_[i];
      if (s.key == k) return s.value;
      if (s.key == kEmpty) return kMissing;
    }
  }

  bool contains(VertexId u, VertexId v) const noexcept { return find(u, v) != kMissing; }
  std::size_t size() const noexcept { return size_; }

 private:
  struct Slot {
    std::uint64_t key;
    std::uint32_t value;
  };
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::uint64_t key(VertexId u, VertexId v) noexcept {
    return (std::uint64_t{u} << 32) | v;
  }
  std::size_t hash(std::uint64_t k) const noexcept {
    return static_cast<std::size_t>((k * 0x9E3779B97F4A7C15ull) >> shift_);
  }
  void grow();

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  unsigned shift_ = 64;
  std::size_t size_ = 0;
};

}  // namespace cartfact
