#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace wellcovered {

using Vertex = std::uint32_t;

/// A subset of the vertices {0, ..., host_size-1} of one graph, stored as a
/// dense bitset so that unions, intersections and domination tests run a
/// word at a time. Binary operations require equal host sizes.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t host_size);
  VertexSet(std::size_t host_size, std::span<const Vertex> members);
  VertexSet(std::size_t host_size, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t host_size);

  std::size_t host_size() const noexcept { return host_size_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < host_size_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  /// Smallest member, or host_size() when empty.
  Vertex first() const noexcept;
  /// Smallest member strictly greater than v, or host_size() when none.
  Vertex next(Vertex v) const noexcept;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement relative to {0, ..., host_size-1}.
  VertexSet complement() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic comparison of the ascending member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  void check_vertex(Vertex v) const;
  void check_host(const VertexSet& other) const;
  void trim() noexcept;

  std::size_t host_size_ = 0;
  std::vector<Word> words_;
};

}  // namespace wellcovered
