#include "wellcovered/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "wellcovered/errors.hpp"

namespace wellcovered {

namespace {

std::size_t word_count(std::size_t host_size) {
  return (host_size + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(std::size_t host_size)
    : host_size_(host_size), words_(word_count(host_size), 0) {}

VertexSet::VertexSet(std::size_t host_size, std::span<const Vertex> members)
    : VertexSet(host_size) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t host_size, std::initializer_list<Vertex> members)
    : VertexSet(host_size, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet VertexSet::full(std::size_t host_size) {
  VertexSet s(host_size);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&out](Vertex v) { out.push_back(v); });
  return out;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * kWordBits +
                                 static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return static_cast<Vertex>(host_size_);
}

Vertex VertexSet::next(Vertex v) const noexcept {
  std::size_t start = static_cast<std::size_t>(v) + 1;
  if (start >= host_size_) return static_cast<Vertex>(host_size_);
  std::size_t w = start / kWordBits;
  Word bits = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) {
      return static_cast<Vertex>(w * kWordBits +
                                 static_cast<std::size_t>(std::countr_zero(bits)));
    }
    if (++w == words_.size()) return static_cast<Vertex>(host_size_);
    bits = words_[w];
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(host_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void VertexSet::check_vertex(Vertex v) const {
  if (v >= host_size_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for host of order " +
                     std::to_string(host_size_));
  }
}

void VertexSet::check_host(const VertexSet& other) const {
  if (other.host_size_ != host_size_) {
    throw PreconditionError(Precondition::kHostMismatch,
                            "vertex sets of hosts with order " + std::to_string(host_size_) +
                                " and " + std::to_string(other.host_size_));
  }
}

void VertexSet::trim() noexcept {
  const std::size_t tail = host_size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

const char* to_string(Precondition p) noexcept {
  switch (p) {
    case Precondition::kHostMismatch: return "host mismatch";
    case Precondition::kNotIndependent: return "set is not independent";
    case Precondition::kNotMaximal: return "set is not maximal independent";
    case Precondition::kNotMaximum: return "set is not a maximum independent set";
    case Precondition::kNotMember: return "vertex is not a member of the set";
    case Precondition::kRemainderTooSmall: return "clique remainder has order below two";
    case Precondition::kInvalidIsolatableWitness: return "invalid isolatable-vertex witness";
    case Precondition::kNotStrictlyLarger: return "first set is not strictly larger";
    case Precondition::kInvalidDecomposition: return "invalid greedy decomposition";
  }
  return "unknown precondition";
}

}  // namespace wellcovered
