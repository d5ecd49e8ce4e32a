#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hitlab/errors.hpp"

namespace hitlab {

inline constexpr int kMaxGroundSize = 1024;

// Bit-vector over the ground set {1..n}: bit i holds element i+1.
// One machine word per 64 elements.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int nbits() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const;
  bool none() const;
  bool intersects(const BitVec& other) const;
  bool is_subset_of(const BitVec& other) const;
  BitVec complement() const;  // within the n-bit universe

  void or_with(const BitVec& other);

  // Elements as 1-based indices, ascending.
  std::vector<int> elements() const;
  int first_set() const;  // lowest set bit (0-based), -1 if none

  // Validates range and rejects nothing else; duplicates collapse.
  static BitVec from_elements(int nbits, std::span<const int> elems);

  // Order by numeric value of the bit-vector (highest word first).
  static bool numeric_less(const BitVec& a, const BitVec& b);

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

using Edge = BitVec;
using VertexSet = BitVec;

// A ground set {1..n} plus pairwise-distinct nonempty edges in canonical
// order (ascending numeric bit-vector value). Immutable after build.
class SetSystem {
 public:
  // Validates and canonicalizes raw 1-based element lists. Duplicate
  // edges merge silently; an empty edge or an out-of-range element throws.
  static SetSystem build(int n, const std::vector<std::vector<int>>& raw_edges);

  // Canonicalizes already-validated bit-vectors (sampler / reduce path).
  static SetSystem from_bitvecs(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  friend bool operator==(const SetSystem& a, const SetSystem& b) = default;

 private:
  SetSystem(int n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
};

// Every edge intersects h. Vacuously true on an empty edge list.
bool is_hitting(const SetSystem& sys, const VertexSet& h);

// No edge is a subset of s.
bool is_independent(const SetSystem& sys, const VertexSet& s);

// h hits and no single-element removal of h still hits.
bool is_minimal_hitting(const SetSystem& sys, const VertexSet& h);

// s is independent and no single-element addition stays independent.
bool is_maximal_independent(const SetSystem& sys, const VertexSet& s);

// Drops every edge that contains another edge. Minimum hitting set
// size is unchanged: anything hitting A hits every B containing A.
SetSystem reduce(const SetSystem& sys);

// Text format: first line "n <integer>", then one edge per line as
// space-separated ascending 1-based elements; '#' starts a comment
// line. UTF-8, LF. write_text then read_text is the identity.
SetSystem read_text(const std::filesystem::path& path);
void write_text(const SetSystem& sys, const std::filesystem::path& path);

}  // namespace hitlab
