#include "hitlab/set_system.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <string>

namespace hitlab {

int BitVec::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool BitVec::none() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

bool BitVec::intersects(const BitVec& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool BitVec::is_subset_of(const BitVec& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

BitVec BitVec::complement() const {
  BitVec r(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (nbits_ & 63) r.words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  return r;
}

void BitVec::or_with(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::vector<int> BitVec::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<int>(wi * 64 + b) + 1);
      w &= w - 1;
    }
  }
  return out;
}

int BitVec::first_set() const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi)
    if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
  return -1;
}

BitVec BitVec::from_elements(int nbits, std::span<const int> elems) {
  BitVec v(nbits);
  for (int e : elems) {
    if (e < 1 || e > nbits) {
      throw ElementOutOfRangeError("element " + std::to_string(e) +
                                   " outside {1.." + std::to_string(nbits) + "}");
    }
    v.set(e - 1);
  }
  return v;
}

bool BitVec::numeric_less(const BitVec& a, const BitVec& b) {
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

SetSystem SetSystem::build(int n, const std::vector<std::vector<int>>& raw_edges) {
  if (n < 1 || n > kMaxGroundSize) {
    throw DomainError("ground size must be in [1, " +
                      std::to_string(kMaxGroundSize) + "], got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const auto& raw : raw_edges) {
    if (raw.empty()) throw EmptyEdgeError("empty edge cannot be hit");
    edges.push_back(BitVec::from_elements(n, raw));
  }
  return from_bitvecs(n, std::move(edges));
}

SetSystem SetSystem::from_bitvecs(int n, std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.none()) throw EmptyEdgeError("empty edge cannot be hit");
  }
  std::sort(edges.begin(), edges.end(), BitVec::numeric_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SetSystem(n, std::move(edges));
}

bool is_hitting(const SetSystem& sys, const VertexSet& h) {
  for (const Edge& e : sys.edges())
    if (!e.intersects(h)) return false;
  return true;
}

bool is_independent(const SetSystem& sys, const VertexSet& s) {
  for (const Edge& e : sys.edges())
    if (e.is_subset_of(s)) return false;
  return true;
}

bool is_minimal_hitting(const SetSystem& sys, const VertexSet& h) {
  if (!is_hitting(sys, h)) return false;
  VertexSet probe = h;
  for (int i = 0; i < sys.n(); ++i) {
    if (!h.test(i)) continue;
    probe.reset(i);
    if (is_hitting(sys, probe)) return false;
    probe.set(i);
  }
  return true;
}

bool is_maximal_independent(const SetSystem& sys, const VertexSet& s) {
  if (!is_independent(sys, s)) return false;
  VertexSet probe = s;
  for (int i = 0; i < sys.n(); ++i) {
    if (s.test(i)) continue;
    probe.set(i);
    if (is_independent(sys, probe)) return false;
    probe.reset(i);
  }
  return true;
}

SetSystem reduce(const SetSystem& sys) {
  const auto& edges = sys.edges();
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < edges.size() && !dominated; ++j) {
      if (i != j && edges[j].is_subset_of(edges[i]) && edges[j] != edges[i]) {
        dominated = true;
      }
    }
    if (!dominated) kept.push_back(edges[i]);
  }
  return SetSystem::from_bitvecs(sys.n(), std::move(kept));
}

SetSystem read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());

  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<int>> raw;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.front() == '#') continue;
    if (n < 0) {
      std::istringstream ss(line);
      std::string tag;
      if (!(ss >> tag) || tag != "n" || !(ss >> n) || n < 1) {
        throw ParseError(lineno, "expected header 'n <integer>'");
      }
      std::string rest;
      if (ss >> rest) throw ParseError(lineno, "trailing tokens after header");
      continue;
    }
    std::istringstream ss(line);
    std::vector<int> elems;
    int e;
    while (ss >> e) elems.push_back(e);
    if (!ss.eof()) throw ParseError(lineno, "invalid element token");
    if (elems.empty()) throw ParseError(lineno, "blank edge line");
    for (int el : elems) {
      if (el < 1 || el > n) {
        throw ParseError(lineno, "element " + std::to_string(el) +
                                     " outside {1.." + std::to_string(n) + "}");
      }
    }
    raw.push_back(std::move(elems));
  }
  if (n < 0) throw ParseError(lineno, "missing header 'n <integer>'");
  return SetSystem::build(n, raw);
}

void write_text(const SetSystem& sys, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << "n " << sys.n() << "\n";
  for (const Edge& e : sys.edges()) {
    const auto elems = e.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) out << ' ';
      out << elems[i];
    }
    out << "\n";
  }
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace hitlab
