#include "mcvc/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mcvc {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) {
    if ((mask >> v) & 1U) s.bits_.set(static_cast<std::size_t>(v));
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe()) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
  bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe()) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
  bits_.reset(static_cast<std::size_t>(v));
}

Vertex VertexSet::first() const {
  auto pos = bits_.find_first();
  return pos == Bits::npos ? -1 : static_cast<Vertex>(pos);
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  bits_ |= o.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  bits_ &= o.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  bits_ -= o.bits_;
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  s.bits_.flip();
  return s;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe() > 64) throw std::invalid_argument("VertexSet::to_mask: universe exceeds 64");
  std::uint64_t mask = 0;
  for (Vertex v : *this) mask |= std::uint64_t{1} << v;
  return mask;
}

std::size_t VertexSet::hash() const {
  std::size_t h = std::hash<int>{}(universe());
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(bits_, std::back_inserter(blocks));
  for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Vertex v : *this) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << '{' << s.to_string() << '}'; }

}  // namespace mcvc
