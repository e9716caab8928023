#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcl/errors.hpp"
#include "rcl/rational_complex.hpp"

namespace rcl {

// Coordinate alphabet of the standard unit square S = {0, 1, 1+i, i},
// split into S1 = {1, i} and S2 = {0, 1+i}.
enum class Sym : std::uint8_t { zero = 0, one = 1, one_plus_i = 2, i = 3 };

inline bool in_s1(Sym s) { return s == Sym::one || s == Sym::i; }
inline bool in_s2(Sym s) { return s == Sym::zero || s == Sym::one_plus_i; }

char sym_char(Sym s);             // '0', '1', 'p', 'i'
Sym sym_from_char(char c);        // throws MalformedPoint
RationalComplex sym_value(Sym s); // complex identification, used by placement

// A point of Sigma: an (N-1)-tuple over S. Well-formed points consist of an
// S2 prefix followed by an S1 suffix; the split position is the generation.
class CombinatorialPoint {
 public:
  CombinatorialPoint() = default;
  CombinatorialPoint(int n_generations, std::vector<Sym> coords);
  static CombinatorialPoint parse(const std::string& s);  // e.g. "0p0ii1"

  int n_generations() const { return n_; }                  // N
  int size() const { return static_cast<int>(coords_.size()); }  // N-1
  Sym coord(int pos) const { return coords_[static_cast<std::size_t>(pos - 1)]; }  // 1-based
  const std::vector<Sym>& coords() const { return coords_; }

  // Generation index j in 1..N; throws MalformedPoint if the S2-prefix /
  // S1-suffix pattern is violated.
  int generation() const;
  bool well_formed() const;

  CombinatorialPoint with_coord(int pos, Sym s) const;  // 1-based

  std::string str() const;

  friend bool operator==(const CombinatorialPoint& a, const CombinatorialPoint& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const CombinatorialPoint& a, const CombinatorialPoint& b) {
    return !(a == b);
  }
  friend bool operator<(const CombinatorialPoint& a, const CombinatorialPoint& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.coords_ < b.coords_;
  }

 private:
  int n_ = 0;
  std::vector<Sym> coords_;
};

// The four members of a nuclear family: parents F1, Fi in generation j,
// children F0, F1pi in generation j+1. All four differ only at coordinate
// position j, where they take the four values of S.
struct NuclearFamily {
  CombinatorialPoint f0, f1, f1pi, fi;
  int j = 0;  // generation of the parents
};

struct FamilyRelations {
  std::optional<CombinatorialPoint> spouse;
  std::optional<std::pair<CombinatorialPoint, CombinatorialPoint>> children;  // (F0, F1pi)
  std::optional<CombinatorialPoint> sibling;
  std::optional<std::pair<CombinatorialPoint, CombinatorialPoint>> parents;   // (F1, Fi)
};

// All relations of x. Spouse/children exist iff generation(x) < N,
// sibling/parents iff generation(x) > 1.
FamilyRelations family_lookup(const CombinatorialPoint& x);

// Throwing accessors (NoSuchRelation on the boundary generations).
CombinatorialPoint spouse_of(const CombinatorialPoint& x);
std::pair<CombinatorialPoint, CombinatorialPoint> children_of(const CombinatorialPoint& x);
CombinatorialPoint sibling_of(const CombinatorialPoint& x);
std::pair<CombinatorialPoint, CombinatorialPoint> parents_of(const CombinatorialPoint& x);

// The unique family in which x participates as a parent (resp. child).
NuclearFamily family_of_parent(const CombinatorialPoint& x);
NuclearFamily family_of_child(const CombinatorialPoint& x);

// Generation j of Sigma, 2^{N-1} points in lexicographic coordinate order.
std::vector<CombinatorialPoint> enumerate_generation(int n_generations, int j);

// The 2^{N-2} families connecting Sigma_j to Sigma_{j+1}; range error
// outside 1 <= j < N.
std::vector<NuclearFamily> enumerate_families(int n_generations, int j);

// Flat index of the whole of Sigma, generation-major, lexicographic inside
// each generation. Families carry point indices; every point knows the
// family it parents and the family it belongs to as a child.
struct SigmaIndex {
  struct Family {
    int j;
    int f1, fi;    // parent indices (values 1, i at the pivot)
    int f0, f1pi;  // child indices (values 0, 1+i at the pivot)
  };

  int n_generations = 0;
  std::vector<CombinatorialPoint> points;
  std::vector<int> generation_of;                  // per point
  std::vector<std::pair<int, int>> gen_range;      // per generation, [begin, end)
  std::vector<Family> families;                    // level-major, deterministic order
  std::vector<int> parent_family_of;               // -1 for the last generation
  std::vector<int> child_family_of;                // -1 for the first generation

  int index_of(const CombinatorialPoint& p) const;
  int total() const { return static_cast<int>(points.size()); }

 private:
  friend SigmaIndex build_sigma_index(int n_generations);
  std::map<CombinatorialPoint, int> lookup_;
};

SigmaIndex build_sigma_index(int n_generations);

}  // namespace rcl
