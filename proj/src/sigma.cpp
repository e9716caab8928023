#include "rcl/sigma.hpp"

namespace rcl {

char sym_char(Sym s) {
  switch (s) {
    case Sym::zero: return '0';
    case Sym::one: return '1';
    case Sym::one_plus_i: return 'p';
    case Sym::i: return 'i';
  }
  return '?';
}

Sym sym_from_char(char c) {
  switch (c) {
    case '0': return Sym::zero;
    case '1': return Sym::one;
    case 'p': return Sym::one_plus_i;
    case 'i': return Sym::i;
  }
  throw MalformedPoint(std::string("unknown coordinate symbol '") + c + "'");
}

RationalComplex sym_value(Sym s) {
  switch (s) {
    case Sym::zero: return RationalComplex::integer(0, 0);
    case Sym::one: return RationalComplex::integer(1, 0);
    case Sym::one_plus_i: return RationalComplex::integer(1, 1);
    case Sym::i: return RationalComplex::integer(0, 1);
  }
  return {};
}

CombinatorialPoint::CombinatorialPoint(int n_generations, std::vector<Sym> coords)
    : n_(n_generations), coords_(std::move(coords)) {
  if (n_ < 2) throw MalformedPoint("need at least 2 generations");
  if (static_cast<int>(coords_.size()) != n_ - 1)
    throw MalformedPoint("coordinate tuple must have length N-1");
}

CombinatorialPoint CombinatorialPoint::parse(const std::string& s) {
  std::vector<Sym> c;
  c.reserve(s.size());
  for (char ch : s) c.push_back(sym_from_char(ch));
  return CombinatorialPoint(static_cast<int>(s.size()) + 1, std::move(c));
}

bool CombinatorialPoint::well_formed() const {
  std::size_t k = 0;
  while (k < coords_.size() && in_s2(coords_[k])) ++k;
  for (std::size_t m = k; m < coords_.size(); ++m)
    if (!in_s1(coords_[m])) return false;
  return true;
}

int CombinatorialPoint::generation() const {
  std::size_t k = 0;
  while (k < coords_.size() && in_s2(coords_[k])) ++k;
  for (std::size_t m = k; m < coords_.size(); ++m)
    if (!in_s1(coords_[m]))
      throw MalformedPoint("S2 value after an S1 value in " + str());
  return static_cast<int>(k) + 1;
}

CombinatorialPoint CombinatorialPoint::with_coord(int pos, Sym s) const {
  std::vector<Sym> c = coords_;
  c[static_cast<std::size_t>(pos - 1)] = s;
  return CombinatorialPoint(n_, std::move(c));
}

std::string CombinatorialPoint::str() const {
  std::string out;
  out.reserve(coords_.size());
  for (Sym s : coords_) out.push_back(sym_char(s));
  return out;
}

FamilyRelations family_lookup(const CombinatorialPoint& x) {
  const int n = x.n_generations();
  const int j = x.generation();
  FamilyRelations rel;
  if (j < n) {
    // pivot position j holds an S1 value; the other parent flips 1 <-> i.
    Sym mine = x.coord(j);
    Sym other = (mine == Sym::one) ? Sym::i : Sym::one;
    rel.spouse = x.with_coord(j, other);
    rel.children = {x.with_coord(j, Sym::zero), x.with_coord(j, Sym::one_plus_i)};
  }
  if (j > 1) {
    Sym mine = x.coord(j - 1);
    Sym other = (mine == Sym::zero) ? Sym::one_plus_i : Sym::zero;
    rel.sibling = x.with_coord(j - 1, other);
    rel.parents = {x.with_coord(j - 1, Sym::one), x.with_coord(j - 1, Sym::i)};
  }
  return rel;
}

CombinatorialPoint spouse_of(const CombinatorialPoint& x) {
  auto r = family_lookup(x);
  if (!r.spouse) throw NoSuchRelation("no spouse in the last generation");
  return *r.spouse;
}

std::pair<CombinatorialPoint, CombinatorialPoint> children_of(const CombinatorialPoint& x) {
  auto r = family_lookup(x);
  if (!r.children) throw NoSuchRelation("no children in the last generation");
  return *r.children;
}

CombinatorialPoint sibling_of(const CombinatorialPoint& x) {
  auto r = family_lookup(x);
  if (!r.sibling) throw NoSuchRelation("no sibling in the first generation");
  return *r.sibling;
}

std::pair<CombinatorialPoint, CombinatorialPoint> parents_of(const CombinatorialPoint& x) {
  auto r = family_lookup(x);
  if (!r.parents) throw NoSuchRelation("no parents in the first generation");
  return *r.parents;
}

NuclearFamily family_of_parent(const CombinatorialPoint& x) {
  const int j = x.generation();
  if (j >= x.n_generations()) throw NoSuchRelation("last generation has no children");
  NuclearFamily f;
  f.j = j;
  f.f0 = x.with_coord(j, Sym::zero);
  f.f1 = x.with_coord(j, Sym::one);
  f.f1pi = x.with_coord(j, Sym::one_plus_i);
  f.fi = x.with_coord(j, Sym::i);
  return f;
}

NuclearFamily family_of_child(const CombinatorialPoint& x) {
  const int j = x.generation();
  if (j <= 1) throw NoSuchRelation("first generation has no parents");
  NuclearFamily f;
  f.j = j - 1;
  f.f0 = x.with_coord(j - 1, Sym::zero);
  f.f1 = x.with_coord(j - 1, Sym::one);
  f.f1pi = x.with_coord(j - 1, Sym::one_plus_i);
  f.fi = x.with_coord(j - 1, Sym::i);
  return f;
}

namespace {

// Lexicographic enumeration over the given alphabet per position.
void enumerate_tuples(const std::vector<std::array<Sym, 2>>& alphabets, int n_generations,
                      std::vector<CombinatorialPoint>& out) {
  const std::size_t len = alphabets.size();
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    std::vector<Sym> coords(len);
    for (std::size_t k = 0; k < len; ++k) coords[k] = alphabets[k][idx[k]];
    out.emplace_back(n_generations, std::move(coords));
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++idx[k] < 2) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (len == 0) return;
  }
}

constexpr std::array<Sym, 2> kS1{Sym::one, Sym::i};
constexpr std::array<Sym, 2> kS2{Sym::zero, Sym::one_plus_i};

}  // namespace

std::vector<CombinatorialPoint> enumerate_generation(int n_generations, int j) {
  if (n_generations < 2 || j < 1 || j > n_generations)
    throw std::out_of_range("generation index out of range");
  std::vector<std::array<Sym, 2>> alphabets;
  for (int k = 1; k <= n_generations - 1; ++k) alphabets.push_back(k < j ? kS2 : kS1);
  std::vector<CombinatorialPoint> out;
  out.reserve(std::size_t(1) << (n_generations - 1));
  enumerate_tuples(alphabets, n_generations, out);
  return out;
}

std::vector<NuclearFamily> enumerate_families(int n_generations, int j) {
  if (j < 1 || j >= n_generations)
    throw std::out_of_range("family level must satisfy 1 <= j < N");
  // Free positions: 1..j-1 over S2, j+1..N-1 over S1; pivot at j.
  std::vector<std::array<Sym, 2>> alphabets;
  for (int k = 1; k <= n_generations - 1; ++k) {
    if (k == j) continue;
    alphabets.push_back(k < j ? kS2 : kS1);
  }
  std::vector<CombinatorialPoint> stems;
  // Build stems with a placeholder at the pivot, then substitute.
  std::vector<NuclearFamily> out;
  const std::size_t count = std::size_t(1) << (n_generations - 2);
  out.reserve(count);
  std::vector<std::size_t> idx(alphabets.size(), 0);
  while (true) {
    std::vector<Sym> coords(static_cast<std::size_t>(n_generations - 1), Sym::one);
    std::size_t a = 0;
    for (int k = 1; k <= n_generations - 1; ++k) {
      if (k == j) continue;
      coords[static_cast<std::size_t>(k - 1)] = alphabets[a][idx[a]];
      ++a;
    }
    NuclearFamily f;
    f.j = j;
    auto with_pivot = [&](Sym s) {
      std::vector<Sym> c = coords;
      c[static_cast<std::size_t>(j - 1)] = s;
      return CombinatorialPoint(n_generations, std::move(c));
    };
    f.f0 = with_pivot(Sym::zero);
    f.f1 = with_pivot(Sym::one);
    f.f1pi = with_pivot(Sym::one_plus_i);
    f.fi = with_pivot(Sym::i);
    out.push_back(std::move(f));

    if (alphabets.empty()) break;
    std::size_t k = alphabets.size();
    bool done = false;
    while (k > 0) {
      --k;
      if (++idx[k] < 2) break;
      idx[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

int SigmaIndex::index_of(const CombinatorialPoint& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw std::out_of_range("point not in Sigma index");
  return it->second;
}

SigmaIndex build_sigma_index(int n_generations) {
  SigmaIndex s;
  s.n_generations = n_generations;
  for (int j = 1; j <= n_generations; ++j) {
    int begin = s.total();
    for (auto& p : enumerate_generation(n_generations, j)) {
      s.lookup_[p] = s.total();
      s.points.push_back(std::move(p));
      s.generation_of.push_back(j);
    }
    s.gen_range.emplace_back(begin, s.total());
  }
  s.parent_family_of.assign(static_cast<std::size_t>(s.total()), -1);
  s.child_family_of.assign(static_cast<std::size_t>(s.total()), -1);
  for (int j = 1; j < n_generations; ++j) {
    for (const auto& f : enumerate_families(n_generations, j)) {
      SigmaIndex::Family idx;
      idx.j = j;
      idx.f1 = s.index_of(f.f1);
      idx.fi = s.index_of(f.fi);
      idx.f0 = s.index_of(f.f0);
      idx.f1pi = s.index_of(f.f1pi);
      int fid = static_cast<int>(s.families.size());
      s.families.push_back(idx);
      s.parent_family_of[static_cast<std::size_t>(idx.f1)] = fid;
      s.parent_family_of[static_cast<std::size_t>(idx.fi)] = fid;
      s.child_family_of[static_cast<std::size_t>(idx.f0)] = fid;
      s.child_family_of[static_cast<std::size_t>(idx.f1pi)] = fid;
    }
  }
  return s;
}

}  // namespace rcl
