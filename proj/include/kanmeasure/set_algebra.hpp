#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanmeasure {

/// Finite Boolean set algebra on a ground set {0..n-1}, presented by its atom
/// partition. Algebra elements are exactly the unions of atoms, encoded as
/// atom-index bitmasks; closure under complement and union is then automatic.
class SetAlgebra {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxAtoms = 12;  // Bell-number guard for enumerations

  SetAlgebra() = default;

  SetAlgebra(std::size_t ground_size, std::vector<std::vector<int>> atoms)
      : ground_(ground_size), atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("algebra: ground set must be nonempty");
    std::vector<char> seen(ground_, 0);
    for (const auto& atom : atoms_) {
      if (atom.empty()) throw std::invalid_argument("algebra: empty atom");
      for (int x : atom) {
        if (x < 0 || std::size_t(x) >= ground_ || seen[x])
          throw std::invalid_argument("algebra: atoms must partition the ground set");
        seen[x] = 1;
      }
    }
    for (char c : seen)
      if (!c) throw std::invalid_argument("algebra: atoms must partition the ground set");
  }

  std::size_t ground_size() const { return ground_; }
  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t element_count() const { return std::size_t(1) << atoms_.size(); }
  const std::vector<std::vector<int>>& atoms() const { return atoms_; }

  Mask full_mask() const { return Mask((std::uint64_t(1) << atoms_.size()) - 1); }
  Mask complement(Mask m) const { return full_mask() & ~m; }
  static bool disjoint(Mask a, Mask b) { return (a & b) == 0; }
  static bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

  /// Atom-mask of an arbitrary subset of the ground set; throws when the
  /// subset is not a union of atoms.
  Mask mask_of(const std::vector<int>& subset) const {
    std::vector<char> member(ground_, 0);
    for (int x : subset) {
      if (x < 0 || std::size_t(x) >= ground_)
        throw std::invalid_argument("algebra: element outside the ground set");
      member[x] = 1;
    }
    Mask m = 0;
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      bool all = true, none = true;
      for (int x : atoms_[a]) (member[x] ? none : all) = false;
      if (all) m |= Mask(1) << a;
      else if (!none)
        throw std::invalid_argument("algebra: subset is not a union of atoms");
    }
    return m;
  }

  std::vector<int> points_of(Mask m) const {
    std::vector<int> out;
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      if (m & (Mask(1) << a)) out.insert(out.end(), atoms_[a].begin(), atoms_[a].end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string mask_name(Mask m) const {
    if (m == 0) return "{}";
    std::string s = "{";
    auto pts = points_of(m);
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
    return s + "}";
  }

 private:
  std::size_t ground_ = 0;
  std::vector<std::vector<int>> atoms_;
};

/// Atoms of the algebra generated by a family of subsets: the classes of the
/// indicator-signature partition.
inline SetAlgebra generate_algebra(std::size_t ground_size,
                                   const std::vector<std::vector<int>>& generators) {
  if (ground_size == 0) throw std::invalid_argument("generate_algebra: empty ground set");
  std::vector<std::vector<char>> membership(generators.size(), std::vector<char>(ground_size, 0));
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (int x : generators[g]) {
      if (x < 0 || std::size_t(x) >= ground_size)
        throw std::invalid_argument("generate_algebra: generator not a subset of the ground set");
      membership[g][x] = 1;
    }
  std::map<std::vector<char>, std::vector<int>> classes;
  for (std::size_t x = 0; x < ground_size; ++x) {
    std::vector<char> sig(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) sig[g] = membership[g][x];
    classes[sig].push_back(int(x));
  }
  std::vector<std::vector<int>> atoms;
  atoms.reserve(classes.size());
  for (auto& [sig, atom] : classes) atoms.push_back(atom);
  if (atoms.size() > SetAlgebra::kMaxAtoms)
    throw std::invalid_argument("generate_algebra: more than 12 atoms");
  return SetAlgebra(ground_size, std::move(atoms));
}

namespace detail {

/// Visits every partition of the atom set `mask` into nonempty blocks.
/// Blocks are produced in a canonical order (each block contains the lowest
/// remaining atom), so each set partition is visited exactly once.
template <class Fn>
void for_each_partition(SetAlgebra::Mask mask, std::vector<SetAlgebra::Mask>& blocks, Fn&& fn) {
  if (mask == 0) {
    fn(blocks);
    return;
  }
  SetAlgebra::Mask low = mask & (~mask + 1);
  SetAlgebra::Mask rest = mask ^ low;
  // iterate over all subsets of `rest`, adding `low` to form the block
  SetAlgebra::Mask sub = 0;
  while (true) {
    blocks.push_back(low | sub);
    for_each_partition(SetAlgebra::Mask(mask ^ (low | sub)), blocks, fn);
    blocks.pop_back();
    if (sub == rest) break;
    sub = (sub - rest) & rest;  // next subset of rest
  }
}

}  // namespace detail

/// Enumerates the partitions of an algebra element into nonempty algebra
/// elements (every block is a union of atoms, hence in the algebra).
template <class Fn>
void for_each_disjoint_partition(const SetAlgebra& algebra, SetAlgebra::Mask of, Fn&& fn) {
  if (algebra.atom_count() > SetAlgebra::kMaxAtoms)
    throw std::invalid_argument("partition enumeration: more than 12 atoms");
  std::vector<SetAlgebra::Mask> blocks;
  detail::for_each_partition(of, blocks, fn);
}

}  // namespace kanmeasure
