#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanmeasure {

/// Finite strict 2-category with poset-enriched homs: parallel morphisms
/// carry a partial order (the 2-cells). Composition must be associative,
/// unital and monotone in both arguments; this is validated on construction,
/// by full enumeration when small and by strided sampling of triples above
/// `kValidationTripleCap`.
class Finite2Category {
 public:
  struct Morphism {
    std::string name;
    int src = 0;
    int dst = 0;
  };

  static constexpr std::uint64_t kValidationTripleCap = 20'000'000;

  Finite2Category() = default;

  Finite2Category(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                  std::vector<int> identities, std::vector<std::vector<int>> composition,
                  std::vector<std::vector<char>> hom_leq)
      : objects_(std::move(objects)),
        mors_(std::move(morphisms)),
        identity_(std::move(identities)),
        comp_(std::move(composition)),
        cell_(std::move(hom_leq)) {
    validate();
  }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return mors_.size(); }
  const std::string& object_name(int a) const { return objects_.at(a); }
  const Morphism& morphism(int f) const { return mors_.at(f); }
  int source(int f) const { return mors_.at(f).src; }
  int target(int f) const { return mors_.at(f).dst; }
  int identity(int a) const { return identity_.at(a); }

  bool composable(int g, int f) const { return source(g) == target(f); }
  /// g after f; requires source(g) == target(f).
  int compose(int g, int f) const {
    int r = comp_.at(g).at(f);
    if (r < 0) throw std::invalid_argument("compose: morphisms not composable");
    return r;
  }

  /// 2-cell f => g between parallel morphisms.
  bool leq2(int f, int g) const {
    return mors_[f].src == mors_[g].src && mors_[f].dst == mors_[g].dst && cell_[f][g];
  }

  std::vector<int> morphisms_into(int a) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < mors_.size(); ++f)
      if (mors_[f].dst == a) out.push_back(int(f));
    return out;
  }
  std::vector<int> morphisms_between(int a, int b) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < mors_.size(); ++f)
      if (mors_[f].src == a && mors_[f].dst == b) out.push_back(int(f));
    return out;
  }

  int find_morphism(const std::string& name) const {
    for (std::size_t f = 0; f < mors_.size(); ++f)
      if (mors_[f].name == name) return int(f);
    throw std::invalid_argument("unknown morphism: " + name);
  }
  int find_object(const std::string& name) const {
    for (std::size_t a = 0; a < objects_.size(); ++a)
      if (objects_[a] == name) return int(a);
    throw std::invalid_argument("unknown object: " + name);
  }

  /// True when the associativity check was strided rather than exhaustive.
  bool validation_sampled() const { return validation_sampled_; }

  /// One object "*" with only its identity.
  static Finite2Category terminal() {
    return Finite2Category({"*"}, {{"id_*", 0, 0}}, {0}, {{0}}, {{1}});
  }

  /// Free category on a graph with discrete homs: at most one morphism per
  /// generated path is NOT assumed; the caller supplies all composites.
  static Finite2Category from_parts(std::vector<std::string> objects,
                                    std::vector<Morphism> morphisms,
                                    std::vector<std::vector<int>> composition,
                                    std::vector<std::pair<int, int>> hom_cells = {}) {
    std::vector<int> ids(objects.size(), -1);
    for (std::size_t f = 0; f < morphisms.size(); ++f) {
      const auto& m = morphisms[f];
      if (m.src == m.dst && composition.at(f).at(f) == int(f)) {
        bool unital = true;
        for (std::size_t g = 0; g < morphisms.size(); ++g) {
          if (morphisms[g].src == m.src && composition[g][f] != int(g)) unital = false;
          if (morphisms[g].dst == m.src && composition[f][g] != int(g)) unital = false;
        }
        if (unital) ids[m.src] = int(f);
      }
    }
    std::vector<std::vector<char>> cells(morphisms.size(), std::vector<char>(morphisms.size(), 0));
    for (std::size_t f = 0; f < morphisms.size(); ++f) cells[f][f] = 1;
    for (auto [f, g] : hom_cells) cells.at(f).at(g) = 1;
    // transitive closure of the supplied cells
    for (std::size_t k = 0; k < morphisms.size(); ++k)
      for (std::size_t i = 0; i < morphisms.size(); ++i)
        if (cells[i][k])
          for (std::size_t j = 0; j < morphisms.size(); ++j)
            if (cells[k][j]) cells[i][j] = 1;
    return Finite2Category(std::move(objects), std::move(morphisms), std::move(ids),
                           std::move(composition), std::move(cells));
  }

 private:
  void validate() {
    const std::size_t n = objects_.size();
    const std::size_t m = mors_.size();
    if (identity_.size() != n) throw std::invalid_argument("2-category: identity table size");
    if (comp_.size() != m || cell_.size() != m)
      throw std::invalid_argument("2-category: table size mismatch");
    for (std::size_t f = 0; f < m; ++f) {
      if (comp_[f].size() != m || cell_[f].size() != m)
        throw std::invalid_argument("2-category: table size mismatch");
      if (mors_[f].src < 0 || std::size_t(mors_[f].src) >= n || mors_[f].dst < 0 ||
          std::size_t(mors_[f].dst) >= n)
        throw std::invalid_argument("2-category: morphism endpoint out of range");
      if (!cell_[f][f]) throw std::invalid_argument("2-category: hom order not reflexive");
    }
    for (std::size_t a = 0; a < n; ++a) {
      int e = identity_[a];
      if (e < 0 || std::size_t(e) >= m || mors_[e].src != int(a) || mors_[e].dst != int(a))
        throw std::invalid_argument("2-category: bad identity for " + objects_[a]);
    }
    // composition well-typed and unital
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f) {
        int r = comp_[g][f];
        bool comp_ok = composable(int(g), int(f));
        if (comp_ok != (r >= 0))
          throw std::invalid_argument("2-category: composition defined iff composable");
        if (r >= 0 && (mors_[r].src != mors_[f].src || mors_[r].dst != mors_[g].dst))
          throw std::invalid_argument("2-category: composite has wrong endpoints");
      }
    for (std::size_t f = 0; f < m; ++f) {
      if (comp_[f][identity_[mors_[f].src]] != int(f) || comp_[identity_[mors_[f].dst]][f] != int(f))
        throw std::invalid_argument("2-category: identity law fails at " + mors_[f].name);
    }
    // hom order: transitive and antisymmetric within parallel pairs
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t g = 0; g < m; ++g)
        if (f != g && cell_[f][g]) {
          if (mors_[f].src != mors_[g].src || mors_[f].dst != mors_[g].dst)
            throw std::invalid_argument("2-category: 2-cell between non-parallel morphisms");
          if (cell_[g][f]) throw std::invalid_argument("2-category: hom order not antisymmetric");
          for (std::size_t h = 0; h < m; ++h)
            if (cell_[g][h] && !cell_[f][h])
              throw std::invalid_argument("2-category: hom order not transitive");
        }
    // monotonicity of composition in both arguments
    for (std::size_t g1 = 0; g1 < m; ++g1)
      for (std::size_t g2 = 0; g2 < m; ++g2) {
        if (!cell_[g1][g2]) continue;
        for (std::size_t f = 0; f < m; ++f) {
          if (composable(int(g1), int(f)) && !cell_[comp_[g1][f]][comp_[g2][f]])
            throw std::invalid_argument("2-category: composition not monotone (left)");
          if (composable(int(f), int(g1)) && !cell_[comp_[f][g1]][comp_[f][g2]])
            throw std::invalid_argument("2-category: composition not monotone (right)");
        }
      }
    // associativity
    std::vector<std::vector<int>> into(n);
    for (std::size_t f = 0; f < m; ++f) into[mors_[f].dst].push_back(int(f));
    std::uint64_t triples = 0;
    for (std::size_t g = 0; g < m; ++g)
      triples += std::uint64_t(into[mors_[g].src].size()) * into[mors_[g].dst].size();
    std::uint64_t stride = triples > kValidationTripleCap ? triples / kValidationTripleCap + 1 : 1;
    validation_sampled_ = stride > 1;
    std::uint64_t counter = 0;
    for (std::size_t h = 0; h < m; ++h)
      for (int g : into[mors_[h].src])
        for (int f : into[mors_[g].src]) {
          if (counter++ % stride != 0) continue;
          if (comp_[comp_[h][g]][f] != comp_[h][comp_[g][f]])
            throw std::invalid_argument("2-category: composition not associative");
        }
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> mors_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> comp_;
  std::vector<std::vector<char>> cell_;
  bool validation_sampled_ = false;
};

/// A class of morphisms on which transformations must commute strictly.
/// No closure properties are imposed.
class MorphismClass {
 public:
  MorphismClass() = default;
  MorphismClass(const Finite2Category& cat, std::vector<int> members) : member_(cat.num_morphisms(), 0) {
    for (int f : members) {
      if (f < 0 || std::size_t(f) >= cat.num_morphisms())
        throw std::invalid_argument("morphism class: member not a morphism of the category");
      member_[f] = 1;
    }
  }
  static MorphismClass empty(const Finite2Category& cat) { return MorphismClass(cat, {}); }
  static MorphismClass all(const Finite2Category& cat) {
    std::vector<int> ms(cat.num_morphisms());
    for (std::size_t f = 0; f < ms.size(); ++f) ms[f] = int(f);
    return MorphismClass(cat, ms);
  }
  bool contains(int f) const { return f >= 0 && std::size_t(f) < member_.size() && member_[f]; }
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t f = 0; f < member_.size(); ++f)
      if (member_[f]) out.push_back(int(f));
    return out;
  }

 private:
  std::vector<char> member_;
};

}  // namespace kanmeasure
