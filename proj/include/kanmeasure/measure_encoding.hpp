#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "functor.hpp"
#include "measure_table.hpp"
#include "transformation.hpp"

namespace kanmeasure {

/// Finite partial map {0..src-1} -> {0..dst-1}; -1 marks "undefined".
struct PartialMap {
  int src = 0, dst = 0;
  std::vector<int> table;

  static PartialMap identity(int n) {
    PartialMap p{n, n, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) p.table[i] = i;
    return p;
  }
  friend PartialMap compose(const PartialMap& g, const PartialMap& f) {
    PartialMap r{f.src, g.dst, std::vector<int>(f.src)};
    for (int i = 0; i < f.src; ++i) r.table[i] = f.table[i] < 0 ? -1 : g.table[f.table[i]];
    return r;
  }
  bool total() const {
    for (int v : table)
      if (v < 0) return false;
    return true;
  }
  bool injective() const {
    std::vector<char> seen(dst, 0);
    for (int v : table)
      if (v >= 0) {
        if (seen[v]) return false;
        seen[v] = 1;
      }
    return true;
  }
  /// Domain-extension order: defined wherever o is not larger, agreeing there.
  bool leq(const PartialMap& o) const {
    for (int i = 0; i < src; ++i)
      if (table[i] >= 0 && table[i] != o.table[i]) return false;
    return true;
  }
  std::string name() const {
    std::string s = std::to_string(src) + ">" + std::to_string(dst) + ":";
    for (int v : table) s += v < 0 ? '-' : char('0' + v);
    return s;
  }
  friend bool operator<(const PartialMap& a, const PartialMap& b) {
    return std::tie(a.src, a.dst, a.table) < std::tie(b.src, b.dst, b.table);
  }
};

enum class IndexVariant { total, partial };

/// The bounded index category: objects are the sets {0..k-1} for k up to the
/// bound; morphisms are all total maps (total variant, discrete homs) or all
/// partial maps ordered by domain extension (partial variant). The equality
/// class is empty for the total variant and the injective partial maps for
/// the partial variant.
class IndexCategory {
 public:
  IndexCategory(IndexVariant variant, std::size_t bound) : variant_(variant), bound_(bound) {
    std::vector<std::string> objects;
    for (std::size_t k = 0; k <= bound_; ++k) objects.push_back(std::to_string(k));
    std::map<PartialMap, int> index;
    std::vector<Finite2Category::Morphism> mors;
    for (std::size_t a = 0; a <= bound_; ++a)
      for (std::size_t b = 0; b <= bound_; ++b)
        enumerate_maps(int(a), int(b), [&](const PartialMap& p) {
          index[p] = int(maps_.size());
          maps_.push_back(p);
          mors.push_back({p.name(), int(a), int(b)});
        });
    std::vector<int> identities(objects.size());
    for (std::size_t k = 0; k <= bound_; ++k) identities[k] = index.at(PartialMap::identity(int(k)));
    const std::size_t m = maps_.size();
    std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f)
        if (maps_[g].src == maps_[f].dst) comp[g][f] = index.at(compose(maps_[g], maps_[f]));
    std::vector<std::vector<char>> cells(m, std::vector<char>(m, 0));
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t g = 0; g < m; ++g)
        if (maps_[f].src == maps_[g].src && maps_[f].dst == maps_[g].dst)
          cells[f][g] = variant_ == IndexVariant::partial ? maps_[f].leq(maps_[g]) : f == g;
    cat_ = std::make_shared<Finite2Category>(std::move(objects), std::move(mors),
                                             std::move(identities), std::move(comp),
                                             std::move(cells));
    std::vector<int> sigma_members;
    if (variant_ == IndexVariant::partial)
      for (std::size_t f = 0; f < m; ++f)
        if (maps_[f].injective()) sigma_members.push_back(int(f));
    sigma_ = MorphismClass(*cat_, sigma_members);
  }

  IndexVariant variant() const { return variant_; }
  std::size_t bound() const { return bound_; }
  const std::shared_ptr<const Finite2Category>& category_ptr() const { return cat_; }
  const Finite2Category& category() const { return *cat_; }
  const PartialMap& map_of(int mor) const { return maps_.at(mor); }
  const MorphismClass& sigma() const { return sigma_; }

 private:
  template <class Fn>
  void enumerate_maps(int a, int b, Fn&& fn) const {
    // digits 0..b-1 are values, digit b means undefined (partial variant only)
    int radix = variant_ == IndexVariant::partial ? b + 1 : b;
    if (a == 0) {
      fn(PartialMap{0, b, {}});
      return;
    }
    if (radix == 0) return;  // no total map from a nonempty set to the empty set
    PartialMap p{a, b, std::vector<int>(a, 0)};
    std::vector<int> digit(a, 0);
    while (true) {
      for (int i = 0; i < a; ++i) p.table[i] = digit[i] == b ? -1 : digit[i];
      fn(p);
      int i = 0;
      while (i < a && ++digit[i] == radix) digit[i++] = 0;
      if (i == a) break;
    }
  }

  IndexVariant variant_;
  std::size_t bound_;
  std::shared_ptr<const Finite2Category> cat_;
  std::vector<PartialMap> maps_;
  MorphismClass sigma_;
};

/// Index categories depend only on the variant and the bound, so instances
/// are shared process-wide.
inline std::shared_ptr<const IndexCategory> shared_index_category(IndexVariant variant,
                                                                  std::size_t bound) {
  static std::map<std::pair<int, std::size_t>, std::shared_ptr<const IndexCategory>> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_pair(int(variant), bound);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<const IndexCategory>(variant, bound)).first;
  return it->second;
}

/// Value backend over the index category: the object of size k carries the
/// extended-value vectors of length k ordered pointwise, and a map acts by
/// summing over fibres. This backend is formula-only: the carrier is
/// infinite, so sup/inf operate on explicit finite candidate sets and the
/// fixpoint operations are unavailable.
class WeightFunctor {
 public:
  using Value = std::vector<ExtValue>;
  static constexpr bool enumerable = false;

  explicit WeightFunctor(const IndexCategory* ic) : ic_(ic) {}

  const Finite2Category& category() const { return ic_->category(); }

  bool leq(int obj, const Value& v, const Value& w) const {
    (void)obj;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(v[i] <= w[i])) return false;
    return true;
  }
  Value apply(int mor, const Value& v) const {
    const PartialMap& p = ic_->map_of(mor);
    Value out(p.dst);
    for (int i = 0; i < p.src; ++i)
      if (p.table[i] >= 0) out[p.table[i]] += v[i];
    return out;
  }
  Value sup(int obj, const std::vector<Value>& vals) const {
    Value out(obj);  // bottom: the zero vector
    for (const auto& v : vals)
      for (int i = 0; i < obj; ++i) out[i] = max(out[i], v[i]);
    return out;
  }
  Value inf(int obj, const std::vector<Value>& vals) const {
    Value out(obj, ExtValue::infinity());  // top
    for (const auto& v : vals)
      for (int i = 0; i < obj; ++i) out[i] = min(out[i], v[i]);
    return out;
  }
  /// Fibre sums over singleton-or-empty fibres commute with pointwise
  /// nonempty joins and meets, so preservation holds structurally for
  /// injective maps and fails in general otherwise.
  bool preserves_joins_on(int mor) const { return ic_->map_of(mor).injective(); }
  bool preserves_meets_on(int mor) const { return ic_->map_of(mor).injective(); }
  std::string value_name(int obj, const Value& v) const {
    (void)obj;
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s + ")";
  }
  std::string directed_joins_note() const {
    return "fibre sums preserve directed joins of weight vectors";
  }

 private:
  const IndexCategory* ic_;
};

/// Bundles the index category, the indexed-partition functor of a finite set
/// algebra, and the weight backend; hosts the table <-> transformation
/// dictionary.
class MeasureEncoding {
 public:
  /// The dictionary depends on the algebra only through its atom count, so
  /// encodings are built over a canonical algebra with singleton atoms and
  /// shared between all algebras of the same shape.
  MeasureEncoding(std::size_t atom_count, IndexVariant variant, std::size_t bound)
      : algebra_(std::make_shared<SetAlgebra>(canonical_atoms(atom_count))),
        index_(shared_index_category(variant, bound)),
        weights_(index_.get()) {
    if (variant == IndexVariant::total && bound < 2)
      throw std::invalid_argument("measure encoding: total variant needs bound >= 2");
    if (variant == IndexVariant::partial && bound < 1)
      throw std::invalid_argument("measure encoding: partial variant needs bound >= 1");
    build_partition_functor();
  }

  // transformations hold pointers into this bundle
  MeasureEncoding(const MeasureEncoding&) = delete;
  MeasureEncoding& operator=(const MeasureEncoding&) = delete;

  const SetAlgebra& algebra() const { return *algebra_; }
  const IndexCategory& index_category() const { return *index_; }
  const MorphismClass& sigma() const { return index_->sigma(); }
  const PosetFunctor& partition_functor() const { return partitions_; }
  const WeightFunctor& weight_functor() const { return weights_; }

  /// Indexed families are encoded in mixed radix over atoms: digit t of an
  /// element is the block index carrying atom t, or "unassigned" in the
  /// partial variant.
  std::size_t family_count(int obj) const {
    std::size_t radix = index_->variant() == IndexVariant::partial ? obj + 1 : obj;
    std::size_t n = 1;
    for (std::size_t t = 0; t < algebra_->atom_count(); ++t) n *= radix;
    return n;
  }

  SetAlgebra::Mask family_block(int obj, int elem, int block) const {
    std::size_t radix = index_->variant() == IndexVariant::partial ? obj + 1 : obj;
    SetAlgebra::Mask m = 0;
    for (std::size_t t = 0; t < algebra_->atom_count(); ++t) {
      if (int(elem % radix) == block) m |= SetAlgebra::Mask(1) << t;
      elem = int(elem / radix);
    }
    return m;
  }

  int family_of_blocks(int obj, const std::vector<SetAlgebra::Mask>& blocks) const {
    std::size_t radix = index_->variant() == IndexVariant::partial ? obj + 1 : obj;
    std::size_t e = 0, place = 1;
    for (std::size_t t = 0; t < algebra_->atom_count(); ++t) {
      int digit = int(radix) - 1;  // unassigned by default (partial variant)
      bool found = false;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b] & (SetAlgebra::Mask(1) << t)) {
          digit = int(b);
          found = true;
          break;
        }
      if (!found && index_->variant() == IndexVariant::total)
        throw std::invalid_argument("total variant families must cover the ground set");
      e += place * std::size_t(digit);
      place *= radix;
    }
    return int(e);
  }

  Transformation<WeightFunctor> encode(const MeasureTable& m) const {
    require_same_algebra_ptr(m);
    std::vector<std::vector<WeightFunctor::Value>> comp(index_->category().num_objects());
    for (std::size_t obj = 0; obj <= index_->bound(); ++obj)
      for (std::size_t e = 0; e < family_count(int(obj)); ++e) {
        WeightFunctor::Value v(obj);
        for (std::size_t b = 0; b < obj; ++b)
          v[b] = m.value(family_block(int(obj), int(e), int(b)));
        comp[obj].push_back(std::move(v));
      }
    return Transformation<WeightFunctor>(&partitions_, &weights_, std::move(comp));
  }

  static Kind expected_kind(MeasureKind mk) {
    switch (mk) {
      case MeasureKind::premeasure: return Kind::strict;
      case MeasureKind::outer: return Kind::lax;
      case MeasureKind::inner: return Kind::colax;
      default: return Kind::general;
    }
  }

  /// Encode and insist the engine classification matches the declared kind.
  Transformation<WeightFunctor> encode_checked(const MeasureTable& m) const {
    auto t = encode(m);
    if (!is_kind(t, sigma(), expected_kind(m.declared_kind())))
      throw std::invalid_argument(std::string("encoding of a declared ") +
                                  measure_kind_name(m.declared_kind()) +
                                  " table does not classify as " +
                                  kind_name(expected_kind(m.declared_kind())));
    return t;
  }

  /// Reads the table back off the transformation: the partial variant reads
  /// the one-index family (B), the total variant the complement-split pair.
  MeasureTable decode(const Transformation<WeightFunctor>& t, MeasureKind declared,
                      std::shared_ptr<const SetAlgebra> onto = nullptr) const {
    if (!onto) onto = algebra_;
    if (onto->atom_count() != algebra_->atom_count())
      throw std::invalid_argument("decode: atom count mismatch");
    std::vector<ExtValue> values(algebra_->element_count());
    for (SetAlgebra::Mask b = 0; b < algebra_->element_count(); ++b) {
      if (index_->variant() == IndexVariant::partial) {
        int elem = family_of_blocks(1, {b});
        values[b] = t.at(1, elem).at(0);
      } else {
        int elem = family_of_blocks(2, {algebra_->complement(b), b});
        values[b] = t.at(2, elem).at(1);
      }
    }
    return MeasureTable(std::move(onto), std::move(values), declared);
  }

  /// Process-wide cache keyed by shape.
  static const MeasureEncoding& shared(std::size_t atom_count, IndexVariant variant,
                                       std::size_t bound) {
    static std::map<std::tuple<std::size_t, int, std::size_t>,
                    std::unique_ptr<const MeasureEncoding>>
        cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto key = std::make_tuple(atom_count, int(variant), bound);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::unique_ptr<const MeasureEncoding>(
                                  new MeasureEncoding(atom_count, variant, bound)))
               .first;
    return *it->second;
  }

 private:
  static SetAlgebra canonical_atoms(std::size_t atom_count) {
    std::vector<std::vector<int>> atoms(atom_count);
    for (std::size_t t = 0; t < atom_count; ++t) atoms[t] = {int(t)};
    return SetAlgebra(atom_count, std::move(atoms));
  }

  void require_same_algebra_ptr(const MeasureTable& m) const {
    if (m.algebra().atom_count() != algebra_->atom_count())
      throw std::invalid_argument("measure table atom count differs from the encoding's");
  }

  void build_partition_functor() {
    const Finite2Category& cat = index_->category();
    std::vector<std::shared_ptr<const FinitePreorder>> objects;
    for (std::size_t obj = 0; obj <= index_->bound(); ++obj) {
      const std::size_t n = family_count(int(obj));
      std::vector<std::string> names(n);
      std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
      for (std::size_t e = 0; e < n; ++e) {
        std::string nm = "[";
        for (std::size_t b = 0; b < obj; ++b)
          nm += (b ? "|" : "") + algebra_->mask_name(family_block(int(obj), int(e), int(b)));
        names[e] = nm + "]";
        for (std::size_t e2 = 0; e2 < n; ++e2) leq[e][e2] = family_leq(int(obj), int(e), int(e2));
      }
      objects.push_back(std::make_shared<FinitePoset>(std::move(names), std::move(leq)));
    }
    std::vector<MonotoneMap> actions;
    for (std::size_t mor = 0; mor < cat.num_morphisms(); ++mor) {
      const PartialMap& p = index_->map_of(int(mor));
      std::vector<int> table(family_count(p.src));
      for (std::size_t e = 0; e < table.size(); ++e) {
        std::vector<SetAlgebra::Mask> blocks(p.dst, 0);
        for (int b = 0; b < p.src; ++b)
          if (p.table[b] >= 0) blocks[p.table[b]] |= family_block(p.src, int(e), b);
        table[e] = family_of_blocks(p.dst, blocks);
      }
      actions.emplace_back(objects[cat.source(int(mor))], objects[cat.target(int(mor))],
                           std::move(table));
    }
    partitions_ = PosetFunctor(index_->category_ptr(), std::move(objects), std::move(actions));
  }

  bool family_leq(int obj, int e1, int e2) const {
    if (index_->variant() == IndexVariant::total) return e1 == e2;
    std::size_t radix = std::size_t(obj) + 1;
    for (std::size_t t = 0; t < algebra_->atom_count(); ++t) {
      int d1 = int(e1 % radix), d2 = int(e2 % radix);
      if (d1 != obj && d1 != d2) return false;  // assigned atoms must agree
      e1 = int(e1 / radix);
      e2 = int(e2 / radix);
    }
    return true;
  }

  std::shared_ptr<const SetAlgebra> algebra_;
  std::shared_ptr<const IndexCategory> index_;
  WeightFunctor weights_;
  PosetFunctor partitions_;
};

}  // namespace kanmeasure
