#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rgplanar/errors.hpp"

namespace rgp {

/// A finite group stored as a dense multiplication table over 0..order-1.
/// Element names are display strings; aliases allow alternative spellings
/// (e.g. "<12>" for a dihedral reflection).
class GroupTable {
 public:
  GroupTable(int order, std::vector<int> mul, int identity,
             std::vector<std::string> names, std::string label = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::optional<int> find(std::string_view name) const;
  int at(std::string_view name) const;  // throws Error when unknown
  void add_alias(std::string alias, int element);
  /// Every accepted spelling (names and aliases).
  const std::unordered_map<std::string, int>& spellings() const { return lookup_; }

  /// Exhaustive scan of associativity, identity and inverses.
  bool verify_axioms() const;
  bool is_abelian() const;

 private:
  int order_;
  std::vector<int> mul_;
  int identity_;
  std::vector<std::string> names_;
  std::string label_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::unordered_map<std::string, int> lookup_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

GroupTable group_cyclic(int n);
/// Symmetries of the n-gon with vertices 1..n. For n >= 3 elements are named
/// by cycle notation; the reflections "<12>" (swapping 1 and 2) and "<13>"
/// (fixing 2) are registered as aliases.
GroupTable group_dihedral(int n);
GroupTable group_symmetric(int n);
GroupTable group_alternating(int n);
GroupTable group_trivial();
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Parses the catalog mini-grammar: atoms E, Z<n>, D<n>, S<n>, A<n> joined
/// by a left-associative "x", e.g. "Z2xA4".
GroupTable parse_group_spec(std::string_view spec);

/// Default order cap for group_isomorphic.
inline constexpr int kIsomorphismOrderCap = 120;

bool group_isomorphic(const GroupTable& g, const GroupTable& h,
                      int order_cap = kIsomorphismOrderCap);

/// Subgroup generated by `gens` as a membership mask.
std::vector<bool> generated_subgroup(const GroupTable& g, const std::vector<int>& gens);
bool generates_group(const GroupTable& g, const std::vector<int>& gens);

/// Sorted, duplicate-free sequence of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<int> members);
  ElementSet(std::initializer_list<int> members)
      : ElementSet(std::vector<int>(members)) {}

  const std::vector<int>& members() const { return members_; }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int x) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  int operator[](size_t i) const { return members_[i]; }

  bool is_subset_of(const ElementSet& other) const;

  auto operator<=>(const ElementSet&) const = default;
  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<int> members_;
};

/// The right group G x R_k. Element (g, r_j) (band j is 0-based here and
/// printed 1-based) has index j * |G| + g.
class RightGroupTable {
 public:
  RightGroupTable(GroupPtr group, int k);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int k() const { return k_; }
  int size() const { return group_->order() * k_; }
  int group_order() const { return group_->order(); }

  int index(int g, int band) const { return band * group_->order() + g; }
  int group_part(int s) const { return s % group_->order(); }
  int band(int s) const { return s / group_->order(); }
  int mul(int s, int t) const {
    return index(group_->mul(group_part(s), group_part(t)), band(t));
  }
  std::string name(int s) const;
  /// Parses "(g,r2)" or "g@r2" / "g@2".
  int parse_element(std::string_view text) const;

  /// Scan of the defining law (g,r_i)(h,r_j) = (gh, r_j).
  bool verify_law() const;

 private:
  GroupPtr group_;
  int k_;
};

RightGroupTable right_group(const GroupTable& g, int k);
RightGroupTable right_group(GroupPtr g, int k);

ElementSet semigroup_closure(const RightGroupTable& s, const ElementSet& t);

struct Projections {
  ElementSet group_part;            // pi_G(C)
  ElementSet bands;                 // pi_R(C), as 0-based band indices
  std::vector<ElementSet> per_band; // pi_G(C)_j for j = 0..k-1
  std::vector<int> multiplicity;    // c_a for every a in G
};

Projections projections(const RightGroupTable& s, const ElementSet& c);

/// Generation test through the projections: pi_G(C) generates G and every
/// band is hit.
bool generates_right_group(const RightGroupTable& s, const ElementSet& c);

}  // namespace rgp
