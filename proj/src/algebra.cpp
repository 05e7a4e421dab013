#include "rgplanar/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>

namespace rgp {

GroupTable::GroupTable(int order, std::vector<int> mul, int identity,
                       std::vector<std::string> names, std::string label)
    : order_(order),
      mul_(std::move(mul)),
      identity_(identity),
      names_(std::move(names)),
      label_(std::move(label)) {
  if (order_ < 1) throw Error("group order must be positive");
  if (mul_.size() != static_cast<size_t>(order_) * order_)
    throw Error("multiplication table has wrong size");
  if (names_.size() != static_cast<size_t>(order_))
    throw Error("need one name per element");
  for (int v : mul_)
    if (v < 0 || v >= order_) throw Error("multiplication table entry out of range");
  if (identity_ < 0 || identity_ >= order_) throw Error("identity out of range");

  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (this->mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
  element_order_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    int x = a;
    int d = 1;
    while (x != identity_ && d <= order_) {
      x = this->mul(x, a);
      ++d;
    }
    element_order_[a] = d;
  }
  for (int a = 0; a < order_; ++a)
    if (!lookup_.emplace(names_[a], a).second)
      throw Error("duplicate element name '" + names_[a] + "'");
}

std::optional<int> GroupTable::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int GroupTable::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error("unknown element '" + std::string(name) + "' in group " + label_);
}

void GroupTable::add_alias(std::string alias, int element) {
  lookup_.emplace(std::move(alias), element);
}

bool GroupTable::verify_axioms() const {
  for (int a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) return false;
    if (inverse_[a] < 0 || mul(inverse_[a], a) != identity_) return false;
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

namespace {

using Perm = std::vector<int>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// (p*q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

GroupTable from_permutations(const std::vector<Perm>& perms, std::string label) {
  const int n = static_cast<int>(perms.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index.emplace(perms[i], i);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = index.at(compose(perms[a], perms[b]));
  std::vector<std::string> names;
  int identity = -1;
  for (int i = 0; i < n; ++i) {
    names.push_back(cycle_notation(perms[i]));
    if (names.back() == "e") identity = i;
  }
  return GroupTable(n, std::move(mul), identity, std::move(names), std::move(label));
}

std::vector<Perm> all_permutations(int n, bool even_only) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

GroupTable group_trivial() { return GroupTable(1, {0}, 0, {"e"}, "E"); }

GroupTable group_cyclic(int n) {
  if (n < 1) throw Error("Z_n needs n >= 1");
  std::vector<int> mul(static_cast<size_t>(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return GroupTable(n, std::move(mul), 0, std::move(names), "Z" + std::to_string(n));
}

GroupTable group_dihedral(int n) {
  if (n < 2) throw Error("D_n needs n >= 2");
  // Element (s, t) acts on polygon points 0..n-1 as p -> (-1)^s p + t.
  const int order = 2 * n;
  auto idx = [n](int s, int t) { return s * n + ((t % n) + n) % n; };
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int t1 = 0; t1 < n; ++t1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int t2 = 0; t2 < n; ++t2) {
          const int eps1 = s1 ? -1 : 1;
          mul[static_cast<size_t>(idx(s1, t1)) * order + idx(s2, t2)] = idx(s1 ^ s2, eps1 * t2 + t1);
        }
  std::vector<std::string> names(order);
  if (n >= 3) {
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < n; ++t) {
        Perm p(n);
        for (int x = 0; x < n; ++x) p[x] = (((s ? -x : x) + t) % n + n) % n;
        names[idx(s, t)] = cycle_notation(p);
      }
  } else {
    names = {"e", "(12)", "<13>", "<12>"};
  }
  GroupTable g(order, std::move(mul), 0, std::move(names), "D" + std::to_string(n));
  if (n >= 3) {
    g.add_alias("<12>", idx(1, 1));
    g.add_alias("<13>", idx(1, 2));
  }
  return g;
}

GroupTable group_symmetric(int n) {
  if (n < 2 || n > 5) throw Error("S_n supported for 2 <= n <= 5");
  return from_permutations(all_permutations(n, false), "S" + std::to_string(n));
}

GroupTable group_alternating(int n) {
  if (n < 2 || n > 5) throw Error("A_n supported for 2 <= n <= 5");
  return from_permutations(all_permutations(n, true), "A" + std::to_string(n));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int m = g.order();
  const int n = h.order();
  const int order = m * n;
  std::vector<int> mul(static_cast<size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < n; ++b1) {
      const int x = a1 * n + b1;
      names[x] = "(" + g.name(a1) + "," + h.name(b1) + ")";
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          mul[static_cast<size_t>(x) * order + a2 * n + b2] = g.mul(a1, a2) * n + h.mul(b1, b2);
    }
  GroupTable product(order, std::move(mul), g.identity() * n + h.identity(), std::move(names),
                     g.label() + "x" + h.label());
  if (g.spellings().size() > static_cast<size_t>(m) || h.spellings().size() > static_cast<size_t>(n))
    for (const auto& [sa, a] : g.spellings())
      for (const auto& [sb, b] : h.spellings()) product.add_alias("(" + sa + "," + sb + ")", a * n + b);
  return product;
}

GroupTable parse_group_spec(std::string_view spec) {
  std::vector<std::string_view> atoms;
  size_t start = 0;
  for (size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == 'x' || spec[i] == 'X') {
      atoms.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  auto parse_atom = [&](std::string_view a) -> GroupTable {
    if (a.empty()) throw Error("empty factor in group spec '" + std::string(spec) + "'");
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(a[0])));
    if (kind == 'E' && a.size() == 1) return group_trivial();
    int n = 0;
    auto [ptr, ec] = std::from_chars(a.data() + 1, a.data() + a.size(), n);
    if (ec != std::errc() || ptr != a.data() + a.size())
      throw Error("bad group atom '" + std::string(a) + "'");
    switch (kind) {
      case 'Z': return group_cyclic(n);
      case 'D': return group_dihedral(n);
      case 'S': return group_symmetric(n);
      case 'A': return group_alternating(n);
      default: throw Error("unknown group atom '" + std::string(a) + "'");
    }
  };
  GroupTable result = parse_atom(atoms.front());
  for (size_t i = 1; i < atoms.size(); ++i) result = direct_product(result, parse_atom(atoms[i]));
  result.set_label(std::string(spec));
  return result;
}

std::vector<bool> generated_subgroup(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::deque<int> queue{g.identity()};
  in[g.identity()] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int c : gens) {
      const int y = g.mul(x, c);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

bool generates_group(const GroupTable& g, const std::vector<int>& gens) {
  const auto in = generated_subgroup(g, gens);
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

namespace {

std::vector<int> order_profile(const GroupTable& g) {
  std::vector<int> p;
  for (int a = 0; a < g.order(); ++a) p.push_back(g.element_order(a));
  std::sort(p.begin(), p.end());
  return p;
}

// Greedy small generating set, preferring elements of large order.
std::vector<int> pick_generators(const GroupTable& g) {
  std::vector<int> elems(g.order());
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<bool> span = generated_subgroup(g, gens);
  for (int a : elems) {
    if (span[a]) continue;
    gens.push_back(a);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

// Extends generator images to a map by BFS over words; checks it is a
// well-defined bijective homomorphism.
bool extends_to_isomorphism(const GroupTable& g, const GroupTable& h, const std::vector<int>& gens,
                            const std::vector<int>& images) {
  std::vector<int> phi(g.order(), -1);
  std::vector<bool> used(h.order(), false);
  phi[g.identity()] = h.identity();
  used[h.identity()] = true;
  std::deque<int> queue{g.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      const int fy = h.mul(phi[x], images[i]);
      if (phi[y] < 0) {
        if (used[fy]) return false;
        phi[y] = fy;
        used[fy] = true;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        return false;
      }
    }
  }
  return std::all_of(phi.begin(), phi.end(), [](int v) { return v >= 0; });
}

}  // namespace

bool group_isomorphic(const GroupTable& g, const GroupTable& h, int order_cap) {
  if (g.order() > order_cap || h.order() > order_cap)
    throw CapExceeded("group_isomorphic: order exceeds cap " + std::to_string(order_cap));
  if (g.order() != h.order()) return false;
  if (order_profile(g) != order_profile(h)) return false;
  if (g.is_abelian() != h.is_abelian()) return false;

  const std::vector<int> gens = pick_generators(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int b = 0; b < h.order(); ++b)
      if (h.element_order(b) == g.element_order(gens[i])) candidates[i].push_back(b);

  std::vector<int> images(gens.size());
  auto search = [&](auto&& self, size_t depth) -> bool {
    if (depth == gens.size()) return extends_to_isomorphism(g, h, gens, images);
    for (int b : candidates[depth]) {
      images[depth] = b;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

ElementSet::ElementSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElementSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

RightGroupTable::RightGroupTable(GroupPtr group, int k) : group_(std::move(group)), k_(k) {
  if (!group_) throw Error("right group needs a group");
  if (k_ < 1) throw Error("band size k must be >= 1");
}

std::string RightGroupTable::name(int s) const {
  return "(" + group_->name(group_part(s)) + ",r" + std::to_string(band(s) + 1) + ")";
}

int RightGroupTable::parse_element(std::string_view text) const {
  std::string_view g_name;
  std::string_view band_text;
  if (auto at = text.rfind('@'); at != std::string_view::npos) {
    g_name = text.substr(0, at);
    band_text = text.substr(at + 1);
  } else if (text.size() > 2 && text.front() == '(' && text.back() == ')') {
    const auto comma = text.rfind(',');
    if (comma == std::string_view::npos) throw Error("bad element '" + std::string(text) + "'");
    g_name = text.substr(1, comma - 1);
    band_text = text.substr(comma + 1, text.size() - comma - 2);
  } else {
    throw Error("bad right-group element '" + std::string(text) + "'");
  }
  if (!band_text.empty() && (band_text[0] == 'r' || band_text[0] == 'R')) band_text.remove_prefix(1);
  int j = 0;
  auto [ptr, ec] = std::from_chars(band_text.data(), band_text.data() + band_text.size(), j);
  if (ec != std::errc() || ptr != band_text.data() + band_text.size() || j < 1 || j > k_)
    throw Error("bad band in element '" + std::string(text) + "'");
  return index(group_->at(g_name), j - 1);
}

bool RightGroupTable::verify_law() const {
  const int n = size();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int st = mul(s, t);
      if (group_part(st) != group_->mul(group_part(s), group_part(t)) || band(st) != band(t))
        return false;
    }
  return true;
}

RightGroupTable right_group(const GroupTable& g, int k) {
  return RightGroupTable(std::make_shared<const GroupTable>(g), k);
}

RightGroupTable right_group(GroupPtr g, int k) { return RightGroupTable(std::move(g), k); }

ElementSet semigroup_closure(const RightGroupTable& s, const ElementSet& t) {
  if (t.empty()) throw Error("semigroup_closure: empty generating set");
  for (int x : t)
    if (x < 0 || x >= s.size()) throw Error("semigroup_closure: element out of range");
  std::vector<bool> in(s.size(), false);
  std::deque<int> queue;
  for (int x : t) {
    in[x] = true;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int c : t) {
      const int y = s.mul(x, c);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x)
    if (in[x]) out.push_back(x);
  return ElementSet(std::move(out));
}

Projections projections(const RightGroupTable& s, const ElementSet& c) {
  const int m = s.group_order();
  std::vector<std::vector<int>> per_band(s.k());
  std::vector<int> group_part;
  std::vector<int> bands;
  std::vector<int> multiplicity(m, 0);
  for (int x : c) {
    const int g = s.group_part(x);
    const int j = s.band(x);
    per_band[j].push_back(g);
    group_part.push_back(g);
    bands.push_back(j);
    ++multiplicity[g];
  }
  Projections p;
  p.group_part = ElementSet(std::move(group_part));
  p.bands = ElementSet(std::move(bands));
  for (auto& b : per_band) p.per_band.emplace_back(std::move(b));
  p.multiplicity = std::move(multiplicity);
  return p;
}

bool generates_right_group(const RightGroupTable& s, const ElementSet& c) {
  const Projections p = projections(s, c);
  if (static_cast<int>(p.bands.size()) != s.k()) return false;
  return generates_group(s.group(), p.group_part.members());
}

}  // namespace rgp
