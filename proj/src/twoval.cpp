#include "bipolar/twoval.hpp"

#include <algorithm>
#include <functional>

namespace bipolar {

Poset Poset::make(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw Error(ErrorKind::Malformed, "duplicate poset element");
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  auto index = [&](const std::string& e) {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) throw Error(ErrorKind::UnknownObject, "unknown element '" + e + "'", {e});
    return static_cast<int>(it - elements.begin());
  };
  for (const auto& [a, b] : leq) m[index(a)][index(b)] = true;
  return from_matrix(std::move(elements), std::move(m));
}

Poset Poset::from_matrix(std::vector<std::string> elements, std::vector<std::vector<bool>> leq) {
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  Poset p;
  p.elements_ = std::move(elements);
  p.leq_ = std::move(leq);
  return p;
}

int Poset::find(const std::string& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) throw Error(ErrorKind::UnknownObject, "unknown element '" + e + "'", {e});
  return static_cast<int>(it - elements_.begin());
}

std::vector<std::pair<std::string, std::string>> Poset::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && leq_[i][j]) out.push_back({elements_[i], elements_[j]});
  return out;
}

bool Poset::antisymmetric() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (leq_[i][j] && leq_[j][i]) return false;
  return true;
}

FinCat Poset::category() const { return cats::preorder(elements_, pairs()); }

std::vector<Poset> all_posets(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) m[i][i] = true;
  std::vector<Poset> out;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == slots.size()) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (m[a][b] && m[b][c] && !m[a][c]) return;
      out.push_back(Poset::from_matrix(names, m));
      return;
    }
    auto [i, j] = slots[k];
    for (int choice = 0; choice < 3; ++choice) {
      m[i][j] = choice == 1;
      m[j][i] = choice == 2;
      go(k + 1);
    }
    m[i][j] = m[j][i] = false;
  };
  go(0);
  return out;
}

Subset subset_of(const Poset& x, const std::vector<std::string>& members) {
  Subset s(x.size(), false);
  for (const auto& m : members) s[x.find(m)] = true;
  return s;
}

std::vector<std::string> members(const Poset& x, const Subset& s) {
  std::vector<std::string> out;
  for (int i = 0; i < x.size(); ++i)
    if (s[i]) out.push_back(x.element(i));
  return out;
}

const char* to_string(SubsetKind k) {
  switch (k) {
    case SubsetKind::sieve: return "sieve";
    case SubsetKind::cosieve: return "cosieve";
    case SubsetKind::clopen: return "clopen";
    case SubsetKind::neither: return "neither";
  }
  return "neither";
}

bool is_sieve(const Poset& x, const Subset& p) {
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (p[i] && x.leq(j, i) && !p[j]) return false;
  return true;
}

bool is_cosieve(const Poset& x, const Subset& p) {
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (p[i] && x.leq(i, j) && !p[j]) return false;
  return true;
}

SubsetKind classify_subset(const Poset& x, const Subset& p) {
  bool s = is_sieve(x, p), c = is_cosieve(x, p);
  if (s && c) return SubsetKind::clopen;
  if (s) return SubsetKind::sieve;
  if (c) return SubsetKind::cosieve;
  return SubsetKind::neither;
}

Subset alexandrov_reflect(const Poset& x, const Subset& p, Direction dir) {
  Subset out(x.size(), false);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (p[j] && (dir == Direction::up ? x.leq(j, i) : x.leq(i, j))) out[i] = true;
  return out;
}

Subset alexandrov_coreflect(const Poset& x, const Subset& p, Direction dir) {
  Subset out(x.size(), true);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (!p[j] && (dir == Direction::down ? x.leq(j, i) : x.leq(i, j))) out[i] = false;
  return out;
}

Subset pseudocomplement(const Poset& x, const Subset& p) {
  if (classify_subset(x, p) == SubsetKind::neither) {
    throw Error(ErrorKind::NotFibration, "subset is neither a sieve nor a cosieve", members(x, p));
  }
  Subset out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = !p[i];
  return out;
}

Subset implication(const Poset& x, const Subset& a, const Subset& d) {
  Subset na = pseudocomplement(x, a);
  Subset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = d[i] || na[i];
  return out;
}

bool meets(const Subset& a, const Subset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return true;
  return false;
}

bool contained(const Subset& a, const Subset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

bool two_valued_atom(const Poset& x, const Subset& p) {
  const int n = x.size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    Subset a(n);
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
    if (classify_subset(x, a) == SubsetKind::neither) continue;
    if (contained(p, a) != meets(p, a)) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> nonstrong_atoms(const Poset& x) {
  std::vector<std::vector<std::string>> out;
  std::vector<bool> done(x.size(), false);
  for (int i = 0; i < x.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::string> cls;
    for (int j = i; j < x.size(); ++j) {
      if (x.leq(i, j) && x.leq(j, i)) {
        done[j] = true;
        cls.push_back(x.element(j));
      }
    }
    if (cls.size() > 1) out.push_back(std::move(cls));
  }
  return out;
}

Part subset_part(const CatPtr& category, const Poset& x, const Subset& p) {
  std::vector<std::pair<std::string, std::string>> rel;
  std::vector<std::string> elems = members(x, p);
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (a != b && x.leq(x.find(a), x.find(b))) rel.push_back({a, b});
  auto total = share(cats::preorder(elems, rel));
  std::vector<int> obj(total->object_count()), arr(total->arrow_count());
  for (int o = 0; o < total->object_count(); ++o) obj[o] = category->object_index(total->object(o));
  for (int u = 0; u < total->arrow_count(); ++u) arr[u] = category->arrow_index(total->arrow(u));
  return Part(category, total, obj, arr, true);
}

}  // namespace bipolar
