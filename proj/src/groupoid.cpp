#include <algorithm>
#include <deque>
#include <numeric>

#include "bipolar/fibrations.hpp"
#include "bipolar/parts.hpp"

namespace bipolar {

namespace {

// Coset enumeration for the trivial subgroup (HLT strategy with coincidence
// processing). Letter 2k is generator k, 2k+1 its inverse.
class CosetEnumeration {
 public:
  CosetEnumeration(int letters, std::vector<std::vector<int>> relators, long long limit)
      : letters_(letters), relators_(std::move(relators)), limit_(limit) {
    new_coset();
  }

  void run() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const auto& w : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, w);
      }
      if (!live(c)) continue;
      for (int x = 0; x < letters_; ++x) {
        if (table_[c][x] < 0) define(c, x);
      }
    }
    compact();
  }

  int order() const { return static_cast<int>(words_.size()); }
  int act(int coset, const std::vector<int>& word) const {
    for (int x : word) coset = final_[coset][x];
    return coset;
  }
  const std::vector<int>& word(int element) const { return words_[element]; }

 private:
  static int inv(int x) { return x ^ 1; }
  bool live(int c) const { return forward_[c] == c; }

  int new_coset() {
    if (static_cast<long long>(table_.size()) >= limit_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "groupoid reflection needs more than " + std::to_string(limit_) + " arrows");
    }
    table_.emplace_back(letters_, -1);
    forward_.push_back(static_cast<int>(forward_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    forward_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < letters_; ++x) {
        int f = table_[e][x];
        if (f < 0) continue;
        table_[f][inv(x)] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inv(x)] >= 0) {
          merge(e1, table_[f1][inv(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  // Renumber live cosets breadth-first from the identity coset, recording
  // shortlex representative words.
  void compact() {
    std::vector<int> number(table_.size(), -1);
    std::deque<int> queue{0};
    number[0] = 0;
    std::vector<int> order{0};
    words_.assign(1, {});
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int x = 0; x < letters_; ++x) {
        int d = table_[c][x];
        if (number[d] >= 0) continue;
        number[d] = static_cast<int>(order.size());
        order.push_back(d);
        auto w = words_[number[c]];
        w.push_back(x);
        words_.push_back(std::move(w));
        queue.push_back(d);
      }
    }
    final_.assign(order.size(), std::vector<int>(letters_));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < letters_; ++x) final_[i][x] = number[table_[order[i]][x]];
    }
  }

  int letters_;
  std::vector<std::vector<int>> relators_;
  long long limit_;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
  std::vector<std::vector<int>> final_;
  std::vector<std::vector<int>> words_;
};

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x ^= 1;
  return out;
}

}  // namespace

bool is_groupoid(const FinCat& c) {
  for (int f = 0; f < c.arrow_count(); ++f) {
    bool invertible = false;
    for (int g : c.hom(c.tgt(f), c.src(f))) {
      if (c.is_identity(c.compose(g, f)) && c.is_identity(c.compose(f, g))) invertible = true;
    }
    if (!invertible) return false;
  }
  return true;
}

GroupoidReflection groupoid_reflection(const CatPtr& xp, long long budget) {
  const FinCat& c = *xp;
  auto comps = components(c);
  std::vector<CosetEnumeration> groups;
  groups.reserve(comps.size());
  std::vector<std::vector<int>> words(c.arrow_count());
  std::vector<std::vector<std::string>> letter_names(comps.size());
  long long arrows_needed = 0;

  for (int k = 0; k < comps.size(); ++k) {
    const auto& objs = comps.classes[k];
    // spanning tree by breadth-first search over the underlying graph
    std::vector<bool> seen(c.object_count(), false), tree(c.arrow_count(), false);
    std::deque<int> queue{objs.front()};
    seen[objs.front()] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      std::vector<int> incident = c.arrows_from(x);
      incident.insert(incident.end(), c.arrows_to(x).begin(), c.arrows_to(x).end());
      std::sort(incident.begin(), incident.end());
      for (int f : incident) {
        int y = c.src(f) == x ? c.tgt(f) : c.src(f);
        if (seen[y]) continue;
        seen[y] = true;
        tree[f] = true;
        queue.push_back(y);
      }
    }
    int gens = 0;
    for (int x : objs) {
      for (int f : c.arrows_from(x)) {
        if (c.is_identity(f) || tree[f]) continue;
        words[f] = {2 * gens++};
        letter_names[k].push_back(c.arrow(f));
        letter_names[k].push_back(c.arrow(f) + "^-1");
      }
    }
    std::vector<std::vector<int>> relators;
    for (int x : objs) {
      for (int f : c.arrows_from(x)) {
        for (int g : c.arrows_from(c.tgt(f))) {
          auto w = words[g];
          w.insert(w.end(), words[f].begin(), words[f].end());
          auto back = inverse_word(words[c.compose(g, f)]);
          w.insert(w.end(), back.begin(), back.end());
          if (!w.empty()) relators.push_back(std::move(w));
        }
      }
    }
    groups.emplace_back(2 * gens, std::move(relators), budget);
    groups.back().run();
    long long n = static_cast<long long>(objs.size());
    arrows_needed += n * n * groups.back().order();
    if (arrows_needed > budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "groupoid reflection needs more than " + std::to_string(budget) + " arrows");
    }
  }

  CategoryBuilder b;
  for (int x = 0; x < c.object_count(); ++x) b.add_object(c.object(x));
  // arrow_at[k][(i * n + j) * order + g] for objects i, j of component k
  std::vector<std::vector<int>> arrow_at(comps.size());
  std::vector<int> position(c.object_count());
  for (int k = 0; k < comps.size(); ++k) {
    const auto& objs = comps.classes[k];
    for (std::size_t i = 0; i < objs.size(); ++i) position[objs[i]] = static_cast<int>(i);
  }
  struct Key {
    int component, i, j, g;
  };
  std::vector<Key> keys;
  std::vector<std::string> names;
  for (int k = 0; k < comps.size(); ++k) {
    const auto& objs = comps.classes[k];
    const int n = static_cast<int>(objs.size()), order = groups[k].order();
    arrow_at[k].resize(static_cast<std::size_t>(n) * n * order);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int g = 0; g < order; ++g) {
          std::string w;
          for (int letter : groups[k].word(g)) w += (w.empty() ? "" : ".") + letter_names[k][letter];
          if (w.empty()) w = "()";
          names.push_back(c.object(objs[i]) + ">" + c.object(objs[j]) + ":" + w);
          int a = b.add_arrow(names.back(), objs[i], objs[j]);
          arrow_at[k][(i * n + j) * order + g] = a;
          keys.push_back({k, i, j, g});
        }
      }
      b.set_identity(objs[i], arrow_at[k][(i * n + i) * order]);
    }
  }
  auto gcat = share(b.build(
      [&](int gi, int fi) {
        const Key& kg = keys[gi];
        const Key& kf = keys[fi];
        const auto& grp = groups[kf.component];
        const int n = static_cast<int>(comps.classes[kf.component].size());
        int prod = grp.act(kg.g, grp.word(kf.g));
        return arrow_at[kf.component][(kf.i * n + kg.j) * grp.order() + prod];
      },
      false));

  std::vector<int> obj_map(c.object_count()), arr_map(c.arrow_count());
  for (int x = 0; x < c.object_count(); ++x) obj_map[x] = gcat->find_object(c.object(x));
  for (int f = 0; f < c.arrow_count(); ++f) {
    int k = comps.class_of[c.src(f)];
    const auto& grp = groups[k];
    const int n = static_cast<int>(comps.classes[k].size());
    int g = grp.act(0, words[f]);
    int built = arrow_at[k][(position[c.src(f)] * n + position[c.tgt(f)]) * grp.order() + g];
    arr_map[f] = gcat->find_arrow(names[built]);
  }
  return {gcat, FinFunctor(xp, gcat, obj_map, arr_map, true)};
}

Presheaf clopen_reflect(const Part& p, long long budget) {
  auto gr = groupoid_reflection(p.base(), budget);
  const FinCat& base = *p.base();
  const FinCat& g = *gr.groupoid;
  const FinFunctor& q = gr.quotient;
  const int n = base.object_count();
  std::vector<Presheaf> clopen;  // ↕x = G(q-, qx) as a df on the base
  std::vector<Elements> els;
  std::vector<TensorSet> tens;
  std::vector<std::vector<std::string>> fib(n);
  for (int x = 0; x < n; ++x) {
    std::vector<std::vector<std::string>> f(n);
    std::vector<std::vector<int>> hom(n);
    for (int y = 0; y < n; ++y) {
      hom[y] = g.hom(q.obj(y), q.obj(x));
      for (int a : hom[y]) f[y].push_back(g.arrow(a));
    }
    std::vector<std::vector<int>> trans(base.arrow_count());
    for (int h = 0; h < base.arrow_count(); ++h) {
      // h: y -> z acts by precomposition G(qz, qx) -> G(qy, qx)
      const auto& from = hom[base.tgt(h)];
      const auto& to = hom[base.src(h)];
      for (int a : from) {
        int r = g.compose(a, q.arr(h));
        trans[h].push_back(static_cast<int>(std::find(to.begin(), to.end(), r) - to.begin()));
      }
    }
    clopen.emplace_back(p.base(), Variance::contra, f, trans, false);
    els.push_back(elements_of(clopen.back()));
    tens.push_back(tensor(els.back().part, p));
    const TensorSet& t = tens.back();
    for (int c = 0; c < t.size(); ++c) {
      fib[x].push_back(base.object(x) + "~" + t.product.part.total()->object(t.classes.rep(c)));
    }
  }
  PartMorphism id = identity_morphism(p);
  std::vector<std::vector<int>> trans(base.arrow_count());
  for (int h = 0; h < base.arrow_count(); ++h) {
    int x = base.src(h), y = base.tgt(h);
    // ↕x -> ↕y by postcomposition with q(h)
    NatTrans post;
    for (int z = 0; z < n; ++z) {
      post.comps.emplace_back();
      for (const auto& name : clopen[x].fibre(z)) {
        int r = g.compose(q.arr(h), g.arrow_index(name));
        post.comps[z].push_back(clopen[y].find(z, g.arrow(r)));
      }
    }
    PartMorphism m = to_part_morphism(els[x], els[y], post);
    trans[h] = tensor_map(tens[x], tens[y], m, id);
  }
  return Presheaf(p.base(), Variance::co, fib, trans, false);
}

}  // namespace bipolar
