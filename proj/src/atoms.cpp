#include "bipolar/atoms.hpp"

#include <map>
#include <set>

#include "bipolar/catalog.hpp"

namespace bipolar {

std::optional<int> eventually_idempotent(const FinCat& c, int f) {
  if (c.src(f) != c.tgt(f)) throw Error(ErrorKind::NotEndo, c.arrow(f) + " is not an endoarrow", {c.arrow(f)});
  std::vector<int> seen(c.arrow_count(), 0);
  int power = f;
  for (int n = 1;; ++n) {
    int next = c.compose(power, f);
    if (next == power) return n;
    if (seen[power]++) return std::nullopt;
    power = next;
  }
}

int idempotent_power(const FinCat& c, int f) {
  auto n = eventually_idempotent(c, f);
  if (!n) throw Error(ErrorKind::NotEndo, c.arrow(f) + " is not eventually idempotent", {c.arrow(f)});
  int power = f;
  for (int i = 1; i < *n; ++i) power = c.compose(power, f);
  return power;
}

// ------------------------------------------------------------------ family

Presheaf idempotent_atom(const CatPtr& base, int e, Side side) {
  return reflect(parts::idempotent(base, e), side).presheaf;
}

std::vector<FamilyMember> default_family(const CatPtr& base) {
  const FinCat& c = *base;
  std::vector<FamilyMember> out;
  for (int x = 0; x < c.object_count(); ++x) {
    out.push_back({"down " + c.object(x), presheaves::representable(base, x, Variance::contra)});
    out.push_back({"up " + c.object(x), presheaves::representable(base, x, Variance::co)});
  }
  for (int e : catalog::idempotents(c)) {
    if (c.is_identity(e)) continue;
    out.push_back({"down " + c.arrow(e), idempotent_atom(base, e, Side::open)});
    out.push_back({"up " + c.arrow(e), idempotent_atom(base, e, Side::closed)});
  }
  std::vector<std::string> s;
  for (int k = 0; k <= 2; ++k) {
    Presheaf co = presheaves::constant(base, s);
    out.push_back({"constant " + std::to_string(k) + " (closed)", co});
    out.push_back({"constant " + std::to_string(k) + " (open)",
                   Presheaf(base, Variance::contra, co.fibres(), co.transitions(), false)});
    s.push_back(std::to_string(k));
  }
  return out;
}

// ------------------------------------------------------------------- atoms

namespace {

struct MemberData {
  bool df;
  std::vector<PartMorphism> homs;
  TensorSet ten;
};

MemberData member_data(const Part& p, const Presheaf& member) {
  Part pa = elements(member);
  bool df = member.variance() == Variance::contra;
  return {df, hom_over(p, pa), df ? tensor(pa, p) : tensor(p, pa)};
}

bool bijective_at(const MemberData& m, const TensorSet& pp, int u) {
  if (m.homs.size() != static_cast<std::size_t>(m.ten.size())) return false;
  auto [l, r] = pp.representative(u);
  std::vector<bool> hit(m.ten.size(), false);
  for (const auto& alpha : m.homs) {
    int c = m.df ? m.ten.class_of(alpha.obj[l], r) : m.ten.class_of(l, alpha.obj[r]);
    if (hit[c]) return false;
    hit[c] = true;
  }
  return true;
}

}  // namespace

bool is_biuniversal(const Part& p, const TensorSet& pp, int u, const Presheaf& member) {
  return bijective_at(member_data(p, member), pp, u);
}

std::optional<BiuniversalWitness> atom_check(const Part& p, const std::vector<FamilyMember>& family) {
  TensorSet pp = tensor(p, p);
  std::vector<MemberData> data;
  for (const auto& m : family) data.push_back(member_data(p, m.presheaf));
  for (int u = 0; u < pp.size(); ++u) {
    bool ok = true;
    for (const auto& d : data) {
      if (!bijective_at(d, pp, u)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    BiuniversalWitness w;
    w.part = p;
    w.u = u;
    w.u_name = pp.product.part.total()->object(pp.classes.rep(u));
    for (const auto& m : family) w.checked_family.push_back(m.name);
    return w;
  }
  return std::nullopt;
}

std::optional<BiuniversalWitness> atom_check(const Part& p) { return atom_check(p, default_family(p.base())); }

// ----------------------------------------------------------------- Karoubi

KaroubiCat karoubi(const CatPtr& x) {
  const FinCat& c = *x;
  std::vector<int> idems = catalog::idempotents(c);
  CategoryBuilder b;
  std::vector<int> obj_of_idem(c.arrow_count(), -1);
  for (int e : idems) obj_of_idem[e] = b.add_object(c.arrow(e));
  struct Entry {
    int e, f, e2;
  };
  std::vector<Entry> entries;
  std::map<std::tuple<int, int, int>, int> index;
  for (int e : idems) {
    for (int e2 : idems) {
      for (int f : c.hom(c.src(e), c.src(e2))) {
        if (c.compose(f, e) != f || c.compose(e2, f) != f) continue;
        int a = b.add_arrow("<" + c.arrow(e) + "," + c.arrow(f) + "," + c.arrow(e2) + ">", obj_of_idem[e], obj_of_idem[e2]);
        entries.push_back({e, f, e2});
        index[{e, f, e2}] = a;
        if (e == e2 && f == e) b.set_identity(obj_of_idem[e], a);
      }
    }
  }
  auto cat = share(b.build(
      [&](int g, int f) {
        const Entry& eg = entries[g];
        const Entry& ef = entries[f];
        return index.at({ef.e, c.compose(eg.f, ef.f), eg.e2});
      },
      false));

  KaroubiCat k;
  k.cat = cat;
  k.idempotent_of.resize(cat->object_count());
  k.arrow_of.resize(cat->arrow_count());
  for (int e : idems) k.idempotent_of[cat->find_object(c.arrow(e))] = e;
  for (const auto& [key, a] : index) {
    auto [e, f, e2] = key;
    k.arrow_of[cat->find_arrow("<" + c.arrow(e) + "," + c.arrow(f) + "," + c.arrow(e2) + ">")] = f;
  }
  std::vector<int> obj(c.object_count()), arr(c.arrow_count());
  for (int o = 0; o < c.object_count(); ++o) obj[o] = cat->find_object(c.arrow(c.identity(o)));
  for (int f = 0; f < c.arrow_count(); ++f) {
    arr[f] = cat->find_arrow("<" + c.arrow(c.identity(c.src(f))) + "," + c.arrow(f) + "," +
                             c.arrow(c.identity(c.tgt(f))) + ">");
  }
  k.embedding = FinFunctor(x, cat, obj, arr, false);
  return k;
}

bool idempotents_split(const FinCat& c, std::string* witness) {
  for (int e : catalog::idempotents(c)) {
    int x = c.src(e);
    bool split = false;
    for (int y = 0; y < c.object_count() && !split; ++y) {
      for (int r : c.hom(x, y)) {
        for (int i : c.hom(y, x)) {
          if (c.compose(i, r) == e && c.is_identity(c.compose(r, i))) split = true;
        }
      }
    }
    if (!split) {
      if (witness) *witness = c.arrow(e);
      return false;
    }
  }
  return true;
}

bool is_equivalence(const FinFunctor& f) {
  const FinCat& d = *f.dom();
  const FinCat& c = *f.cod();
  for (int x = 0; x < d.object_count(); ++x) {
    for (int y = 0; y < d.object_count(); ++y) {
      auto src = d.hom(x, y);
      auto tgt = c.hom(f.obj(x), f.obj(y));
      if (src.size() != tgt.size()) return false;
      std::set<int> images;
      for (int g : src) images.insert(f.arr(g));
      if (images.size() != tgt.size()) return false;
    }
  }
  for (int z = 0; z < c.object_count(); ++z) {
    bool reached = false;
    for (int x = 0; x < d.object_count() && !reached; ++x) {
      for (int u : c.hom(z, f.obj(x))) {
        for (int v : c.hom(f.obj(x), z)) {
          if (c.is_identity(c.compose(v, u)) && c.is_identity(c.compose(u, v))) reached = true;
        }
      }
    }
    if (!reached) return false;
  }
  return true;
}

std::optional<RetractWitness> retract_of_representable(const CatPtr& base, int e, Side side) {
  const FinCat& c = *base;
  Variance v = variance_of(side);
  Presheaf rep = presheaves::representable(base, c.src(e), v);
  Presheaf atom = idempotent_atom(base, e, side);
  NatTrans idem;
  for (int y = 0; y < c.object_count(); ++y) {
    idem.comps.emplace_back();
    for (const auto& g : rep.fibre(y)) {
      int a = c.arrow_index(g);
      int image = v == Variance::co ? c.compose(a, e) : c.compose(e, a);
      idem.comps[y].push_back(rep.find(y, c.arrow(image)));
    }
  }
  NatTrans id = identity_nat(atom);
  for (const auto& s : natural_transformations(atom, rep)) {
    for (const auto& r : natural_transformations(rep, atom)) {
      if (compose(r, s) == id && compose(s, r) == idem) return RetractWitness{s, r};
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ atomic pairs

AtomicPair atomic_pair(const CatPtr& base, int e) {
  Part pe = parts::idempotent(base, e);
  Reflector down(pe, Side::open), up(pe, Side::closed);
  TensorSet pp = tensor(pe, pe);
  TensorSet pairing = tensor(down.result().elements.part, up.result().elements.part);
  int u = tensor_map(pp, pairing, down.result().unit, up.result().unit)[pp.class_of(0, 0)];
  return AtomicPair{e, down.result().presheaf, up.result().presheaf, std::move(pairing), u};
}

DualitySigma::DualitySigma(const CatPtr& base) : base_(base) {
  for (int e : catalog::idempotents(*base)) pairs_.push_back(atomic_pair(base, e));
  const int n = static_cast<int>(pairs_.size());
  std::vector<Elements> down_el, up_el;
  for (const auto& p : pairs_) {
    down_el.push_back(elements_of(p.down));
    up_el.push_back(elements_of(p.up));
  }
  down_.assign(n, std::vector<std::vector<NatTrans>>(n));
  up_.assign(n, std::vector<std::vector<NatTrans>>(n));
  sigma_.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      down_[i][j] = natural_transformations(pairs_[i].down, pairs_[j].down);
      up_[j][i] = natural_transformations(pairs_[j].up, pairs_[i].up);
    }
  }
  for (int i = 0; i < n; ++i) {
    PartMorphism id_up = identity_morphism(up_el[i].part);
    for (int j = 0; j < n; ++j) {
      PartMorphism id_down = identity_morphism(down_el[j].part);
      TensorSet mixed = tensor(down_el[j].part, up_el[i].part);  // ten(↓e', ↑e)
      std::map<int, int> by_image;
      std::set<int> clashes;
      for (std::size_t k = 0; k < up_[j][i].size(); ++k) {
        PartMorphism beta = to_part_morphism(up_el[j], up_el[i], up_[j][i][k]);
        int image = tensor_map(pairs_[j].pairing, mixed, id_down, beta)[pairs_[j].u];
        if (!by_image.emplace(image, static_cast<int>(k)).second) clashes.insert(image);
      }
      for (const auto& alpha : down_[i][j]) {
        PartMorphism a = to_part_morphism(down_el[i], down_el[j], alpha);
        int image = tensor_map(pairs_[i].pairing, mixed, a, id_up)[pairs_[i].u];
        auto it = by_image.find(image);
        sigma_[i][j].push_back(it == by_image.end() || clashes.count(image) ? -1 : it->second);
      }
    }
  }
}

bool DualitySigma::functorial(std::string* witness) const {
  const FinCat& c = *base_;
  const int n = static_cast<int>(pairs_.size());
  auto fail = [&](const std::string& why) {
    if (witness) *witness = why;
    return false;
  };
  auto index_of = [](const std::vector<NatTrans>& v, const NatTrans& t) {
    return static_cast<int>(std::find(v.begin(), v.end(), t) - v.begin());
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::string where = c.arrow(pairs_[i].idempotent) + "," + c.arrow(pairs_[j].idempotent);
      if (down_[i][j].size() != up_[j][i].size()) return fail("hom sizes differ at " + where);
      std::set<int> seen(sigma_[i][j].begin(), sigma_[i][j].end());
      if (seen.count(-1) || seen.size() != sigma_[i][j].size()) return fail("not a bijection at " + where);
    }
    int id = index_of(down_[i][i], identity_nat(pairs_[i].down));
    if (up_[i][i][sigma_[i][i][id]] != identity_nat(pairs_[i].up)) {
      return fail("identity not preserved at " + c.arrow(pairs_[i].idempotent));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < down_[i][j].size(); ++a) {
          for (std::size_t b = 0; b < down_[j][k].size(); ++b) {
            NatTrans ba = compose(down_[j][k][b], down_[i][j][a]);
            const NatTrans& lhs = up_[k][i][sigma_[i][k][index_of(down_[i][k], ba)]];
            NatTrans rhs = compose(up_[j][i][sigma_[i][j][a]], up_[k][j][sigma_[j][k][b]]);
            if (lhs != rhs) return fail("composition not reversed");
          }
        }
      }
    }
  }
  return true;
}

// -------------------------------------------------------- Isbell conjugates

namespace {

std::string nat_name(const Presheaf& target, const NatTrans& t) {
  std::string s = "[";
  for (std::size_t x = 0; x < t.comps.size(); ++x) {
    if (x) s += "|";
    for (std::size_t i = 0; i < t.comps[x].size(); ++i) {
      s += (i ? "," : "") + target.fibre(static_cast<int>(x))[t.comps[x][i]];
    }
  }
  return s + "]";
}

}  // namespace

Presheaf isbell_conjugate(const Presheaf& a) {
  const CatPtr& base = a.base();
  const FinCat& c = *base;
  const int n = c.object_count();
  Variance v = a.variance();
  std::vector<Presheaf> reps;
  std::vector<std::vector<NatTrans>> nats(n);
  std::vector<std::map<NatTrans, int>> lookup(n);
  std::vector<std::vector<std::string>> fib(n);
  for (int x = 0; x < n; ++x) {
    reps.push_back(presheaves::representable(base, x, v));
    nats[x] = natural_transformations(a, reps[x]);
    for (std::size_t k = 0; k < nats[x].size(); ++k) {
      lookup[x][nats[x][k]] = static_cast<int>(k);
      fib[x].push_back(nat_name(reps[x], nats[x][k]));
    }
  }
  std::vector<std::vector<int>> trans(c.arrow_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    // contravariant A: ↓f: ↓x -> ↓y by f∘-; covariant D: ↑f: ↑y -> ↑x by -∘f
    int from = v == Variance::contra ? c.src(f) : c.tgt(f);
    int to = v == Variance::contra ? c.tgt(f) : c.src(f);
    NatTrans post;
    for (int z = 0; z < n; ++z) {
      post.comps.emplace_back();
      for (const auto& g : reps[from].fibre(z)) {
        int a0 = c.arrow_index(g);
        int image = v == Variance::contra ? c.compose(f, a0) : c.compose(a0, f);
        post.comps[z].push_back(reps[to].find(z, c.arrow(image)));
      }
    }
    for (const auto& t : nats[from]) trans[f].push_back(lookup[to].at(compose(post, t)));
  }
  return Presheaf(base, flip(v), fib, trans, false);
}

bool is_dedekind_cut(const Presheaf& a, const Presheaf& d) {
  if (a.variance() != Variance::contra || d.variance() != Variance::co) return false;
  return isomorphic(a, isbell_conjugate(d)) && isomorphic(d, isbell_conjugate(a));
}

// -------------------------------------------------------------- evaluation

std::vector<std::string> evaluate_at_atom(const CatPtr& base, int e, const Presheaf& d) {
  const FinCat& c = *base;
  if (c.src(e) != c.tgt(e)) throw Error(ErrorKind::NotEndo, c.arrow(e) + " is not an endoarrow", {c.arrow(e)});
  std::vector<std::string> out;
  int x = c.src(e);
  for (int s = 0; s < d.size(x); ++s) {
    if (d.act(e, s) == s) out.push_back(d.fibre(x)[s]);
  }
  return out;
}

Presheaf extend_to_karoubi(const KaroubiCat& k, const Presheaf& a) {
  const FinCat& kc = *k.cat;
  const CatPtr& base = a.base();
  std::vector<std::vector<std::string>> fib(kc.object_count());
  std::vector<std::vector<int>> fixed(kc.object_count());
  std::vector<std::map<int, int>> pos(kc.object_count());
  for (int o = 0; o < kc.object_count(); ++o) {
    int e = k.idempotent_of[o];
    int x = base->src(e);
    for (int s = 0; s < a.size(x); ++s) {
      if (a.act(e, s) != s) continue;
      pos[o][s] = static_cast<int>(fixed[o].size());
      fixed[o].push_back(s);
      fib[o].push_back(a.fibre(x)[s]);
    }
  }
  std::vector<std::vector<int>> trans(kc.arrow_count());
  for (int u = 0; u < kc.arrow_count(); ++u) {
    int from = a.variance() == Variance::co ? kc.src(u) : kc.tgt(u);
    int to = a.variance() == Variance::co ? kc.tgt(u) : kc.src(u);
    for (int s : fixed[from]) trans[u].push_back(pos[to].at(a.act(k.arrow_of[u], s)));
  }
  return Presheaf(k.cat, a.variance(), fib, trans, true);
}

}  // namespace bipolar
