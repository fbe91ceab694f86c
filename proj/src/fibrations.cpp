#include "bipolar/fibrations.hpp"

#include <algorithm>
#include <numeric>

#include "bipolar/parts.hpp"

namespace bipolar {

const char* to_string(FibrationKind k) {
  switch (k) {
    case FibrationKind::df: return "df";
    case FibrationKind::dof: return "dof";
    case FibrationKind::bifibration: return "bifibration";
    case FibrationKind::neither: return "neither";
  }
  return "neither";
}

const char* to_string(Side s) { return s == Side::closed ? "closed" : "open"; }

FibrationKind Classification::kind() const {
  if (df() && dof()) return FibrationKind::bifibration;
  if (df()) return FibrationKind::df;
  if (dof()) return FibrationKind::dof;
  return FibrationKind::neither;
}

namespace {

// Unique lifts of every base arrow at every total object in lifting position,
// or nullopt when some lift is missing or ambiguous.
std::optional<Presheaf> extract(const Part& p, Variance v) {
  const FinCat& base = *p.base();
  const FinCat& t = *p.total();
  const int n = base.object_count();
  std::vector<std::vector<int>> fib(n);
  std::vector<int> pos(t.object_count());
  for (int a = 0; a < t.object_count(); ++a) {
    pos[a] = static_cast<int>(fib[p.over(a)].size());
    fib[p.over(a)].push_back(a);
  }
  std::vector<std::vector<int>> trans(base.arrow_count());
  for (int f = 0; f < base.arrow_count(); ++f) {
    int from = v == Variance::co ? base.src(f) : base.tgt(f);
    trans[f].assign(fib[from].size(), -1);
  }
  for (int u = 0; u < t.arrow_count(); ++u) {
    int f = p.over_arrow(u);
    int anchor = v == Variance::co ? t.src(u) : t.tgt(u);
    int other = v == Variance::co ? t.tgt(u) : t.src(u);
    int& slot = trans[f][pos[anchor]];
    if (slot >= 0) return std::nullopt;
    slot = pos[other];
  }
  for (const auto& row : trans) {
    for (int s : row) {
      if (s < 0) return std::nullopt;
    }
  }
  std::vector<std::vector<std::string>> names(n);
  for (int x = 0; x < n; ++x) {
    for (int a : fib[x]) names[x].push_back(t.object(a));
  }
  return Presheaf(p.base(), v, names, trans, false);
}

}  // namespace

Classification classify_part(const Part& p) {
  Classification c;
  c.contra = extract(p, Variance::contra);
  c.co = extract(p, Variance::co);
  return c;
}

Part opposite(const Part& p) {
  return Part(share(opposite(*p.base())), share(opposite(*p.total())), p.obj_proj(), p.arr_proj(), false);
}

namespace {

Presheaf to_work(const Presheaf& d, const Part& work, Side side) {
  Presheaf w = side == Side::closed ? d : d.on_opposite(work.base());
  if (w.variance() != Variance::co || !same_category(w.base(), work.base())) {
    throw Error(ErrorKind::BaseMismatch, std::string("target presheaf does not match the ") + to_string(side) +
                                             " side of this base");
  }
  return w;
}

ReflectionResult transport(const ReflectionResult& work, const Part& p, Side side) {
  if (side == Side::closed) return work;
  ReflectionResult r;
  r.presheaf = work.presheaf.on_opposite(p.base());
  r.elements = elements_of(r.presheaf);
  r.unit = work.unit;
  return r;
}

}  // namespace

// --------------------------------------------------------------- reflections

Reflector::Reflector(const Part& p, Side side) : side_(side), work_(side == Side::closed ? p : opposite(p)) {
  const FinCat& base = *work_.base();
  const int n = base.object_count();
  std::vector<std::vector<std::string>> fib(n);
  commas_.reserve(n);
  class_at_.resize(n);
  for (int x = 0; x < n; ++x) {
    commas_.push_back(comma(work_, x, CommaSide::over));
    auto parts = components(commas_[x].cat);
    class_at_[x] = parts.class_of;
    // classes are ordered by representative, so these names are already sorted
    for (int c = 0; c < parts.size(); ++c) fib[x].push_back(base.object(x) + "~" + commas_[x].cat.object(parts.rep(c)));
  }
  std::vector<std::vector<int>> trans(base.arrow_count());
  for (int h = 0; h < base.arrow_count(); ++h) {
    int x = base.src(h), y = base.tgt(h);
    const Comma& cx = commas_[x];
    trans[h].assign(fib[x].size(), -1);
    for (int o = 0; o < cx.cat.object_count(); ++o) {
      auto [a, f] = cx.object_of[o];
      trans[h][class_at_[x][o]] = class_at_[y][commas_[y].find(a, base.compose(h, f))];
    }
  }
  work_result_.presheaf = Presheaf(work_.base(), Variance::co, fib, trans, false);
  work_result_.elements = elements_of(work_result_.presheaf);
  const Elements& el = work_result_.elements;
  const FinCat& t = *work_.total();
  auto unit_class = [&](int a) {
    int x = work_.over(a);
    return class_at_[x][commas_[x].find(a, base.identity(x))];
  };
  PartMorphism& unit = work_result_.unit;
  unit.obj.resize(t.object_count());
  unit.arr.resize(t.arrow_count());
  for (int a = 0; a < t.object_count(); ++a) unit.obj[a] = el.object_at[work_.over(a)][unit_class(a)];
  for (int u = 0; u < t.arrow_count(); ++u) unit.arr[u] = el.lift[work_.over_arrow(u)][unit_class(t.src(u))];
  result_ = transport(work_result_, p, side);
}

NatTrans Reflector::transpose(const Presheaf& d, const PartMorphism& phi) const {
  Presheaf w = to_work(d, work_, side_);
  Elements el = elements_of(w);
  const FinCat& base = *work_.base();
  NatTrans alpha;
  for (int x = 0; x < base.object_count(); ++x) {
    const Comma& cx = commas_[x];
    alpha.comps.emplace_back(work_result_.presheaf.size(x), -1);
    for (int o = 0; o < cx.cat.object_count(); ++o) {
      auto [a, f] = cx.object_of[o];
      int value = w.act(f, el.element_of[phi.obj[a]].second);
      int& slot = alpha.comps[x][class_at_[x][o]];
      if (slot >= 0 && slot != value) {
        throw Error(ErrorKind::NotNatural, "value depends on the chosen representative at " + base.object(x),
                    {base.object(x)});
      }
      slot = value;
    }
  }
  return alpha;
}

PartMorphism Reflector::untranspose(const Presheaf& d, const NatTrans& alpha) const {
  Presheaf w = to_work(d, work_, side_);
  Elements el = elements_of(w);
  const FinCat& base = *work_.base();
  const FinCat& t = *work_.total();
  auto image = [&](int a) {
    int x = work_.over(a);
    return alpha.comps[x][class_at_[x][commas_[x].find(a, base.identity(x))]];
  };
  PartMorphism phi;
  for (int a = 0; a < t.object_count(); ++a) phi.obj.push_back(el.object_at[work_.over(a)][image(a)]);
  for (int u = 0; u < t.arrow_count(); ++u) {
    int lifted = el.lift[work_.over_arrow(u)][image(t.src(u))];
    if (el.part.total()->tgt(lifted) != phi.obj[t.tgt(u)]) {
      throw Error(ErrorKind::NotNatural, "transformation is not natural along " + t.arrow(u), {t.arrow(u)});
    }
    phi.arr.push_back(lifted);
  }
  return phi;
}

// ------------------------------------------------------------- coreflections

namespace {

std::string morphism_name(const Part& dom, const Part& cod, const PartMorphism& m) {
  const FinCat& d = *dom.total();
  const FinCat& c = *cod.total();
  std::string s = "[";
  for (std::size_t i = 0; i < m.obj.size(); ++i) s += (i ? "," : "") + c.object(m.obj[i]);
  bool first = true;
  for (std::size_t u = 0; u < m.arr.size(); ++u) {
    if (d.is_identity(static_cast<int>(u))) continue;
    s += (first ? "|" : ",") + c.arrow(m.arr[u]);
    first = false;
  }
  return s + "]";
}

}  // namespace

Coreflector::Coreflector(const Part& p, Side side) : side_(side), work_(side == Side::closed ? p : opposite(p)) {
  const FinCat& base = *work_.base();
  const int n = base.object_count();
  std::vector<Presheaf> reps;
  std::vector<std::vector<std::string>> fib(n);
  for (int x = 0; x < n; ++x) {
    reps.push_back(presheaves::representable(work_.base(), x, Variance::co));
    reps_.push_back(elements_of(reps.back()));
    id_at_.push_back(reps.back().find(x, base.arrow(base.identity(x))));
    auto homs = hom_over(reps_[x].part, work_);
    std::vector<std::pair<std::string, PartMorphism>> named;
    for (auto& h : homs) named.push_back({base.object(x) + "~" + morphism_name(reps_[x].part, work_, h), std::move(h)});
    std::sort(named.begin(), named.end());
    homs_.emplace_back();
    lookup_.emplace_back();
    for (auto& [name, h] : named) {
      lookup_[x][h] = static_cast<int>(homs_[x].size());
      homs_[x].push_back(std::move(h));
      fib[x].push_back(std::move(name));
    }
  }
  std::vector<std::vector<int>> trans(base.arrow_count());
  for (int h = 0; h < base.arrow_count(); ++h) {
    int x = base.src(h), y = base.tgt(h);
    // ↑h: ↑y -> ↑x, g -> g∘h
    NatTrans pre;
    for (int z = 0; z < n; ++z) {
      pre.comps.emplace_back();
      for (const auto& g : reps[y].fibre(z)) {
        pre.comps[z].push_back(reps[x].find(z, base.arrow(base.compose(base.arrow_index(g), h))));
      }
    }
    PartMorphism m = to_part_morphism(reps_[y], reps_[x], pre);
    for (const auto& xi : homs_[x]) trans[h].push_back(lookup_[y].at(compose(xi, m)));
  }
  work_result_.presheaf = Presheaf(work_.base(), Variance::co, fib, trans, false);
  work_result_.elements = elements_of(work_result_.presheaf);
  const Elements& el = work_result_.elements;
  PartMorphism& counit = work_result_.unit;
  counit.obj.resize(el.part.total()->object_count());
  counit.arr.resize(el.part.total()->arrow_count());
  for (int x = 0; x < n; ++x) {
    int id_obj = reps_[x].object_at[x][id_at_[x]];
    for (std::size_t k = 0; k < homs_[x].size(); ++k) {
      counit.obj[el.object_at[x][k]] = homs_[x][k].obj[id_obj];
      for (int f : base.arrows_from(x)) {
        counit.arr[el.lift[f][k]] = homs_[x][k].arr[reps_[x].lift[f][id_at_[x]]];
      }
    }
  }
  result_ = transport(work_result_, p, side);
}

NatTrans Coreflector::transpose(const Presheaf& d, const PartMorphism& phi) const {
  Presheaf w = to_work(d, work_, side_);
  Elements el = elements_of(w);
  const FinCat& base = *work_.base();
  NatTrans alpha;
  for (int x = 0; x < base.object_count(); ++x) {
    const Elements& rx = reps_[x];
    const FinCat& rt = *rx.part.total();
    // base arrow named by each element of ↑x
    std::vector<int> arrow_of(rt.object_count());
    for (int o = 0; o < rt.object_count(); ++o) {
      auto [y, g] = rx.element_of[o];
      arrow_of[o] = base.hom(x, y)[g];
    }
    alpha.comps.emplace_back();
    for (int a = 0; a < w.size(x); ++a) {
      PartMorphism xi;
      for (int o = 0; o < rt.object_count(); ++o) {
        int y = rx.element_of[o].first;
        xi.obj.push_back(phi.obj[el.object_at[y][w.act(arrow_of[o], a)]]);
      }
      for (int u = 0; u < rt.arrow_count(); ++u) {
        int s = rt.src(u);
        xi.arr.push_back(phi.arr[el.lift[rx.part.over_arrow(u)][w.act(arrow_of[s], a)]]);
      }
      auto it = lookup_[x].find(xi);
      if (it == lookup_[x].end()) {
        throw Error(ErrorKind::NotNatural, "map from elements does not transpose at " + base.object(x),
                    {base.object(x)});
      }
      alpha.comps[x].push_back(it->second);
    }
  }
  return alpha;
}

PartMorphism Coreflector::untranspose(const Presheaf& d, const NatTrans& alpha) const {
  Presheaf w = to_work(d, work_, side_);
  Elements el = elements_of(w);
  const FinCat& base = *work_.base();
  PartMorphism phi;
  phi.obj.resize(el.part.total()->object_count());
  phi.arr.resize(el.part.total()->arrow_count());
  for (int x = 0; x < base.object_count(); ++x) {
    int id_obj = reps_[x].object_at[x][id_at_[x]];
    for (int a = 0; a < w.size(x); ++a) {
      const PartMorphism& xi = homs_[x][alpha.comps[x][a]];
      phi.obj[el.object_at[x][a]] = xi.obj[id_obj];
      for (int f : base.arrows_from(x)) phi.arr[el.lift[f][a]] = xi.arr[reps_[x].lift[f][id_at_[x]]];
    }
  }
  return phi;
}

ReflectionResult reflect(const Part& p, Side side) { return Reflector(p, side).result(); }
ReflectionResult coreflect(const Part& p, Side side) { return Coreflector(p, side).result(); }

// ------------------------------------------------------------ contraposition

namespace {

std::vector<std::vector<int>> functions(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n > 0 && m == 0) return out;
  std::vector<int> f(n, 0);
  while (true) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) return out;
    ++f[i];
  }
}

}  // namespace

ContraFamily negated_action(const Presheaf& a, const Presheaf& b, const NatTrans& alpha,
                            const std::vector<int>& sample_sizes) {
  if (a.variance() != b.variance() || !same_category(a.base(), b.base())) {
    throw Error(ErrorKind::BaseMismatch, "contraposition needs presheaves of one variance on one base");
  }
  ContraFamily theta;
  for (int x = 0; x < a.base()->object_count(); ++x) {
    theta.at.emplace_back();
    for (const auto& h : functions(b.size(x), sample_sizes[x])) {
      std::vector<int> v;
      for (int s : alpha.comps[x]) v.push_back(h[s]);
      theta.at[x].emplace(h, std::move(v));
    }
  }
  return theta;
}

ContraFamily contrapose(const Presheaf& a, const Presheaf& b, const NatTrans& alpha) {
  return negated_action(a, b, alpha, b.sizes());
}

NatTrans contrapose_inverse(const Presheaf& a, const Presheaf& b, const ContraFamily& theta) {
  const FinCat& base = *a.base();
  if (static_cast<int>(theta.at.size()) != base.object_count()) {
    throw Error(ErrorKind::Malformed, "family has the wrong number of components");
  }
  NatTrans alpha;
  for (int x = 0; x < base.object_count(); ++x) {
    std::vector<int> id(b.size(x));
    std::iota(id.begin(), id.end(), 0);
    auto it = theta.at[x].find(id);
    if (it == theta.at[x].end()) {
      throw Error(ErrorKind::NotNatural, "family is not given at the identity of B" + base.object(x),
                  {base.object(x)});
    }
    const auto& ax = it->second;
    if (static_cast<int>(ax.size()) != a.size(x)) throw Error(ErrorKind::Malformed, "component has the wrong size");
    for (int v : ax) {
      if (v < 0 || v >= b.size(x)) throw Error(ErrorKind::Malformed, "component leaves its fibre");
    }
    // naturality in S: Θ(x)(h) = h∘α_x
    for (const auto& [h, image] : theta.at[x]) {
      for (int s = 0; s < a.size(x); ++s) {
        if (image[s] != h[ax[s]]) {
          throw Error(ErrorKind::NotNatural, "family is not natural in S at " + base.object(x), {base.object(x)});
        }
      }
    }
    alpha.comps.push_back(ax);
  }
  int bad = -1;
  if (!is_natural(a, b, alpha, &bad)) {
    throw Error(ErrorKind::NotNatural, "recovered transformation fails the square of " + base.arrow(bad),
                {base.arrow(bad)});
  }
  return alpha;
}

}  // namespace bipolar
