#include "kwb/chern.hpp"

namespace kwb {

PerfObject PerfObject::generator(std::string name) {
  PerfObject o;
  o.kind = Kind::Leaf;
  o.leaf = std::move(name);
  return o;
}

PerfObject PerfObject::shifted(PerfObject x, int s) {
  PerfObject o;
  o.kind = Kind::Shift;
  o.shift = s;
  o.children.push_back(std::move(x));
  return o;
}

PerfObject PerfObject::cone(PerfObject source, PerfObject target) {
  PerfObject o;
  o.kind = Kind::Cone;
  o.children.push_back(std::move(source));
  o.children.push_back(std::move(target));
  return o;
}

std::string to_string(const PerfObject& obj) {
  switch (obj.kind) {
    case PerfObject::Kind::Leaf: return obj.leaf;
    case PerfObject::Kind::Shift:
      return "Shift(" + to_string(obj.children[0]) + "," +
             std::to_string(obj.shift) + ")";
    case PerfObject::Kind::Cone:
      return "Cone(" + to_string(obj.children[0]) + "," +
             to_string(obj.children[1]) + ")";
  }
  return "?";
}

K0Class euler_class(const PerfObject& obj) {
  switch (obj.kind) {
    case PerfObject::Kind::Leaf: return {obj.leaf, 1};
    case PerfObject::Kind::Shift: {
      K0Class c = euler_class(obj.children[0]);
      if (obj.shift % 2 != 0) c.m = -c.m;
      return c;
    }
    case PerfObject::Kind::Cone: {
      const K0Class src = euler_class(obj.children[0]);
      K0Class dst = euler_class(obj.children[1]);
      if (src.m != 0 && dst.m != 0 && src.generator != dst.generator)
        throw IdentityViolation("euler_class: mixed generators " + src.generator +
                                " and " + dst.generator);
      if (dst.m == 0) dst.generator = src.generator;
      dst.m -= src.m;
      return dst;
    }
  }
  return {};
}

PerfObject koszul_transform(const PerfObject& obj) {
  switch (obj.kind) {
    case PerfObject::Kind::Leaf:
      if (obj.leaf == "k") return PerfObject::generator("A!");
      if (obj.leaf == "A") return PerfObject::generator("k");
      throw IdentityViolation("koszul_transform: unknown generator " + obj.leaf);
    case PerfObject::Kind::Shift:
      return PerfObject::shifted(koszul_transform(obj.children[0]), -obj.shift);
    case PerfObject::Kind::Cone:
      return PerfObject::shifted(
          PerfObject::cone(koszul_transform(obj.children[1]),
                           koszul_transform(obj.children[0])),
          -1);
  }
  return {};
}

K0Class k0_transport(const K0Class& xi, const FinitenessReport& fin) {
  if (xi.generator != "k")
    throw IdentityViolation("k0_transport expects a class over the generator k");
  if (fin.weakly_adams_connected == Verdict::Fails)
    throw IdentityViolation(
        "k0_transport refused: the algebra is not weakly Adams connected (" +
        fin.witness + ")");
  // m[k] -> m * [F(k)]; F(k) reduces to [A!] with sign +1 by the grammar,
  // computed rather than assumed
  const K0Class unit = euler_class(koszul_transform(PerfObject::generator("k")));
  return {unit.generator, xi.m * unit.m};
}

CyclicClass chern0(const CyclicComplexWindow& cc, const MixedComplexWindow& m,
                   long mult) {
  const int unit = m.unit_chain();
  if (unit < 0) throw IdentityViolation("chern0: no unit chain at (0,0)");
  const Bidegree total{0, 0};
  const CyclicSlice* sl = cc.find_slice(total, 0);
  if (!sl || sl->mixed != Bidegree{0, 0})
    throw IdentityViolation("chern0: no u^0 layer at (0,0)");
  CyclicClass out{total, {}};
  if (mult != 0) out.coords.emplace(sl->offset + unit, Scalar(mult));
  if (!cc.complex.diff_at(total).apply(out.coords).empty())
    throw IdentityViolation("chern0: the Chern class is not a cycle");
  return out;
}

CyclicClass contravariant_chern0(const CyclicCochainWindow& cochain, long mult) {
  const int unit = cochain.dual.unit_chain();
  if (unit < 0)
    throw IdentityViolation("contravariant_chern0: no unit chain at (0,0)");
  const Bidegree total{0, 0};
  const CyclicSlice* sl = cochain.cc.find_slice(total, 0);
  if (!sl || sl->mixed != Bidegree{0, 0})
    throw IdentityViolation("contravariant_chern0: no v^0 layer at (0,0)");
  CyclicClass out{total, {}};
  if (mult != 0) out.coords.emplace(sl->offset + unit, Scalar(mult));
  if (!cochain.cc.complex.diff_at(total).apply(out.coords).empty())
    throw IdentityViolation("contravariant_chern0: the class is not a cocycle");
  return out;
}

Scalar cyclic_pairing(const CyclicCochainWindow& cochain, const CyclicClass& phi,
                      const CyclicComplexWindow& neg, const CyclicClass& x) {
  if (phi.total != -x.total) return Scalar(0);
  auto cit = cochain.cc.slices.find(phi.total);
  auto nit = neg.slices.find(x.total);
  if (cit == cochain.cc.slices.end() || nit == neg.slices.end()) return Scalar(0);

  Scalar out(0);
  // v^j pairs with u^j; the cochain side stores v^j as the power -j layer
  for (const CyclicSlice& xs : nit->second) {
    const CyclicSlice* ps = nullptr;
    for (const CyclicSlice& c : cit->second)
      if (c.power == -xs.power) { ps = &c; break; }
    if (!ps) continue;
    if (ps->mixed != -xs.mixed)
      throw IdentityViolation("cyclic_pairing: layer bidegree mismatch");
    for (int i = 0; i < xs.dim; ++i) {
      auto xv = x.coords.find(xs.offset + i);
      if (xv == x.coords.end()) continue;
      auto pv = phi.coords.find(ps->offset + i);
      if (pv == phi.coords.end()) continue;
      out += pv->second * xv->second;
    }
  }
  return out;
}

TriangleReport loday_triangle_check(const AlgebraWindow& a,
                                    const FinitenessReport& fin,
                                    const Window& window) {
  TriangleReport r;
  r.algebra = a.name;

  const MixedComplexWindow ma = hochschild_mixed(a, window);
  const CyclicComplexWindow neg_a = cyclic_complex(ma, CyclicVariant::Negative);
  const CyclicCochainWindow coch_a = cyclic_cochain(a, window);

  const AlgebraWindow dual = koszul_dual(a, window);
  const MixedComplexWindow md = hochschild_mixed(dual, dual.window);
  const CyclicComplexWindow neg_d = cyclic_complex(md, CyclicVariant::Negative);
  const CyclicCochainWindow coch_d = cyclic_cochain(dual, dual.window);

  for (auto [m, mp] : {std::pair<long, long>{1, 1}, {2, 3}, {-1, 2}, {0, 5}}) {
    TriangleReport::Sample s;
    s.m = m;
    s.mp = mp;
    // direct: <ch_dual(m[k]), ch(m'[A])> on the original side
    s.direct = cyclic_pairing(coch_a, contravariant_chern0(coch_a, m), neg_a,
                              chern0(neg_a, ma, mp));
    // mirrored: transport m[k] across the structural equivalence and pair
    // its Chern class against the dual-side counit class
    const K0Class t = k0_transport({"k", m}, fin);
    s.mirrored = cyclic_pairing(coch_d, contravariant_chern0(coch_d, mp), neg_d,
                                chern0(neg_d, md, t.m));
    if (s.direct != Scalar(m * mp) || s.mirrored != Scalar(m * mp)) r.pass = false;
    r.samples.push_back(std::move(s));
  }
  return r;
}

}  // namespace kwb
