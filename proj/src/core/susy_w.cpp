#include "walg/susy_w.hpp"

namespace walg {

SuperPoly gamma_S_linear(const ReductionContext& ctx, int jq) {
  const DualBases& b = ctx.b;
  const LieSuperalgebra& g = ctx.g;
  const Element& q = b.low[jq][0];
  Scalar k = Scalar::k();
  SuperPoly out;
  for (const Chain& ch : enumerate_chains(b, -b.spin2[jq] - 1, 0)) {
    auto [jp, np] = ch.back();
    if (!b.low_at(jp, np + 1)) continue;
    SuperPoly r = ctx.var_poly(jp, np + 1);
    for (size_t t = ch.size(); t-- > 0;) {
      auto [j, n] = ch[t];
      const Element* prev = t == 0 ? &q : b.low_at(ch[t - 1].first, ch[t - 1].second + 1);
      if (!prev) {
        r = SuperPoly();
        break;
      }
      const Element& up = b.up[j][n];
      r = ctx.element_poly(b.sharp(g, g.bracket(*prev, up))) * r - r.D().scaled(k * g.pair(*prev, up));
    }
    out += r;
  }
  return out;
}

IndetPoly susy_w_bracket_closed(const ReductionContext& ctx, int ia, int ib) {
  const DualBases& b = ctx.b;
  const LieSuperalgebra& g = ctx.g;
  const Element& a = b.low[ia][0];
  const Element& bb = b.low[ib][0];
  Scalar k = Scalar::k();
  IndetPoly head(Indet::Chi);
  head.add(0, ctx.gen_of(g.bracket(a, bb)));
  head.add(1, SuperPoly(k * g.pair(a, bb)));
  if (b.parity[ia]) head = -head;

  IndetPoly sum(Indet::Chi);
  for (const Chain& ch : enumerate_chains(b, -b.spin2[ib] - 1, b.spin2[ia])) {
    auto [jp, np] = ch.back();
    const Element* last = b.low_at(jp, np + 1);
    if (!last) continue;
    // the last factor acts on 1, where D + χ gives χ
    IndetPoly r(Indet::Chi);
    r.add(0, ctx.gen_of(g.bracket(*last, a)));
    r.add(1, SuperPoly(-k * g.pair(*last, a)));
    bool dead = false;
    for (size_t t = ch.size() - 1; t-- > 0;) {
      const Element* prev = b.low_at(ch[t].first, ch[t].second + 1);
      if (!prev) {
        dead = true;
        break;
      }
      const Element& up = b.up[ch[t + 1].first][ch[t + 1].second];
      r = r.left_mul(ctx.gen_of(g.bracket(*prev, up))) - r.D_plus_chi().scaled(k * g.pair(*prev, up));
    }
    if (dead) continue;
    const Element& up0 = b.up[ch[0].first][ch[0].second];
    r = r.left_mul(ctx.gen_of(g.bracket(bb, up0))) - r.D_plus_chi().scaled(k * g.pair(bb, up0));
    sum += r;
  }
  int e = b.parity[ia] * b.parity[ib] + b.parity[ia];
  return (e & 1) ? head + sum : head - sum;
}

}  // namespace walg
