#include "detail.hpp"

#include "typik/error.hpp"

namespace typik::detail {

Compiled::Compiled(const ProgramFacts& f) : facts(f) {
  NC = static_cast<int>(f.concepts.size());
  NI = f.n_named;
  NCls = NC + NI;
  NR = static_cast<int>(f.roles.size());
  NT = f.n_tc;
  M = f.constant_count();
  n = f.upper_bound;
  if (n > 62) throw Unsupported("rank bound " + std::to_string(n) + " exceeds the engine limit of 62");
  full = below(n + 1);

  tc_of_class.assign(NCls, -1);
  tc_of_const.assign(M, -1);
  for (int t = 0; t < NT; ++t) {
    tc_class.push_back(f.tc_concept[t]);
    tc_of_class[f.tc_concept[t]] = t;
    aux_of_tc.push_back(f.tc_constant(t));
    tc_of_const[f.tc_constant(t)] = t;
  }
  is_bot.assign(NCls, 0);
  for (int b : f.bot) is_bot[b] = 1;
  tops = f.top;

  sub_class.resize(NCls);
  conj_by.resize(NCls);
  subex_by_filler.resize(NCls);
  subex_by_role.resize(NR);
  supex_by.resize(NCls);
  subself_by_role.resize(NR);
  supself_by.resize(NCls);
  subrole.resize(NR);
  chain_first.resize(NR);
  chain_second.resize(NR);
  rconj.resize(NR);
  prod_first.resize(NCls);
  prod_second.resize(NCls);
  supprod.resize(NR);
  suptyp.resize(NCls);
  subtyp.resize(NT);

  for (const auto& x : f.sub_class) sub_class[cls(x.sub)].push_back(cls(x.sup));
  for (const auto& x : f.sub_conj) {
    conj_by[x.first].push_back({x.second, x.sup});
    conj_by[x.second].push_back({x.first, x.sup});
  }
  for (const auto& x : f.sub_ex) {
    subex_by_filler[x.filler].push_back({x.role, x.sup});
    subex_by_role[x.role].push_back({x.filler, x.sup});
  }
  for (const auto& x : f.sup_ex) supex_by[cls(x.sub)].push_back({x.role, cls(x.filler), x.witness});
  for (const auto& x : f.sub_self) subself_by_role[x.role].push_back(x.sup);
  for (const auto& x : f.sup_self) supself_by[x.sub].push_back(x.role);
  for (const auto& x : f.sub_role) subrole[x.sub].push_back(x.sup);
  for (const auto& x : f.sub_rchain) {
    chain_first[x.first].push_back({x.second, x.sup});
    chain_second[x.second].push_back({x.first, x.sup});
  }
  for (const auto& x : f.sub_rconj) {
    rconj[x.first].push_back({x.second, x.sup});
    rconj[x.second].push_back({x.first, x.sup});
  }
  for (const auto& x : f.sub_prod) {
    prod_first[x.first].push_back({x.second, x.role});
    prod_second[x.second].push_back({x.first, x.role});
  }
  for (const auto& x : f.sup_prod) supprod[x.role].push_back({x.first, x.second});
  for (const auto& x : f.sup_typ) {
    int t = tc_of_class[x.typ];
    if (t < 0) throw Error("supTyp over a concept without typicality constant");
    suptyp[x.sub].push_back(t);
  }
  for (const auto& x : f.sub_typ) {
    int t = tc_of_class[x.typ];
    if (t < 0) throw Error("subTyp over a concept without typicality constant");
    subtyp[t].push_back(x.sup);
  }
}

State::State(const Compiled& p) {
  inst.init(p.M, p.NCls);
  inst_of.init(p.NCls, p.M);
  ninst.init(p.M, p.NT);
  typ.init(p.M, p.NT);
  typ_of.init(p.NT, p.M);
  out.init(p.NR * p.M, p.M);
  in.init(p.NR * p.M, p.M);
  self.init(p.M, p.NR);
  by_rank.init(p.n + 1, p.M);
  has_inst.assign(p.M, 0);
  box.assign(p.NT, 0);
  nbox.assign(p.NT, 0);
  dom.assign(p.M, p.full);
  rank.assign(p.M, -1);
  fdom.assign(p.NT, 3);
  open_ranks = p.M;
  open_flags = p.NT;
  // A single possible rank is an assignment.
  if (p.n == 0) {
    for (int x = 0; x < p.M; ++x) rank[x] = 0;
    open_ranks = 0;
  }
}

void Propagator::seed_root() {
  for (int x = 0; x < P.M; ++x) {
    if (S.rank[x] >= 0) push({Event::Rank, x, S.rank[x], 0});
  }
  for (int x = 0; x < P.NI; ++x) add_inst(x, P.NC + x);
}

bool Propagator::restrict(int x, uint64_t mask) {
  if (S.conflict) return false;
  uint64_t nd = S.dom[x] & mask;
  if (nd == S.dom[x]) return true;
  if (!nd) {
    fail();
    return false;
  }
  S.dom[x] = nd;
  if (S.rank[x] < 0 && single(nd)) {
    S.rank[x] = lowest(nd);
    --S.open_ranks;
    push({Event::Rank, x, S.rank[x], 0});
  }
  return true;
}

bool Propagator::restrict_flag(int t, uint8_t mask) {
  if (S.conflict) return false;
  uint8_t nd = S.fdom[t] & mask;
  if (nd == S.fdom[t]) return true;
  if (!nd) {
    fail();
    return false;
  }
  S.fdom[t] = nd;
  --S.open_flags;
  push({Event::Flag, t, nd == 1 ? 1 : 0, 0});
  return true;
}

void Propagator::add_inst(int x, int c) {
  if (S.conflict || !S.inst.set(x, c)) return;
  S.inst_of.set(c, x);
  if (P.is_bot[c]) {
    fail();
    return;
  }
  int t = P.tc_of_class[c];
  if (t >= 0 && S.ninst.test(x, t)) {
    fail();
    return;
  }
  if (!S.has_inst[x]) {
    S.has_inst[x] = 1;
    for (int z : P.tops) add_inst(x, z);
  }
  push({Event::Inst, x, c, 0});
}

void Propagator::add_ninst(int x, int t) {
  if (S.conflict || !S.ninst.set(x, t)) return;
  if (inst(x, P.tc_class[t])) {
    fail();
    return;
  }
  push({Event::NegInst, x, t, 0});
}

void Propagator::add_triple(int x, int r, int y) {
  if (S.conflict || !S.out.set(r * P.M + x, y)) return;
  S.in.set(r * P.M + y, x);
  push({Event::Triple, x, r, y});
}

void Propagator::add_self(int x, int r) {
  if (S.conflict || !S.self.set(x, r)) return;
  push({Event::Self, x, r, 0});
}

void Propagator::add_typ(int x, int t) {
  if (S.conflict || !S.typ.set(x, t)) return;
  S.typ_of.set(t, x);
  push({Event::Typ, x, t, 0});
}

void Propagator::add_box(int t, int k) {
  if (S.conflict || (S.box[t] & bit(k))) return;
  if (S.nbox[t] & bit(k)) {
    fail();
    return;
  }
  S.box[t] |= bit(k);
  push({Event::Box, t, k, 0});
}

void Propagator::add_nbox(int t, int k) {
  if (S.conflict || (S.nbox[t] & bit(k))) return;
  if (S.box[t] & bit(k)) {
    fail();
    return;
  }
  S.nbox[t] |= bit(k);
  push({Event::NegBox, t, k, 0});
}

void Propagator::couple(int x, int y) {
  uint64_t m = S.dom[x] & S.dom[y];
  restrict(x, m);
  restrict(y, m);
}

bool Propagator::run() {
  while (!S.conflict && head_ < queue_.size()) {
    Event e;
    if (rng_) {
      std::uniform_int_distribution<size_t> pick(head_, queue_.size() - 1);
      size_t i = pick(*rng_);
      e = queue_[i];
      queue_[i] = queue_[head_];
    } else {
      e = queue_[head_];
    }
    ++head_;
    switch (e.kind) {
      case Event::Inst: on_inst(e.a, e.b); break;
      case Event::NegInst: on_ninst(e.a, e.b); break;
      case Event::Triple: on_triple(e.a, e.b, e.c); break;
      case Event::Self: on_self(e.a, e.b); break;
      case Event::Typ: on_typ(e.a, e.b); break;
      case Event::Box: on_box(e.a, e.b); break;
      case Event::NegBox: on_nbox(e.a, e.b); break;
      case Event::Rank: on_rank(e.a, e.b); break;
      case Event::Flag: on_flag(e.a, e.b); break;
    }
    if (head_ > 4096 && head_ * 2 > queue_.size()) {
      queue_.erase(queue_.begin(), queue_.begin() + static_cast<long>(head_));
      head_ = 0;
    }
  }
  queue_.clear();
  head_ = 0;
  return !S.conflict;
}

void Propagator::on_inst(int x, int c) {
  for (int z : P.sub_class[c]) add_inst(x, z);
  for (auto [o, z] : P.conj_by[c]) {
    if (inst(x, o)) add_inst(x, z);
  }
  for (auto [r, z] : P.subex_by_filler[c]) {
    S.in.each(r * P.M + x, [&](int u) { add_inst(u, z); });
    if (S.self.test(x, r)) add_inst(x, z);
  }
  for (const auto& e : P.supex_by[c]) {
    add_triple(x, e.role, e.witness);
    add_inst(e.witness, e.filler);
  }
  for (int r : P.supself_by[c]) add_self(x, r);
  for (auto [o, w] : P.prod_first[c]) {
    S.inst_of.each(o, [&](int x2) { add_triple(x, w, x2); });
    if (inst(x, o)) add_self(x, w);
  }
  for (auto [o, w] : P.prod_second[c]) {
    S.inst_of.each(o, [&](int x1) { add_triple(x1, w, x); });
    if (inst(x, o)) add_self(x, w);
  }
  for (int t : P.suptyp[c]) add_typ(x, t);

  if (c >= P.NC) {
    int y = c - P.NC;
    S.inst.each(x, [&](int z) { add_inst(y, z); });
    S.inst.each(y, [&](int z) { add_inst(x, z); });
    for (int u = 0; u < P.NR; ++u) {
      S.in.each(u * P.M + x, [&](int z) { add_triple(z, u, y); });
    }
    couple(x, y);
  }
  S.inst.each(x, [&](int yc) { add_inst(yc - P.NC, c); }, P.NC);
  if (x < P.NI) {
    S.inst_of.each(P.NC + x, [&](int x2) { add_inst(x2, c); });
  }

  int t = P.tc_of_class[c];
  if (t >= 0) {
    add_inst(P.aux_of_tc[t], c);
    if (x == P.aux_of_tc[t]) {
      restrict_flag(t, 1);
      if (S.rank[x] >= 0) add_nbox(t, S.rank[x] + 1);
    }
    if (S.rank[x] >= 0 && (S.box[t] & bit(S.rank[x]))) add_typ(x, t);
    if (S.box[t]) restrict(x, ~below(highest(S.box[t])));
  }
}

void Propagator::on_ninst(int x, int t) {
  if (x == P.aux_of_tc[t]) {
    add_box(t, P.n);
    restrict_flag(t, 2);
  }
}

void Propagator::on_triple(int x, int r, int y) {
  if (x == y && x < P.NI) add_self(x, r);
  for (auto [f, z] : P.subex_by_role[r]) {
    if (inst(y, f)) add_inst(x, z);
  }
  for (int w : P.subrole[r]) add_triple(x, w, y);
  for (auto [v, w] : P.chain_first[r]) {
    S.out.each(v * P.M + y, [&](int y2) { add_triple(x, w, y2); });
    if (S.self.test(y, v)) add_triple(x, w, y);
  }
  for (auto [u, w] : P.chain_second[r]) {
    S.in.each(u * P.M + x, [&](int x0) { add_triple(x0, w, y); });
    if (S.self.test(x, u)) add_triple(x, w, y);
  }
  for (auto [o, w] : P.rconj[r]) {
    if (S.out.test(o * P.M + x, y)) add_triple(x, w, y);
  }
  for (auto [z1, z2] : P.supprod[r]) {
    add_inst(x, z1);
    add_inst(y, z2);
  }
  S.inst.each(y, [&](int yc) { add_triple(x, r, yc - P.NC); }, P.NC);
}

void Propagator::on_self(int x, int r) {
  for (auto [f, z] : P.subex_by_role[r]) {
    if (inst(x, f)) add_inst(x, z);
  }
  for (int z : P.subself_by_role[r]) add_inst(x, z);
  for (int w : P.subrole[r]) add_self(x, w);
  for (auto [v, w] : P.chain_first[r]) {
    S.out.each(v * P.M + x, [&](int y) { add_triple(x, w, y); });
    if (S.self.test(x, v)) add_triple(x, w, x);
  }
  for (auto [u, w] : P.chain_second[r]) {
    S.in.each(u * P.M + x, [&](int x0) { add_triple(x0, w, x); });
    if (S.self.test(x, u)) add_triple(x, w, x);
  }
  for (auto [o, w] : P.rconj[r]) {
    if (S.self.test(x, o)) add_self(x, w);
  }
  for (auto [z1, z2] : P.supprod[r]) {
    add_inst(x, z1);
    add_inst(x, z2);
  }
}

void Propagator::on_typ(int x, int t) {
  add_inst(x, P.tc_class[t]);
  if (S.rank[x] >= 0) add_box(t, S.rank[x]);
  restrict(x, ~S.nbox[t]);
  for (int z : P.subtyp[t]) add_inst(x, z);
}

void Propagator::on_box(int t, int k) {
  if (k > 0) {
    add_box(t, k - 1);
    S.by_rank.each(k - 1, [&](int x) { add_ninst(x, t); });
  }
  int c = P.tc_class[t];
  S.inst_of.each(c, [&](int x) { restrict(x, ~below(k)); });
  S.by_rank.each(k, [&](int x) {
    if (inst(x, c)) add_typ(x, t);
  });
}

void Propagator::on_nbox(int t, int k) {
  if (k + 1 <= P.n) add_nbox(t, k + 1);
  restrict(P.aux_of_tc[t], below(k));
  S.typ_of.each(t, [&](int x) { restrict(x, ~bit(k)); });
}

void Propagator::on_rank(int x, int k) {
  S.by_rank.set(k, x);
  S.inst.each(x, [&](int yc) { restrict(yc - P.NC, bit(k)); }, P.NC);
  if (x < P.NI) {
    S.inst_of.each(P.NC + x, [&](int x2) { restrict(x2, bit(k)); });
  }
  for (int t = 0; t < P.NT; ++t) {
    if (S.box[t] & bit(k + 1)) add_ninst(x, t);
    if ((S.box[t] & bit(k)) && inst(x, P.tc_class[t])) add_typ(x, t);
    if (S.typ.test(x, t)) add_box(t, k);
  }
  int t = P.tc_of_const[x];
  if (t >= 0) {
    add_box(t, k);
    if (inst(x, P.tc_class[t])) add_nbox(t, k + 1);
  }
}

void Propagator::on_flag(int t, int v) {
  if (v) {
    add_inst(P.aux_of_tc[t], P.tc_class[t]);
  } else {
    add_ninst(P.aux_of_tc[t], t);
  }
}

}  // namespace typik::detail
