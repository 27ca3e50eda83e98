#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "typik/program.hpp"

namespace typik::detail {

inline uint64_t bit(int k) { return uint64_t{1} << k; }
// Bits 0..k-1.
inline uint64_t below(int k) { return k >= 64 ? ~uint64_t{0} : bit(k) - 1; }
inline int lowest(uint64_t m) { return __builtin_ctzll(m); }
inline int highest(uint64_t m) { return 63 - __builtin_clzll(m); }
inline bool single(uint64_t m) { return m && !(m & (m - 1)); }

// Fixed-size bit matrix.
struct BitRows {
  int rows = 0;
  int wpr = 0;
  std::vector<uint64_t> d;

  void init(int r, int cols) {
    rows = r;
    wpr = (cols + 63) / 64;
    d.assign(static_cast<size_t>(r) * wpr, 0);
  }
  bool test(int r, int c) const { return (d[idx(r) + c / 64] >> (c % 64)) & 1; }
  bool set(int r, int c) {
    uint64_t& w = d[idx(r) + c / 64];
    uint64_t b = bit(c % 64);
    if (w & b) return false;
    w |= b;
    return true;
  }
  const uint64_t* row(int r) const { return d.data() + idx(r); }
  template <class F>
  void each(int r, F&& f, int from = 0) const {
    const uint64_t* p = row(r);
    for (int w = from / 64; w < wpr; ++w) {
      uint64_t m = p[w];
      if (w == from / 64) m &= ~below(from % 64);
      while (m) {
        int b = lowest(m);
        m &= m - 1;
        f(w * 64 + b);
      }
    }
  }

 private:
  size_t idx(int r) const { return static_cast<size_t>(r) * wpr; }
};

struct Compiled {
  ProgramFacts facts;
  int NC = 0;    // concepts
  int NI = 0;    // named individuals
  int NCls = 0;  // concepts then nominals
  int NR = 0;
  int NT = 0;
  int M = 0;     // constants
  int n = 0;
  uint64_t full = 0;

  std::vector<int> tc_class;      // tc -> class
  std::vector<int> tc_of_class;   // class -> tc or -1
  std::vector<int> aux_of_tc;     // tc -> constant
  std::vector<int> tc_of_const;   // constant -> tc or -1
  std::vector<char> is_bot;       // class
  std::vector<int> tops;

  struct SupExE {
    int role;
    int filler;
    int witness;
  };
  using Pairs = std::vector<std::pair<int, int>>;
  std::vector<std::vector<int>> sub_class;    // class -> classes
  std::vector<Pairs> conj_by;                 // class -> (other, sup)
  std::vector<Pairs> subex_by_filler;         // class -> (role, sup)
  std::vector<Pairs> subex_by_role;           // role -> (filler, sup)
  std::vector<std::vector<SupExE>> supex_by;  // class
  std::vector<std::vector<int>> subself_by_role;
  std::vector<std::vector<int>> supself_by;   // class -> roles
  std::vector<std::vector<int>> subrole;      // role -> supers
  std::vector<Pairs> chain_first;             // u -> (v, w) for u o v [= w
  std::vector<Pairs> chain_second;            // v -> (u, w)
  std::vector<Pairs> rconj;                   // role -> (other, w)
  std::vector<Pairs> prod_first;              // class -> (other, role)
  std::vector<Pairs> prod_second;             // class -> (other, role)
  std::vector<Pairs> supprod;                 // role -> (z1, z2)
  std::vector<std::vector<int>> suptyp;       // class -> tc
  std::vector<std::vector<int>> subtyp;       // tc -> classes

  explicit Compiled(const ProgramFacts& f);
  int cls(ClassRef c) const { return c.nominal ? NC + c.index : c.index; }
};

struct State {
  BitRows inst;     // constant x class
  BitRows inst_of;  // class x constant
  BitRows ninst;    // constant x tc
  BitRows typ;      // constant x tc
  BitRows typ_of;   // tc x constant
  BitRows out;      // (role * M + x) x y
  BitRows in;       // (role * M + y) x x
  BitRows self;     // constant x role
  BitRows by_rank;  // rank x constant
  std::vector<uint8_t> has_inst;
  std::vector<uint64_t> box;
  std::vector<uint64_t> nbox;
  std::vector<uint64_t> dom;
  std::vector<int> rank;     // -1 while open
  std::vector<uint8_t> fdom; // bit 0 instance, bit 1 not instance
  int open_ranks = 0;
  int open_flags = 0;
  bool conflict = false;

  explicit State(const Compiled& p);
  int flag(int t) const { return fdom[t] == 1 ? 1 : fdom[t] == 2 ? 0 : -1; }
};

struct Event {
  enum Kind : uint8_t { Inst, NegInst, Triple, Self, Typ, Box, NegBox, Rank, Flag };
  Kind kind;
  int a;
  int b;
  int c;
};

// Saturates the monotone rules and the domain consequences of a partial guess.
class Propagator {
 public:
  Propagator(const Compiled& p, State& s, std::mt19937_64* shuffle = nullptr)
      : P(p), S(s), rng_(shuffle) {}

  void seed_root();
  bool restrict(int x, uint64_t mask);
  bool restrict_flag(int t, uint8_t mask);
  // Runs to fixpoint; returns false on conflict.
  bool run();

 private:
  void fail() {
    S.conflict = true;
  }
  void push(Event e) { queue_.push_back(e); }

  void add_inst(int x, int c);
  void add_ninst(int x, int t);
  void add_triple(int x, int r, int y);
  void add_self(int x, int r);
  void add_typ(int x, int t);
  void add_box(int t, int k);
  void add_nbox(int t, int k);
  void couple(int x, int y);

  void on_inst(int x, int c);
  void on_ninst(int x, int t);
  void on_triple(int x, int r, int y);
  void on_self(int x, int r);
  void on_typ(int x, int t);
  void on_box(int t, int k);
  void on_nbox(int t, int k);
  void on_rank(int x, int k);
  void on_flag(int t, int v);

  bool inst(int x, int c) const { return S.inst.test(x, c); }

  const Compiled& P;
  State& S;
  std::mt19937_64* rng_;
  std::vector<Event> queue_;
  size_t head_ = 0;
};

}  // namespace typik::detail
