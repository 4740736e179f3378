#include "gwsym/hodge.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "gwsym/closed_form.hpp"

namespace gwsym {

std::pair<int, int> LocalGen::bidegree() const {
  switch (kind) {
    case GenKind::BetaDual: return {0, 0};
    case GenKind::Alpha: return {1, 0};
    case GenKind::AlphaDual: return {0, 1};
    case GenKind::Beta: return {1, 1};
  }
  return {0, 0};
}

std::uint8_t encode_gen(const LocalGen& a) {
  switch (a.kind) {
    case GenKind::BetaDual: return 0;
    case GenKind::Beta: return 1;
    case GenKind::Alpha: return static_cast<std::uint8_t>(2 * a.index);
    case GenKind::AlphaDual: return static_cast<std::uint8_t>(2 * a.index + 1);
  }
  return 0;
}

LocalGen decode_gen(std::uint8_t code) {
  if (code == 0) return {GenKind::BetaDual, 0};
  if (code == 1) return {GenKind::Beta, 0};
  if (code % 2 == 0) return {GenKind::Alpha, code / 2};
  return {GenKind::AlphaDual, code / 2};
}

namespace {

inline bool odd_code(std::uint8_t c) { return c >= 2; }

// Slot product in the curve's cohomology ring: BetaDual is the unit; Beta annihilates
// everything but the unit; AlphaDual_i * Alpha_i = Beta, and graded commutativity forces
// Alpha_i * AlphaDual_i = -Beta. All other products vanish.
inline bool local_mul(std::uint8_t a, std::uint8_t b, int& sign, std::uint8_t& out) {
  if (a == 0) {
    out = b;
    return true;
  }
  if (b == 0) {
    out = a;
    return true;
  }
  if (a == 1 || b == 1) return false;
  if ((a % 2 == 0) && b == a + 1) {
    sign = -sign;
    out = 1;
    return true;
  }
  if ((a % 2 == 1) && b == a - 1) {
    out = 1;
    return true;
  }
  return false;
}

}  // namespace

std::pair<int, int> TensorWord::bidegree() const {
  int p = 0, q = 0;
  for (auto c : codes) {
    auto [dp, dq] = decode_gen(c).bidegree();
    p += dp;
    q += dq;
  }
  return {p, q};
}

std::string TensorWord::str() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    if (j) out << "*";
    LocalGen a = gen(j);
    switch (a.kind) {
      case GenKind::BetaDual: out << "b'"; break;
      case GenKind::Beta: out << "b"; break;
      case GenKind::Alpha: out << "a" << a.index; break;
      case GenKind::AlphaDual: out << "a" << a.index << "'"; break;
    }
  }
  return out.str();
}

std::optional<std::pair<int, TensorWord>> word_mul(const TensorWord& w1, const TensorWord& w2) {
  const std::size_t n = w1.size();
  if (w2.size() != n) throw Error(ErrorKind::LengthMismatch, "tensor words of unequal length");
  int sign = 1;
  TensorWord out;
  out.codes.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!local_mul(w1.codes[j], w2.codes[j], sign, out.codes[j])) return std::nullopt;
  // Koszul sign: factor j of w2 moves left past factors j+1..n-1 of w1.
  int e = 0, osuf = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (odd_code(w2.codes[j])) e += osuf;
    if (odd_code(w1.codes[j])) ++osuf;
  }
  if (e % 2) sign = -sign;
  return std::make_pair(sign, std::move(out));
}

std::pair<int, TensorWord> sn_act(const Perm& sigma, const TensorWord& w) {
  const std::size_t n = w.size();
  if (sigma.size() != n) throw Error(ErrorKind::LengthMismatch, "permutation size mismatch");
  TensorWord out;
  out.codes.assign(n, 255);
  for (std::size_t j = 0; j < n; ++j) {
    int t = sigma[j];
    if (t < 0 || static_cast<std::size_t>(t) >= n || out.codes[t] != 255)
      throw Error(ErrorKind::Domain, "not a permutation");
    out.codes[t] = w.codes[j];
  }
  int inv = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!odd_code(w.codes[j])) continue;
    for (std::size_t k = j + 1; k < n; ++k)
      if (odd_code(w.codes[k]) && sigma[j] > sigma[k]) ++inv;
  }
  return {inv % 2 ? -1 : 1, std::move(out)};
}

CohClass coh_add(const CohClass& x, const CohClass& y) {
  if (x.n != y.n || x.p != y.p || x.q != y.q)
    throw Error(ErrorKind::Domain, "adding classes of different bidegree");
  CohClass r = x;
  for (const auto& [w, c] : y.terms) {
    auto [it, inserted] = r.terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

CohClass coh_scale(const CohClass& x, const Rat& s) {
  CohClass r{x.n, x.p, x.q, {}};
  if (s == 0) return r;
  for (const auto& [w, c] : x.terms) r.terms.emplace(w, c * s);
  return r;
}

CohClass coh_act(const Perm& sigma, const CohClass& x) {
  CohClass r{x.n, x.p, x.q, {}};
  for (const auto& [w, c] : x.terms) {
    auto [s, out] = sn_act(sigma, w);
    auto [it, inserted] = r.terms.emplace(std::move(out), c * s);
    if (!inserted) {
      it->second += c * s;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

TensorWord standard_word(int g, int n, const IndexPair& pair) {
  const int m = n / 2;
  const int nu = static_cast<int>(pair.nu());
  if (n < 0 || n % 2) throw Error(ErrorKind::OddPower, "standard words need even n");
  if (pair.J.size() != pair.nu() || nu > m)
    throw Error(ErrorKind::Domain, "index pair sizes must agree and be at most n/2");
  auto valid = [g](const std::vector<int>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] < 1 || v[k] > g || (k && v[k] <= v[k - 1])) return false;
    return true;
  };
  if (!valid(pair.I) || !valid(pair.J))
    throw Error(ErrorKind::Domain, "index sets must be strictly increasing in 1..g");
  TensorWord w;
  w.codes.reserve(n);
  for (int i : pair.I) w.codes.push_back(encode_gen({GenKind::Alpha, i}));
  for (int j : pair.J) w.codes.push_back(encode_gen({GenKind::AlphaDual, j}));
  for (int k = 0; k < m - nu; ++k) w.codes.push_back(encode_gen({GenKind::Beta, 0}));
  for (int k = 0; k < m - nu; ++k) w.codes.push_back(encode_gen({GenKind::BetaDual, 0}));
  return w;
}

int oracle_max_n() {
  static const int cap = [] {
    if (const char* s = std::getenv("GWSYM_MAX_N")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 10;
  }();
  return cap;
}

namespace {

// ---- packed-word utilities for whole-space scans (6 bits per slot, slot 0 on top) ----

constexpr int kSlotBits = 6;

std::uint64_t pack_word(const TensorWord& w) {
  std::uint64_t v = 0;
  for (auto c : w.codes) v = (v << kSlotBits) | c;
  return v;
}

TensorWord unpack_word(std::uint64_t v, int n) {
  TensorWord w;
  w.codes.resize(n);
  for (int j = n - 1; j >= 0; --j) {
    w.codes[j] = static_cast<std::uint8_t>(v & ((1u << kSlotBits) - 1));
    v >>= kSlotBits;
  }
  return w;
}

void check_scan_bounds(int g, int n) {
  if (g > 31)
    throw Error(ErrorKind::Domain, "invariant-space scan supports genus <= 31");
  if (n > oracle_max_n())
    throw Error(ErrorKind::Domain,
                "n exceeds the oracle guard (" + std::to_string(oracle_max_n()) +
                    "); set GWSYM_MAX_N to override (unsafe)");
}

void gen_words(int g, int n, int slot, int na, int nad, int nb, int nbd, TensorWord& cur,
               std::vector<std::uint64_t>& out) {
  if (slot == n) {
    out.push_back(pack_word(cur));
    return;
  }
  if (nb) {
    --nb;
    cur.codes[slot] = 1;
    gen_words(g, n, slot + 1, na, nad, nb, nbd, cur, out);
    ++nb;
  }
  if (nbd) {
    --nbd;
    cur.codes[slot] = 0;
    gen_words(g, n, slot + 1, na, nad, nb, nbd, cur, out);
    ++nbd;
  }
  if (na)
    for (int i = 1; i <= g; ++i) {
      cur.codes[slot] = static_cast<std::uint8_t>(2 * i);
      gen_words(g, n, slot + 1, na - 1, nad, nb, nbd, cur, out);
    }
  if (nad)
    for (int i = 1; i <= g; ++i) {
      cur.codes[slot] = static_cast<std::uint8_t>(2 * i + 1);
      gen_words(g, n, slot + 1, na, nad - 1, nb, nbd, cur, out);
    }
}

std::vector<std::uint64_t> middle_words_packed(int g, int n) {
  check_scan_bounds(g, n);
  const int m = n / 2;
  std::vector<std::uint64_t> out;
  TensorWord cur;
  cur.codes.resize(n);
  // #alpha = #alphaDual = a, #beta = #betaDual = m - a forced by bidegree (m, m).
  for (int a = 0; a <= m; ++a) {
    if (a > 0 && g == 0) break;
    gen_words(g, n, 0, a, a, m - a, m - a, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Full signed orbit sum sum_{sigma in S_n} sign(sigma, w0) sigma(w0), keyed by packed word.
std::map<std::uint64_t, std::int64_t> orbit_sum(const TensorWord& w0) {
  const int n = static_cast<int>(w0.size());
  std::map<std::uint64_t, std::int64_t> sum;
  Perm sigma = identity_perm(n);
  do {
    auto [s, w] = sn_act(sigma, w0);
    sum[pack_word(w)] += s;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

}  // namespace

std::vector<TensorWord> all_middle_words(int g, int n) {
  if (g < 0 || n < 0) throw Error(ErrorKind::Domain, "need g, n >= 0");
  if (n % 2) throw Error(ErrorKind::OddPower, "middle bidegree needs even n");
  std::vector<TensorWord> out;
  for (std::uint64_t v : middle_words_packed(g, n)) out.push_back(unpack_word(v, n));
  return out;
}

std::size_t fixed_space_dim_by_constraints(int g, int n) {
  if (g < 0 || n < 0) throw Error(ErrorKind::Domain, "need g, n >= 0");
  if (n % 2) throw Error(ErrorKind::OddPower, "middle bidegree needs even n");
  const std::vector<std::uint64_t> words = middle_words_packed(g, n);
  const std::size_t N = words.size();
  std::vector<std::size_t> parent(N);
  std::vector<std::uint8_t> par(N, 0);   // sign of node relative to parent (0: +, 1: -)
  std::vector<std::uint8_t> dead(N, 0);  // on roots
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v, int& sign_out) {
    int s = 0;
    std::size_t r = v;
    while (parent[r] != r) {
      s ^= par[r];
      r = parent[r];
    }
    // path compression
    std::size_t cur = v;
    int cs = s;
    while (parent[cur] != cur) {
      std::size_t nxt = parent[cur];
      int np = par[cur];
      parent[cur] = r;
      par[cur] = static_cast<std::uint8_t>(cs);
      cs ^= np;
      cur = nxt;
    }
    sign_out = s;
    return r;
  };
  auto index_of = [&](std::uint64_t v) {
    auto it = std::lower_bound(words.begin(), words.end(), v);
    return static_cast<std::size_t>(it - words.begin());
  };
  const std::uint64_t slot_mask = (1u << kSlotBits) - 1;
  for (std::size_t wi = 0; wi < N; ++wi) {
    std::uint64_t v = words[wi];
    for (int j = 0; j + 1 < n; ++j) {
      int sh_hi = kSlotBits * (n - 1 - j), sh_lo = kSlotBits * (n - 2 - j);
      std::uint64_t a = (v >> sh_hi) & slot_mask, b = (v >> sh_lo) & slot_mask;
      std::uint64_t swapped = (v & ~((slot_mask << sh_hi) | (slot_mask << sh_lo))) |
                              (b << sh_hi) | (a << sh_lo);
      int edge_sign = (odd_code(static_cast<std::uint8_t>(a)) &&
                       odd_code(static_cast<std::uint8_t>(b)))
                          ? 1
                          : 0;  // parity bit: 1 means the swap negates
      if (swapped == v) {
        int s;
        std::size_t r = find(wi, s);
        if (edge_sign) dead[r] = 1;
        continue;
      }
      std::size_t wj = index_of(swapped);
      int si, sj;
      std::size_t ri = find(wi, si), rj = find(wj, sj);
      if (ri == rj) {
        if ((si ^ sj) != edge_sign) dead[ri] = 1;
      } else {
        parent[rj] = ri;
        par[rj] = static_cast<std::uint8_t>(si ^ sj ^ edge_sign);
        if (dead[rj]) dead[ri] = 1;
      }
    }
  }
  std::size_t dim = 0;
  for (std::size_t i = 0; i < N; ++i)
    if (parent[i] == i && !dead[i]) ++dim;
  return dim;
}

namespace {

void enumerate_subsets(int g, int nu, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == nu) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i <= g; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

// Span agreement between the constructed orbit sums and the full fixed space; returns
// the dimension of that space (the number of surviving orbits).
std::size_t cross_check_basis(const HodgeBasis& B) {
  check_scan_bounds(B.g, B.n);
  const std::vector<std::uint64_t> words = middle_words_packed(B.g, B.n);
  std::vector<std::uint8_t> seen(words.size(), 0);
  auto index_of = [&](std::uint64_t v) {
    return static_cast<std::size_t>(std::lower_bound(words.begin(), words.end(), v) -
                                    words.begin());
  };
  std::map<std::uint64_t, std::map<std::uint64_t, std::int64_t>> surviving;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (seen[i]) continue;
    auto sum = orbit_sum(unpack_word(words[i], B.n));
    bool alive = false;
    for (auto& [key, c] : sum) {
      seen[index_of(key)] = 1;
      if (c != 0) alive = true;
    }
    if (alive) {
      std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
      surviving.emplace(words[i], std::move(sum));
    }
  }
  bool ok = surviving.size() == B.pairs.size();
  for (std::size_t k = 0; ok && k < B.pairs.size(); ++k) {
    // The orbit of a_IJ is the arrangement set of its factor multiset; its lex-min
    // member is the sorted word.
    TensorWord rep = standard_word(B.g, B.n, B.pairs[k]);
    std::sort(rep.codes.begin(), rep.codes.end());
    auto it = surviving.find(pack_word(rep));
    if (it == surviving.end()) {
      ok = false;
      break;
    }
    // The constructed class must match the orbit sum up to a global sign.
    const auto& osum = it->second;
    const auto& cls = B.classes[k].terms;
    if (cls.size() != osum.size()) {
      ok = false;
      break;
    }
    int rel = 0;
    for (const auto& [w, c] : cls) {
      auto jt = osum.find(pack_word(w));
      if (jt == osum.end() || (c != Rat(jt->second) && c != Rat(-jt->second))) {
        ok = false;
        break;
      }
      int r = (c == Rat(jt->second)) ? 1 : -1;
      if (rel == 0)
        rel = r;
      else if (rel != r) {
        ok = false;
        break;
      }
    }
  }
  if (!ok)
    throw Error(ErrorKind::Domain,
                "invariant basis does not match the signed fixed space (internal check)");
  return surviving.size();
}

}  // namespace

HodgeBasis invariant_basis(int g, int n) {
  if (g < 0 || n < 0) throw Error(ErrorKind::Domain, "need g, n >= 0");
  if (n % 2) throw Error(ErrorKind::OddPower, "invariant basis needs even n");
  check_scan_bounds(g, n);
  HodgeBasis B;
  B.g = g;
  B.n = n;
  B.m = n / 2;
  const int numax = std::min(B.m, g);
  for (int nu = 0; nu <= numax; ++nu) {
    std::vector<std::vector<int>> subsets;
    enumerate_subsets(g, nu, subsets);
    for (const auto& I : subsets)
      for (const auto& J : subsets) B.pairs.push_back({I, J});
  }
  for (const auto& pair : B.pairs) {
    TensorWord a = standard_word(g, n, pair);
    std::map<TensorWord, std::int64_t> acc;
    Perm sigma = identity_perm(n);
    do {
      auto [s, w] = sn_act(sigma, a);
      acc[std::move(w)] += s;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CohClass cls{n, B.m, B.m, {}};
    for (auto& [w, c] : acc)
      if (c != 0) cls.terms.emplace(w, Rat(c));
    B.classes.push_back(std::move(cls));
  }
  B.fixed_dim = cross_check_basis(B);
  return B;
}

CohClass cup(const CohClass& x, const CohClass& y) {
  if (x.n != y.n) throw Error(ErrorKind::LengthMismatch, "cup of words of unequal length");
  CohClass r{x.n, x.p + y.p, x.q + y.q, {}};
  const int n = x.n;
  if (n > 0 && r.p == n && r.q == n) {
    // Top-bidegree product: every slot must multiply to Beta, so each word of x pairs
    // with exactly one candidate word of y.
    Rat acc = 0;
    for (const auto& [w1, c1] : x.terms) {
      TensorWord w2;
      w2.codes.resize(n);
      int sign = 1;
      for (int j = 0; j < n; ++j) {
        std::uint8_t a = w1.codes[j];
        if (a == 0)
          w2.codes[j] = 1;
        else if (a == 1)
          w2.codes[j] = 0;
        else if (a % 2 == 0) {
          w2.codes[j] = static_cast<std::uint8_t>(a + 1);
          sign = -sign;
        } else
          w2.codes[j] = static_cast<std::uint8_t>(a - 1);
      }
      auto it = y.terms.find(w2);
      if (it == y.terms.end()) continue;
      // Koszul sign; partner factors have the parity of the originals.
      int e = 0, osuf = 0;
      for (int j = n; j-- > 0;) {
        if (odd_code(w2.codes[j])) e += osuf;
        if (odd_code(w1.codes[j])) ++osuf;
      }
      if (e % 2) sign = -sign;
      acc += c1 * it->second * sign;
    }
    if (acc != 0) {
      TensorWord all_beta;
      all_beta.codes.assign(n, 1);
      r.terms.emplace(std::move(all_beta), std::move(acc));
    }
    return r;
  }
  for (const auto& [w1, c1] : x.terms)
    for (const auto& [w2, c2] : y.terms) {
      auto prod = word_mul(w1, w2);
      if (!prod) continue;
      Rat c = c1 * c2 * prod->first;
      auto [it, inserted] = r.terms.emplace(std::move(prod->second), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

Rat trace_sym(const CohClass& x) {
  if (x.p != x.n || x.q != x.n)
    throw Error(ErrorKind::WrongBidegree, "trace needs bidegree (n, n)");
  TensorWord all_beta;
  all_beta.codes.assign(x.n, 1);
  auto it = x.terms.find(all_beta);
  if (it == x.terms.end()) return Rat(0);
  return it->second / Rat(factorial(static_cast<unsigned>(x.n)));
}

GramMatrix gram_middle(int g, int n) {
  HodgeBasis B = invariant_basis(g, n);
  const std::size_t d = B.classes.size();
  GramMatrix G;
  G.field = FieldDesc::Q();
  G.entries.assign(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      G.entries[i][j] = trace_sym(cup(B.classes[i], B.classes[j]));
  return G;
}

GWElement chi_sym_hodge(int g, int n) {
  if (g < 0) throw Error(ErrorKind::Domain, "negative genus");
  if (n % 2) throw Error(ErrorKind::OddPower, "middle-cohomology route needs even n");
  if (n < 2) throw Error(ErrorKind::Domain, "chi_sym_hodge needs n >= 2");
  GWElement q = gram_to_gw(gram_middle(g, n));
  Int defect = rank_formula(g, n) - q.rank();
  if (defect % 2 != 0)
    throw Error(ErrorKind::NonIntegralH, "rank defect is odd, no hyperbolic completion");
  return q + GWElement::hyperbolic(to_mult(defect / 2));
}

}  // namespace gwsym
