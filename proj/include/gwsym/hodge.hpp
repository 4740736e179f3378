#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gwsym/quadform.hpp"

namespace gwsym {

// Local Hodge-cohomology generators of a genus-g curve factor:
//   BetaDual (0,0) unit, Alpha_i (1,0), AlphaDual_i (0,1), Beta (1,1), i = 1..g.
// Alpha/AlphaDual have odd total degree, Beta/BetaDual even.
enum class GenKind : std::uint8_t { BetaDual, Beta, Alpha, AlphaDual };

struct LocalGen {
  GenKind kind = GenKind::BetaDual;
  int index = 0;  // 1..g for Alpha/AlphaDual, 0 otherwise
  bool odd() const { return kind == GenKind::Alpha || kind == GenKind::AlphaDual; }
  std::pair<int, int> bidegree() const;
  bool operator==(const LocalGen&) const = default;
};

// Compact code: BetaDual = 0, Beta = 1, Alpha_i = 2i, AlphaDual_i = 2i + 1.
std::uint8_t encode_gen(const LocalGen& a);
LocalGen decode_gen(std::uint8_t code);

// Pure tensor of local generators, one per curve factor.
struct TensorWord {
  std::vector<std::uint8_t> codes;

  std::size_t size() const { return codes.size(); }
  LocalGen gen(std::size_t j) const { return decode_gen(codes[j]); }
  std::pair<int, int> bidegree() const;
  bool operator==(const TensorWord&) const = default;
  auto operator<=>(const TensorWord&) const = default;
  std::string str() const;
};

using Perm = std::vector<int>;  // sigma(j) = perm[j], 0-based

// Slotwise product with the Koszul sign from moving the second word's factors past the
// first word's; nullopt when some slot product vanishes. LengthMismatch on unequal sizes.
std::optional<std::pair<int, TensorWord>> word_mul(const TensorWord& w1, const TensorWord& w2);

// Signed permutation action: output factor sigma(j) is input factor j; the sign counts
// inversions of sigma among positions holding odd generators.
std::pair<int, TensorWord> sn_act(const Perm& sigma, const TensorWord& w);

// Finite linear combination of words, homogeneous of one bidegree (p, q), length n.
struct CohClass {
  int n = 0, p = 0, q = 0;
  std::map<TensorWord, Rat> terms;
  bool is_zero() const { return terms.empty(); }
};

CohClass coh_add(const CohClass& x, const CohClass& y);
CohClass coh_scale(const CohClass& x, const Rat& s);
CohClass coh_act(const Perm& sigma, const CohClass& x);

// Subsets I, J of {1..g} of equal size nu <= n/2, strictly increasing.
struct IndexPair {
  std::vector<int> I, J;
  std::size_t nu() const { return I.size(); }
  bool operator==(const IndexPair&) const = default;
};

// The standard word a_IJ: alphas over I, alphaDuals over J, then (m - nu) betas and
// (m - nu) betaDuals, m = n/2.
TensorWord standard_word(int g, int n, const IndexPair& pair);

struct HodgeBasis {
  int g = 0, n = 0, m = 0;
  std::vector<IndexPair> pairs;     // ordered by (nu, I lex, J lex)
  std::vector<CohClass> classes;    // symmetrized integer-coefficient orbit sums, aligned
  std::size_t fixed_dim = 0;        // independent signed-fixed-space dimension
};

// Basis of the S_n-invariants in bidegree (m, m): orbit sums of the standard words.
// Cross-checks itself against the full signed fixed space computed by orbit enumeration
// over every (m, m) word, and asserts the two spans agree. OddPower for odd n; the n
// guard (default 10, env GWSYM_MAX_N) bounds the S_n enumeration.
HodgeBasis invariant_basis(int g, int n);

// Bilinear extension of word_mul. Products landing in the top bidegree (n, n) are joined
// on the unique compatible partner word; the semantics match the nested-loop expansion.
CohClass cup(const CohClass& x, const CohClass& y);

// Trace of a top-bidegree class: coefficient of the all-beta word divided by n!.
Rat trace_sym(const CohClass& x);

// Gram matrix of the cup-product pairing on the invariant basis, exact entries.
GramMatrix gram_middle(int g, int n);

// Euler characteristic of Sym^n from the middle-cohomology pairing plus the hyperbolic
// completion fixed by the rank formula. Requires even n >= 2. NonIntegralH when the rank
// defect is odd (never happens; guards the bookkeeping).
GWElement chi_sym_hodge(int g, int n);

// Every word of bidegree (n/2, n/2) and length n (test and cross-check support).
std::vector<TensorWord> all_middle_words(int g, int n);

// Dimension of the signed S_n fixed space in bidegree (n/2, n/2), computed by solving the
// adjacent-transposition constraint system (sparse kernel via sign-tracking union-find).
std::size_t fixed_space_dim_by_constraints(int g, int n);

int oracle_max_n();

}  // namespace gwsym
