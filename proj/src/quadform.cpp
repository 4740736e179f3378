#include "gwsym/quadform.hpp"

#include <boost/multiprecision/integer.hpp>
#include <functional>

namespace gwsym {

void GramMatrix::check_symmetric() const {
  const std::size_t d = entries.size();
  for (const auto& row : entries)
    if (row.size() != d) throw Error(ErrorKind::Domain, "Gram matrix is not square");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (entries[i][j] != entries[j][i])
        throw Error(ErrorKind::Domain, "Gram matrix is not symmetric");
}

namespace {

Rat mod_p(const Rat& x, const Int& p) {
  Int n = ((num(x) % p) + p) % p;
  Int d = ((den(x) % p) + p) % p;
  if (d == 0) throw Error(ErrorKind::Domain, "Gram entry has a pole at p");
  Int dinv = boost::multiprecision::powm(d, p - 2, p);
  return Rat((n * dinv) % p);
}

}  // namespace

std::vector<Rat> diagonalize(const GramMatrix& G) {
  G.check_symmetric();
  if (G.field.is_function_field())
    throw Error(ErrorKind::UnsupportedField, "no Gram diagonalization over " + G.field.str());
  const bool modular = G.field.tag() == FieldTag::FinitePrime;
  const Int p = modular ? Int(G.field.p()) : Int(0);
  auto reduce = [&](const Rat& x) { return modular ? mod_p(x, p) : x; };
  auto divide = [&](const Rat& a, const Rat& b) {
    return modular ? mod_p(a * Rat(boost::multiprecision::powm(num(mod_p(b, p)), p - 2, p)), p)
                   : a / b;
  };

  auto a = G.entries;
  const std::size_t d = a.size();
  for (auto& row : a)
    for (auto& x : row) x = reduce(x);

  std::vector<Rat> diag;
  for (std::size_t i = 0; i < d; ++i) {
    // Pivot for position i: first nonzero diagonal entry at or after i.
    std::size_t piv = i;
    while (piv < d && a[piv][piv] == 0) ++piv;
    if (piv == d) {
      // All-zero trailing diagonal: take the first nonzero off-diagonal entry (r, c) in
      // index order; adding row+column c into r makes a[r][r] = 2 a[r][c] != 0.
      std::size_t r = d, c = d;
      for (std::size_t ii = i; ii < d && r == d; ++ii)
        for (std::size_t jj = ii + 1; jj < d; ++jj)
          if (a[ii][jj] != 0) {
            r = ii;
            c = jj;
            break;
          }
      if (r == d) throw Error(ErrorKind::SingularGram, "Gram matrix is singular");
      for (std::size_t k = 0; k < d; ++k) a[r][k] = reduce(a[r][k] + a[c][k]);
      for (std::size_t k = 0; k < d; ++k) a[k][r] = reduce(a[k][r] + a[k][c]);
      piv = r;
    }
    if (piv != i) {
      std::swap(a[piv], a[i]);
      for (std::size_t k = 0; k < d; ++k) std::swap(a[k][piv], a[k][i]);
    }
    const Rat pv = a[i][i];
    for (std::size_t r = i + 1; r < d; ++r) {
      if (a[r][i] == 0) continue;
      Rat f = divide(a[r][i], pv);
      for (std::size_t k = 0; k < d; ++k) a[r][k] = reduce(a[r][k] - f * a[i][k]);
      for (std::size_t k = 0; k < d; ++k) a[k][r] = reduce(a[k][r] - f * a[k][i]);
    }
    diag.push_back(pv);
  }
  return diag;
}

GWElement gram_to_gw(const GramMatrix& G) {
  GWElement x(G.field);
  for (const Rat& dv : diagonalize(G)) x.add_class(SquareClass::of(G.field, dv), 1);
  return x;
}

}  // namespace gwsym
