#pragma once

#include "halolab/errors.hpp"
#include "halolab/numeric.hpp"

#include <vector>

namespace halolab {

/// Arithmetic in the prime field F_q (elements stored as ints in [0, q)).
struct Fq {
  int q;

  explicit Fq(int q_) : q(q_) {
    if (q < 2) throw InvalidInput("field order must be at least 2");
    for (int p = 2; p * p <= q; ++p)
      if (q % p == 0) throw InvalidInput("field order must be prime");
  }
  int add(int a, int b) const { return (a + b) % q; }
  int sub(int a, int b) const { return ((a - b) % q + q) % q; }
  int mul(int a, int b) const { return (a * b) % q; }
  int neg(int a) const { return (q - a) % q; }
  int inv(int a) const {
    if (a % q == 0) throw InvalidInput("inverse of zero in F_q");
    int r = 1;
    // a^(q-2) by square-and-multiply; q is small
    int e = q - 2, base = ((a % q) + q) % q;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

/// Dense n x n matrix over F_q, row-major; entry (row, col) is the
/// coefficient of basis vector `row` in the image of basis vector `col`.
class FqMatrix {
public:
  FqMatrix(int n, int q) : n_(n), fq_(q), a_(static_cast<std::size_t>(n) * n, 0) {}
  static FqMatrix identity(int n, int q);

  int n() const { return n_; }
  int q() const { return fq_.q; }
  int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  void set(int r, int c, int v) { a_[static_cast<std::size_t>(r) * n_ + c] = ((v % q()) + q()) % q(); }

  FqMatrix mul(const FqMatrix& o) const;
  std::vector<int> apply(const std::vector<int>& v) const;  // column vector
  int rank() const;
  bool invertible() const { return rank() == n_; }
  FqMatrix inverse() const;  // throws InternalError if singular

  bool operator==(const FqMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
  int n_;
  Fq fq_;
  std::vector<int> a_;
};

/// Row-reduce a list of vectors over F_q into reduced row echelon form.
/// Returns the RREF basis (independent rows, pivots normalized to 1).
std::vector<std::vector<int>> rref_basis(std::vector<std::vector<int>> rows, int q);

/// True if v lies in the span of the given RREF basis.
bool in_span(const std::vector<std::vector<int>>& rref, std::vector<int> v, int q);

/// All q^k span elements of a basis (k small).  Used for lex-minimal choices
/// and for ranking vectors relative to a subspace.
std::vector<std::vector<int>> span_elements(const std::vector<std::vector<int>>& basis,
                                            int q, int dim_ambient);

/// Index of a vector in the lexicographic order of F_q^n (digits by position,
/// position 0 most significant).
BigInt vector_lex_index(const std::vector<int>& v, int q);
std::vector<int> vector_from_lex_index(BigInt idx, int n, int q);

/// Gaussian binomial [n k]_q: number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(int n, int k, int q);

/// Canonical enumeration of k-dim subspaces of F_q^n by RREF shape:
/// pivot-column sets in lexicographic order, free entries as base-q digits.
BigInt subspace_count(int n, int k, int q);
std::vector<std::vector<int>> subspace_by_rank(int n, int k, int q, BigInt rank);
BigInt subspace_rank(int n, int k, int q, const std::vector<std::vector<int>>& rref);

}  // namespace halolab
