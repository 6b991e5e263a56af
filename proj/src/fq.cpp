#include "halolab/fq.hpp"

#include <algorithm>

namespace halolab {

FqMatrix FqMatrix::identity(int n, int q) {
  FqMatrix m(n, q);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
  FqMatrix r(n_, q());
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      int aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < n_; ++j)
        r.set(i, j, fq_.add(r.at(i, j), fq_.mul(aik, o.at(k, j))));
    }
  return r;
}

std::vector<int> FqMatrix::apply(const std::vector<int>& v) const {
  std::vector<int> r(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    int acc = 0;
    for (int j = 0; j < n_; ++j) acc = fq_.add(acc, fq_.mul(at(i, j), v[j]));
    r[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

int FqMatrix::rank() const {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> row(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) row[static_cast<std::size_t>(j)] = at(i, j);
    rows.push_back(std::move(row));
  }
  return static_cast<int>(rref_basis(std::move(rows), q()).size());
}

FqMatrix FqMatrix::inverse() const {
  // Gauss-Jordan on [A | I].
  FqMatrix a = *this, inv = identity(n_, q());
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (a.at(r, col)) { piv = r; break; }
    if (piv < 0) throw InternalError("FqMatrix::inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a.a_[static_cast<std::size_t>(piv) * n_ + j], a.a_[static_cast<std::size_t>(col) * n_ + j]);
        std::swap(inv.a_[static_cast<std::size_t>(piv) * n_ + j], inv.a_[static_cast<std::size_t>(col) * n_ + j]);
      }
    }
    int s = fq_.inv(a.at(col, col));
    for (int j = 0; j < n_; ++j) {
      a.set(col, j, fq_.mul(a.at(col, j), s));
      inv.set(col, j, fq_.mul(inv.at(col, j), s));
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      int f = a.at(r, col);
      if (!f) continue;
      for (int j = 0; j < n_; ++j) {
        a.set(r, j, fq_.sub(a.at(r, j), fq_.mul(f, a.at(col, j))));
        inv.set(r, j, fq_.sub(inv.at(r, j), fq_.mul(f, inv.at(col, j))));
      }
    }
  }
  return inv;
}

std::vector<std::vector<int>> rref_basis(std::vector<std::vector<int>> rows, int q) {
  Fq fq(q);
  std::vector<std::vector<int>> basis;
  for (auto& v : rows) {
    for (const auto& b : basis) {
      std::size_t piv = 0;
      while (piv < b.size() && !b[piv]) ++piv;
      if (piv < b.size() && v[piv]) {
        int f = v[piv];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = fq.sub(v[j], fq.mul(f, b[j]));
      }
    }
    std::size_t piv = 0;
    while (piv < v.size() && !v[piv]) ++piv;
    if (piv == v.size()) continue;
    int s = fq.inv(v[piv]);
    for (auto& c : v) c = fq.mul(c, s);
    // clear this pivot column in existing basis rows
    for (auto& b : basis) {
      if (b[piv]) {
        int f = b[piv];
        for (std::size_t j = 0; j < v.size(); ++j) b[j] = fq.sub(b[j], fq.mul(f, v[j]));
      }
    }
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    std::size_t pa = 0, pb = 0;
    while (pa < a.size() && !a[pa]) ++pa;
    while (pb < b.size() && !b[pb]) ++pb;
    return pa < pb;
  });
  return basis;
}

bool in_span(const std::vector<std::vector<int>>& rref, std::vector<int> v, int q) {
  Fq fq(q);
  for (const auto& b : rref) {
    std::size_t piv = 0;
    while (piv < b.size() && !b[piv]) ++piv;
    if (piv < b.size() && v[piv]) {
      int f = v[piv];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = fq.sub(v[j], fq.mul(f, b[j]));
    }
  }
  for (int c : v)
    if (c) return false;
  return true;
}

std::vector<std::vector<int>> span_elements(const std::vector<std::vector<int>>& basis,
                                            int q, int dim_ambient) {
  Fq fq(q);
  std::vector<std::vector<int>> out;
  std::vector<int> coeff(basis.size(), 0);
  for (;;) {
    std::vector<int> v(static_cast<std::size_t>(dim_ambient), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!coeff[i]) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = fq.add(v[j], fq.mul(coeff[i], basis[i][j]));
    }
    out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < coeff.size()) {
      if (++coeff[k] < q) break;
      coeff[k++] = 0;
    }
    if (k == coeff.size()) break;
  }
  return out;
}

BigInt vector_lex_index(const std::vector<int>& v, int q) {
  BigInt idx = 0;
  for (int c : v) {
    idx *= q;
    idx += c;
  }
  return idx;
}

std::vector<int> vector_from_lex_index(BigInt idx, int n, int q) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(idx % q);
    idx /= q;
  }
  return v;
}

BigInt gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= big_pow(q, static_cast<unsigned long>(n - i)) - 1;
    den *= big_pow(q, static_cast<unsigned long>(k - i)) - 1;
  }
  return num / den;
}

namespace {

// Free entries of an RREF shape with pivot columns `piv` (sorted):
// positions (row i, col j) with j > piv[i] and j not a pivot column.
int free_count(const std::vector<int>& piv, int n) {
  int cnt = 0;
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = piv[i] + 1; j < n; ++j)
      if (!std::binary_search(piv.begin(), piv.end(), j)) ++cnt;
  return cnt;
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> pivot_columns(const std::vector<std::vector<int>>& rref) {
  std::vector<int> piv;
  for (const auto& row : rref) {
    std::size_t p = 0;
    while (p < row.size() && !row[p]) ++p;
    piv.push_back(static_cast<int>(p));
  }
  return piv;
}

}  // namespace

BigInt subspace_count(int n, int k, int q) { return gaussian_binomial(n, k, q); }

std::vector<std::vector<int>> subspace_by_rank(int n, int k, int q, BigInt rank) {
  if (k == 0) {
    if (rank != 0) throw InvalidInput("subspace_by_rank: rank out of range");
    return {};
  }
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  for (;;) {
    BigInt cnt = big_pow(q, static_cast<unsigned long>(free_count(piv, n)));
    if (rank < cnt) {
      // fill free entries from base-q digits of `rank`, row-major, most
      // significant digit first
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(k),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
      std::vector<std::pair<int, int>> freepos;
      for (int i = 0; i < k; ++i) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
        for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j)
          if (!std::binary_search(piv.begin(), piv.end(), j)) freepos.emplace_back(i, j);
      }
      for (auto it = freepos.rbegin(); it != freepos.rend(); ++it) {
        rows[static_cast<std::size_t>(it->first)][static_cast<std::size_t>(it->second)] =
            static_cast<int>(rank % q);
        rank /= q;
      }
      return rows;
    }
    rank -= cnt;
    if (!next_combination(piv, n)) throw InvalidInput("subspace_by_rank: rank out of range");
  }
}

BigInt subspace_rank(int n, int k, int q, const std::vector<std::vector<int>>& rref) {
  if (k == 0) return 0;
  std::vector<int> target = pivot_columns(rref);
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  BigInt rank = 0;
  while (piv != target) {
    rank += big_pow(q, static_cast<unsigned long>(free_count(piv, n)));
    if (!next_combination(piv, n)) throw InvalidInput("subspace_rank: pivots not reachable");
  }
  BigInt digits = 0;
  for (int i = 0; i < k; ++i)
    for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j)
      if (!std::binary_search(piv.begin(), piv.end(), j)) {
        digits *= q;
        digits += rref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
  return rank + digits;
}

}  // namespace halolab
