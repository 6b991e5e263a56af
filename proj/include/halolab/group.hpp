#pragma once

#include "halolab/fq.hpp"
#include "halolab/point.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace halolab {

enum class Family { FreeAbelian, Wreath, Shuffler, Juggler, Cloner };

std::string family_name(Family f);

/// Multiplication table of a small finite group.  Element 0 is the identity.
class FiniteGroupTable {
public:
  explicit FiniteGroupTable(std::vector<std::vector<int>> table);
  static FiniteGroupTable cyclic(int k);

  int size() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  bool operator==(const FiniteGroupTable& o) const { return table_ == o.table_; }

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

/// Finitely supported permutation: sorted (point -> image) pairs, no fixed
/// points stored, bijective on its support.
using SparsePerm = std::vector<std::pair<Point, Point>>;

/// Sparse F_q vector: sorted (point, coefficient) with coefficients in [1, q).
using FqVector = std::vector<std::pair<Point, int>>;

/// Finitely supported linear automorphism: sorted (basis point -> image
/// vector) columns; columns equal to the basis vector itself are not stored.
using SparseMat = std::vector<std::pair<Point, FqVector>>;

/// Finitely supported function into a finite group: sorted (point, value)
/// pairs, identity values not stored.
using SparseFunc = std::vector<std::pair<Point, int>>;

using Lamp = std::variant<std::monostate, SparsePerm, SparseMat, SparseFunc>;

struct HaloElement {
  Lamp lamp;
  Vec base;
};

struct GroupDescriptor {
  Family family = Family::FreeAbelian;
  int d = 1;  // base rank
  int r = 1;  // juggler arity (1 for Shuffler)
  int q = 2;  // field order (Cloner only)
  std::shared_ptr<const FiniteGroupTable> lamp_group;  // Wreath only
  std::vector<HaloElement> generators;                 // symmetric, canonical order
  std::vector<std::string> generator_names;
  std::vector<int> generator_inverse;  // index of the inverse of each generator

  static GroupDescriptor free_abelian(int d);
  static GroupDescriptor shuffler(int d) { return juggler(d, 1); }
  static GroupDescriptor juggler(int d, int r);
  static GroupDescriptor cloner(int d, int q);
  static GroupDescriptor wreath(int d, FiniteGroupTable lamps);

  bool same_group(const GroupDescriptor& o) const;
  int generator_index(const HaloElement& e) const;  // -1 if not a generator
};

// -- element operations -------------------------------------------------

HaloElement identity_element(const GroupDescriptor& g);
HaloElement translation_element(const GroupDescriptor& g, const Vec& v);
bool is_identity(const HaloElement& e);
bool elements_equal(const HaloElement& a, const HaloElement& b);

HaloElement compose(const HaloElement& a, const HaloElement& b, const GroupDescriptor& g);
HaloElement inverse(const HaloElement& a, const GroupDescriptor& g);
HaloElement conjugate(const HaloElement& a, const HaloElement& b, const GroupDescriptor& g);  // a b a^-1

/// Natural point action of the permutation families: (sigma, h) . p = sigma(h + p).
Point act_on_point(const HaloElement& e, const Point& p, const GroupDescriptor& g);
/// Linear action of the cloner family on sparse vectors.
FqVector act_on_vector(const HaloElement& e, const FqVector& v, const GroupDescriptor& g);

/// Deterministic text form: one support entry per line in canonical point
/// order, then the base vector.  Used as the dedup key everywhere.
std::string canonical_text(const HaloElement& e);
std::string canonical_text_compact(const HaloElement& e);  // single line

/// Checks every representation invariant; throws InternalError on failure.
void validate_element(const HaloElement& e, const GroupDescriptor& g);

// -- lamp part helpers (used by tilings and word constructions) ----------

Point perm_apply(const SparsePerm& p, const Point& x);
SparsePerm perm_from_pairs(std::vector<std::pair<Point, Point>> pairs);
SparsePerm perm_compose(const SparsePerm& a, const SparsePerm& b);  // a after b
SparsePerm perm_inverse(const SparsePerm& p);
SparsePerm perm_translate(const SparsePerm& p, const Vec& by);
SparsePerm make_transposition(const Point& a, const Point& b);

FqVector basis_vector(const Point& p);
FqVector fqvec_add(const FqVector& a, const FqVector& b, int q);
FqVector fqvec_scale(const FqVector& a, int c, int q);
FqVector fqvec_translate(const FqVector& a, const Vec& by);
FqVector mat_apply_basis(const SparseMat& m, const Point& p);
FqVector mat_apply(const SparseMat& m, const FqVector& v, int q);
SparseMat mat_normalize(SparseMat m);
SparseMat mat_compose(const SparseMat& a, const SparseMat& b, int q);
SparseMat mat_inverse(const SparseMat& m, int q);
SparseMat mat_translate(const SparseMat& m, const Vec& by);
/// Window of a sparse automorphism: stored columns plus all image support.
std::vector<Point> mat_window(const SparseMat& m);
/// Dense matrix of the restriction to a window (rows/cols in window order).
FqMatrix mat_to_dense(const SparseMat& m, const std::vector<Point>& window, int q);
SparseMat mat_from_dense(const FqMatrix& dense, const std::vector<Point>& window);
/// Transvection tau_{p,q}(lambda): adds lambda * (coefficient at src) to dst.
SparseMat make_transvection(const Point& dst, const Point& src, int lambda, int q);
SparseMat make_dilatation(const Point& at, int lambda, int q);

int func_apply(const SparseFunc& f, const Point& p);
SparseFunc func_from_pairs(std::vector<std::pair<Point, int>> pairs);
SparseFunc func_translate(const SparseFunc& f, const Vec& by);

}  // namespace halolab
