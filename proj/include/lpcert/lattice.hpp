#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpcert/interval.hpp"
#include "lpcert/kernels.hpp"

namespace lpcert {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntervalMatrix = std::vector<std::vector<Interval>>;
using IntVector = std::vector<long>;

/// Symmetric matrix of inner products; exact (point entries) or interval.
class GramMatrix {
 public:
  /// Throws Precondition unless square and symmetric (entry-for-entry equal intervals).
  explicit GramMatrix(IntervalMatrix entries);
  static GramMatrix exact(const RationalMatrix& entries);
  /// "a,b;b,c" with Rational entries.
  static GramMatrix parse(const std::string& text);

  int dimension() const { return static_cast<int>(entries_.size()); }
  const Interval& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const IntervalMatrix& entries() const { return entries_; }
  bool is_exact() const;
  /// Point entries; throws Precondition if not exact.
  RationalMatrix exact_entries() const;

  /// Enclosure of x^T G x.
  Interval norm(const IntVector& x) const;
  Interval determinant() const;
  GramMatrix scaled(const Rational& lambda) const;

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) = default;
  std::string str() const;

 private:
  IntervalMatrix entries_;
};

/// Throws NotPositiveDefinite unless every leading principal minor is certainly positive.
void certify_positive_definite(const GramMatrix& gram);

/// Exact or interval determinant (Gaussian elimination on enclosures).
Interval determinant(const IntervalMatrix& m);

/// Rows are basis vectors. An optional exact Gram may accompany irrational bases
/// (e.g. hexagonal); it is accepted only if the interval Gram B B^T contains it.
class LatticeBasis {
 public:
  explicit LatticeBasis(IntervalMatrix rows, std::optional<RationalMatrix> exact_gram = std::nullopt);
  static LatticeBasis exact(const RationalMatrix& rows);
  static LatticeBasis identity(int n);
  /// v = (sqrt 2, 0), w = (sqrt 2 / 2, sqrt 6 / 2), entries enclosed to 2^-bits; exact Gram ((2,1),(1,2)).
  static LatticeBasis hexagonal(long bits = 128);

  int dimension() const { return static_cast<int>(rows_.size()); }
  const IntervalMatrix& rows() const { return rows_; }
  const std::optional<RationalMatrix>& exact_gram() const { return exact_gram_; }
  LatticeBasis scaled(const Interval& factor) const;
  bool contains(const LatticeBasis& other) const;

 private:
  IntervalMatrix rows_;
  std::optional<RationalMatrix> exact_gram_;
};

struct GramAndCovolume {
  GramMatrix gram;
  Interval covolume;
};

/// Gram = B B^T (exact when the basis carries an exact Gram or has point entries) and
/// covolume = sqrt(det Gram). Throws SingularBasis.
GramAndCovolume gram_and_covolume(const LatticeBasis& basis, long bits = 96);

/// Inverse-transpose of the basis matrix. Throws SingularBasis.
LatticeBasis dual_basis(const LatticeBasis& basis);
/// Inverse of the Gram matrix (the Gram of the dual basis). Throws SingularBasis.
GramMatrix dual_gram(const GramMatrix& gram);

enum class Membership { Certain, Possible };

struct LatticeVector {
  IntVector coords;
  Interval norm;
  Membership membership = Membership::Certain;
};

struct ShortVectorReport {
  Rational bound;
  std::vector<LatticeVector> vectors;  // lexicographic by coords
  std::optional<Interval> minimal_norm;  // enclosure of the least norm among the vectors
  std::size_t nodes_visited = 0;

  bool all_certain() const;
};

struct EnumerationOptions {
  std::size_t node_budget = 20'000'000;
  Execution execution = Execution::Serial;
};

/// Every nonzero integer vector x with x^T G x <= bound (for interval Grams: whose norm
/// enclosure meets [0, bound]; `Certain` only if it lies wholly below bound).
/// Throws NotPositiveDefinite, BoundTooLargeForBudget, Precondition (bound <= 0).
ShortVectorReport enumerate_vectors_below(const GramMatrix& gram, const Rational& bound,
                                          const EnumerationOptions& options = {});

/// Brute force over the box |x_i| <= radius, for testing.
std::vector<LatticeVector> enumerate_box(const GramMatrix& gram, const Rational& bound, long radius);

/// Enclosure of the minimal norm.
Interval minimal_norm(const GramMatrix& gram, const EnumerationOptions& options = {});

struct LatticeSummary {
  Interval minimal_norm;
  Interval determinant;
  Interval density;
  std::size_t kissing_number = 0;
  bool kissing_certain = true;
};

/// vol(B_{sqrt(M)/2}) / sqrt(D); in dimension 2 this is (pi/4) M / sqrt(D).
LatticeSummary lattice_summary(const GramMatrix& gram, const Rational& width, const EnumerationOptions& options = {});
Interval lattice_density(const GramMatrix& gram, const Rational& width, const EnumerationOptions& options = {});

/// Exact LLL reduction (delta = 3/4) of a positive definite rational Gram matrix.
/// Returns the unimodular U (rows: new basis in old coordinates) with U G U^T reduced.
std::vector<IntVector> lll_reduce(const RationalMatrix& gram);

}  // namespace lpcert
