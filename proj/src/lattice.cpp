#include "lpcert/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "lpcert/error.hpp"
#include "lpcert/radial.hpp"

namespace lpcert {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::BoundTooLargeForBudget, "coordinate exceeds machine range");
  return z.get_si();
}

Interval rad_max_row_sum(const IntervalMatrix& m) {
  Rational best;
  for (const auto& row : m) {
    Rational s;
    for (const auto& x : row) s += x.width() / Rational(2);
    best = std::max(best, s);
  }
  return Interval(best);
}

IntervalMatrix submatrix(const IntervalMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  IntervalMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<Interval> row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != skip_col) row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Gauss-Jordan inverse on enclosures; pivot = largest mig in the column.
IntervalMatrix invert(const IntervalMatrix& m) {
  const std::size_t n = m.size();
  IntervalMatrix a = m;
  IntervalMatrix inv(n, std::vector<Interval>(n, Interval(Rational(0))));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Interval(Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].mig() > a[piv][col].mig()) piv = r;
    }
    if (a[piv][col].contains_zero()) throw Error(ErrorCode::SingularBasis, "matrix is not certainly invertible");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Interval p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    a[col][col] = Interval(Rational(1));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Interval f = a[r][col];
      if (f == Interval(Rational(0))) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
      a[r][col] = Interval(Rational(0));
    }
  }
  return inv;
}

IntervalMatrix to_interval(const RationalMatrix& m) {
  IntervalMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

// Gram-Schmidt data of a rational Gram: B_i = |b*_i|^2 and mu[i][j] for j < i.
struct GramSchmidt {
  std::vector<Rational> b;
  RationalMatrix mu;
};

GramSchmidt gram_schmidt(const RationalMatrix& g) {
  const std::size_t n = g.size();
  GramSchmidt gs{std::vector<Rational>(n), RationalMatrix(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu[j][k] * gs.mu[i][k] * gs.b[k];
      gs.mu[i][j] = s / gs.b[j];
    }
    Rational s = g[i][i];
    for (std::size_t k = 0; k < i; ++k) s -= gs.mu[i][k] * gs.mu[i][k] * gs.b[k];
    if (s.sign() <= 0) throw Error(ErrorCode::NotPositiveDefinite, "Gram matrix is not positive definite");
    gs.b[i] = s;
  }
  return gs;
}

// sqrt(x) rounded up to a rational, x >= 0.
Rational sqrt_upper(const Rational& x) {
  const Integer den = x.denominator();
  return Rational(isqrt(x.numerator() * den) + 1, den);
}

// Fincke-Pohst: x^T G x = sum_j B_j (y_j + sum_{i>j} mu_ij y_i)^2, enumerated from the last coordinate.
class Enumerator {
 public:
  Enumerator(const GramSchmidt& gs, std::size_t budget) : gs_(gs), budget_(budget), y_(gs.b.size()) {}

  void run_from(long top_value, const Rational& bound) {
    const std::size_t n = y_.size();
    y_[n - 1] = top_value;
    const Rational q = gs_.b[n - 1] * Rational(top_value) * Rational(top_value);
    if (q > bound) return;
    if (n == 1) {
      found_.push_back(y_);
    } else {
      recurse(n - 2, bound - q);
    }
  }

  static std::pair<long, long> range(const Rational& center, const Rational& remaining, const Rational& b) {
    const Rational s = sqrt_upper(remaining / b);
    return {to_long(ceil(center - s)), to_long(floor(center + s))};
  }

  std::vector<IntVector>& found() { return found_; }
  std::size_t nodes() const { return nodes_; }

 private:
  void recurse(std::size_t j, const Rational& remaining) {
    Rational shift;
    for (std::size_t i = j + 1; i < y_.size(); ++i) shift += gs_.mu[i][j] * Rational(y_[i]);
    const auto [lo, hi] = range(-shift, remaining, gs_.b[j]);
    for (long x = lo; x <= hi; ++x) {
      if (++nodes_ > budget_) throw Error(ErrorCode::BoundTooLargeForBudget, "enumeration exceeded its node budget");
      const Rational t = Rational(x) + shift;
      const Rational q = gs_.b[j] * t * t;
      if (q > remaining) continue;
      y_[j] = x;
      if (j == 0) {
        found_.push_back(y_);
      } else {
        recurse(j - 1, remaining - q);
      }
    }
  }

  const GramSchmidt& gs_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  IntVector y_;
  std::vector<IntVector> found_;
};

RationalMatrix transform_gram(const RationalMatrix& g, const std::vector<IntVector>& u) {
  const std::size_t n = g.size();
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s;
      for (std::size_t k = 0; k < n; ++k) {
        if (u[i][k] == 0) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (u[j][l] != 0) s += Rational(u[i][k] * u[j][l]) * g[k][l];
        }
      }
      out[i][j] = s;
    }
  }
  return out;
}

}  // namespace

// ---- GramMatrix --------------------------------------------------------------------------

GramMatrix::GramMatrix(IntervalMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxDimension)) {
    throw Error(ErrorCode::InvalidDimension, "Gram dimension must be in [1, 24]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw Error(ErrorCode::Precondition, "Gram matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(entries_[i][j] == entries_[j][i])) throw Error(ErrorCode::Precondition, "Gram matrix must be symmetric");
    }
  }
}

GramMatrix GramMatrix::exact(const RationalMatrix& entries) { return GramMatrix(to_interval(entries)); }

GramMatrix GramMatrix::parse(const std::string& text) {
  RationalMatrix rows;
  for (const auto& row_text : split(text, ';')) {
    std::vector<Rational> row;
    for (const auto& cell : split(row_text, ',')) row.push_back(Rational::parse(cell));
    rows.push_back(std::move(row));
  }
  return exact(rows);
}

bool GramMatrix::is_exact() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Interval& x) { return x.is_point(); });
  });
}

RationalMatrix GramMatrix::exact_entries() const {
  if (!is_exact()) throw Error(ErrorCode::Precondition, "Gram matrix has interval entries");
  RationalMatrix out;
  for (const auto& row : entries_) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(x.lo());
    out.push_back(std::move(r));
  }
  return out;
}

Interval GramMatrix::norm(const IntVector& x) const {
  if (x.size() != entries_.size()) throw Error(ErrorCode::Precondition, "vector dimension mismatch");
  Interval s(Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    s += entries_[i][i] * Interval(Rational(x[i] * x[i]));
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j] != 0) s += entries_[i][j] * Interval(Rational(2 * x[i] * x[j]));
    }
  }
  return s;
}

Interval GramMatrix::determinant() const { return lpcert::determinant(entries_); }

GramMatrix GramMatrix::scaled(const Rational& lambda) const {
  IntervalMatrix m = entries_;
  for (auto& row : m) {
    for (auto& x : row) x = x * Interval(lambda);
  }
  return GramMatrix(std::move(m));
}

std::string GramMatrix::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (j) out += ",";
      const auto& x = entries_[i][j];
      out += x.is_point() ? x.lo().str() : x.str();
    }
  }
  return out;
}

Interval determinant(const IntervalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Interval(Rational(1));
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n <= 4) {
    // Cofactor expansion along the first row encloses the exact image directly.
    Interval s(Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      const Interval term = m[0][j] * determinant(submatrix(m, 0, j));
      s = (j % 2 == 0) ? s + term : s - term;
    }
    return s;
  }
  IntervalMatrix a = m;
  Interval det(Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].mig() > a[piv][col].mig()) piv = r;
    }
    if (a[piv][col].contains_zero()) {
      throw Error(ErrorCode::SingularBasis, "determinant enclosure cannot exclude zero");
    }
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Interval f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
    }
  }
  return det;
}

void certify_positive_definite(const GramMatrix& gram) {
  const int n = gram.dimension();
  for (int k = 1; k <= n; ++k) {
    IntervalMatrix lead;
    for (int i = 0; i < k; ++i) {
      lead.emplace_back(gram.entries()[static_cast<std::size_t>(i)].begin(),
                        gram.entries()[static_cast<std::size_t>(i)].begin() + k);
    }
    Interval minor;
    try {
      minor = determinant(lead);
    } catch (const Error&) {
      throw Error(ErrorCode::NotPositiveDefinite, "leading minor " + std::to_string(k) + " is not certainly positive");
    }
    if (!minor.certainly_positive()) {
      throw Error(ErrorCode::NotPositiveDefinite, "leading minor " + std::to_string(k) + " is not certainly positive");
    }
  }
}

// ---- LatticeBasis ------------------------------------------------------------------------

LatticeBasis::LatticeBasis(IntervalMatrix rows, std::optional<RationalMatrix> exact_gram)
    : rows_(std::move(rows)), exact_gram_(std::move(exact_gram)) {
  const std::size_t n = rows_.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxDimension)) {
    throw Error(ErrorCode::InvalidDimension, "basis dimension must be in [1, 24]");
  }
  for (const auto& r : rows_) {
    if (r.size() != n) throw Error(ErrorCode::Precondition, "basis matrix must be square");
  }
  if (exact_gram_) {
    const auto g = gram_and_covolume(LatticeBasis(rows_)).gram;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((*exact_gram_).size() != n || (*exact_gram_)[i].size() != n ||
            !g.at(static_cast<int>(i), static_cast<int>(j)).contains((*exact_gram_)[i][j])) {
          throw Error(ErrorCode::Precondition, "exact Gram is not enclosed by the basis Gram");
        }
      }
    }
  }
}

LatticeBasis LatticeBasis::exact(const RationalMatrix& rows) { return LatticeBasis(to_interval(rows)); }

LatticeBasis LatticeBasis::identity(int n) {
  RationalMatrix rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
  return exact(rows);
}

LatticeBasis LatticeBasis::hexagonal(long bits) {
  const Interval s2 = sqrt(Interval(Rational(2)), bits);
  const Interval s6 = sqrt(Interval(Rational(6)), bits);
  const Interval half(Rational(1, 2));
  IntervalMatrix rows{{s2, Interval(Rational(0))}, {s2 * half, s6 * half}};
  return LatticeBasis(std::move(rows), RationalMatrix{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}});
}

LatticeBasis LatticeBasis::scaled(const Interval& factor) const {
  IntervalMatrix rows = rows_;
  for (auto& r : rows) {
    for (auto& x : r) x = x * factor;
  }
  std::optional<RationalMatrix> g;
  if (exact_gram_ && factor.is_point()) {
    g = *exact_gram_;
    const Rational f2 = factor.lo() * factor.lo();
    for (auto& r : *g) {
      for (auto& x : r) x *= f2;
    }
  }
  return LatticeBasis(std::move(rows), std::move(g));
}

bool LatticeBasis::contains(const LatticeBasis& other) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (!rows_[i][j].contains(other.rows_[i][j])) return false;
    }
  }
  return true;
}

GramAndCovolume gram_and_covolume(const LatticeBasis& basis, long bits) {
  const std::size_t n = static_cast<std::size_t>(basis.dimension());
  const auto& b = basis.rows();
  IntervalMatrix g(n, std::vector<Interval>(n));
  if (basis.exact_gram()) {
    g = to_interval(*basis.exact_gram());
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Interval s(Rational(0));
        for (std::size_t k = 0; k < n; ++k) s += b[i][k] * b[j][k];
        g[i][j] = s.is_point() ? s : simplify(s, bits);
        g[j][i] = g[i][j];
      }
    }
  }
  GramMatrix gram(std::move(g));
  const Interval det = gram.determinant();
  if (!det.certainly_positive()) throw Error(ErrorCode::SingularBasis, "basis is not certainly nonsingular");
  return {gram, sqrt(det, bits)};
}

LatticeBasis dual_basis(const LatticeBasis& basis) {
  const IntervalMatrix inv = invert(basis.rows());
  const std::size_t n = inv.size();
  IntervalMatrix rows(n, std::vector<Interval>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = inv[j][i];
  }
  std::optional<RationalMatrix> g;
  if (basis.exact_gram()) g = dual_gram(GramMatrix::exact(*basis.exact_gram())).exact_entries();
  return LatticeBasis(std::move(rows), std::move(g));
}

GramMatrix dual_gram(const GramMatrix& gram) {
  IntervalMatrix inv = invert(gram.entries());
  // Symmetrize: both (i,j) and (j,i) enclose the same exact entry.
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (inv[i][j] == inv[j][i]) continue;
      const Interval common = inv[i][j].intersects(inv[j][i]) ? intersect(inv[i][j], inv[j][i]) : hull(inv[i][j], inv[j][i]);
      inv[i][j] = common;
      inv[j][i] = common;
    }
  }
  return GramMatrix(std::move(inv));
}

// ---- LLL ---------------------------------------------------------------------------------

std::vector<IntVector> lll_reduce(const RationalMatrix& gram) {
  const std::size_t n = gram.size();
  RationalMatrix g = gram;
  std::vector<IntVector> u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto subtract = [&](std::size_t k, std::size_t j, long q) {
    for (std::size_t c = 0; c < n; ++c) u[k][c] -= q * u[j][c];
    for (std::size_t c = 0; c < n; ++c) g[k][c] -= Rational(q) * g[j][c];
    for (std::size_t r = 0; r < n; ++r) g[r][k] -= Rational(q) * g[r][j];
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(u[a], u[b]);
    std::swap(g[a], g[b]);
    for (auto& row : g) std::swap(row[a], row[b]);
  };
  const Rational delta(3, 4);
  std::size_t k = 1;
  std::size_t steps = 0;
  while (k < n) {
    if (++steps > 1'000'000) throw Error(ErrorCode::BoundTooLargeForBudget, "LLL did not terminate in budget");
    GramSchmidt gs = gram_schmidt(g);
    for (std::size_t j = k; j-- > 0;) {
      const Integer q = floor(gs.mu[k][j] + Rational(1, 2));
      if (q != 0) {
        subtract(k, j, to_long(q));
        gs = gram_schmidt(g);
      }
    }
    const Rational m = gs.mu[k][k - 1];
    if (gs.b[k] >= (delta - m * m) * gs.b[k - 1]) {
      ++k;
    } else {
      swap_rows(k, k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

// ---- Enumeration -------------------------------------------------------------------------

bool ShortVectorReport::all_certain() const {
  return std::all_of(vectors.begin(), vectors.end(),
                     [](const LatticeVector& v) { return v.membership == Membership::Certain; });
}

ShortVectorReport enumerate_vectors_below(const GramMatrix& gram, const Rational& bound,
                                          const EnumerationOptions& options) {
  if (bound.sign() <= 0) throw Error(ErrorCode::Precondition, "enumeration bound must be positive");
  certify_positive_definite(gram);
  const std::size_t n = static_cast<std::size_t>(gram.dimension());

  // A rational form below every form in the enclosure: mid - R I with R the max row
  // sum of entry radii (the difference is diagonally dominant, hence PSD).
  RationalMatrix lower(n, std::vector<Rational>(n));
  const Rational radius = rad_max_row_sum(gram.entries()).lo();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lower[i][j] = gram.entries()[i][j].mid();
    lower[i][i] -= radius;
  }
  try {
    gram_schmidt(lower);
  } catch (const Error&) {
    throw Error(ErrorCode::NotPositiveDefinite, "Gram enclosure too wide to bound the form from below");
  }

  const auto u = lll_reduce(lower);
  const GramSchmidt gs = gram_schmidt(transform_gram(lower, u));

  const auto [top_lo, top_hi] = Enumerator::range(Rational(0), bound, gs.b[n - 1]);
  const auto top_count = static_cast<std::size_t>(top_hi - top_lo + 1);
  if (top_count > options.node_budget) {
    throw Error(ErrorCode::BoundTooLargeForBudget, "enumeration exceeded its node budget");
  }
  struct Branch {
    std::vector<IntVector> found;
    std::size_t nodes = 0;
  };
  auto branches = kernels::map_indexed<Branch>(
      top_count,
      [&](std::size_t i) {
        Enumerator e(gs, options.node_budget);
        e.run_from(top_lo + static_cast<long>(i), bound);
        return Branch{std::move(e.found()), e.nodes() + 1};
      },
      options.execution);

  ShortVectorReport report;
  report.bound = bound;
  for (auto& br : branches) {
    report.nodes_visited += br.nodes;
    for (const auto& y : br.found) {
      IntVector x(n, 0);
      bool zero = true;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) x[j] += y[i] * u[i][j];
        zero = zero && x[j] == 0;
      }
      if (zero) continue;
      const Interval q = gram.norm(x);
      if (q.lo() > bound) continue;
      report.vectors.push_back({std::move(x), q, q.hi() <= bound ? Membership::Certain : Membership::Possible});
    }
  }
  if (report.nodes_visited > options.node_budget) {
    throw Error(ErrorCode::BoundTooLargeForBudget, "enumeration exceeded its node budget");
  }
  std::sort(report.vectors.begin(), report.vectors.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return a.coords < b.coords; });
  for (const auto& v : report.vectors) {
    if (!report.minimal_norm) {
      report.minimal_norm = v.norm;
    } else {
      report.minimal_norm = min(*report.minimal_norm, v.norm);
    }
  }
  return report;
}

std::vector<LatticeVector> enumerate_box(const GramMatrix& gram, const Rational& bound, long radius) {
  const std::size_t n = static_cast<std::size_t>(gram.dimension());
  std::vector<LatticeVector> out;
  IntVector x(n, -radius);
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) {
      const Interval q = gram.norm(x);
      if (q.lo() <= bound) out.push_back({x, q, q.hi() <= bound ? Membership::Certain : Membership::Possible});
    }
    std::size_t i = 0;
    while (i < n && x[i] == radius) x[i++] = -radius;
    if (i == n) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) { return a.coords < b.coords; });
  return out;
}

Interval minimal_norm(const GramMatrix& gram, const EnumerationOptions& options) {
  Rational bound = gram.at(0, 0).hi();
  for (int i = 1; i < gram.dimension(); ++i) bound = std::min(bound, gram.at(i, i).hi());
  const auto report = enumerate_vectors_below(gram, bound, options);
  return *report.minimal_norm;  // nonempty: some basis vector has norm <= bound
}

LatticeSummary lattice_summary(const GramMatrix& gram, const Rational& width, const EnumerationOptions& options) {
  LatticeSummary s;
  s.minimal_norm = minimal_norm(gram, options);
  s.determinant = gram.determinant();
  const int n = gram.dimension();
  const long bits = bits_for_width(width) + 16;
  const Interval quarter_m = s.minimal_norm * Interval(Rational(1, 4));
  Interval radius_power = pow(quarter_m, n / 2);
  if (n % 2 == 1) radius_power = radius_power * sqrt(quarter_m, bits);
  const Interval unit_ball = ball_volume(n, Interval(Rational(1)), width / Rational(16));
  s.density = simplify(unit_ball * radius_power / sqrt(s.determinant, bits), bits);

  const auto shell = enumerate_vectors_below(gram, s.minimal_norm.hi(), options);
  for (const auto& v : shell.vectors) {
    if (v.norm.intersects(s.minimal_norm)) {
      ++s.kissing_number;
      if (!(v.norm == s.minimal_norm && s.minimal_norm.is_point())) s.kissing_certain = false;
    }
  }
  return s;
}

Interval lattice_density(const GramMatrix& gram, const Rational& width, const EnumerationOptions& options) {
  return lattice_summary(gram, width, options).density;
}

}  // namespace lpcert
