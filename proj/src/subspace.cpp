#include "glie/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace glie {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

int vector_cmp(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = scalar_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Vector zero_vector(const FieldSpec& f, int n) {
  return Vector(static_cast<std::size_t>(n), f.zero());
}

Vector scaled(const FieldSpec& f, const Vector& v, const Scalar& c) {
  Vector out = v;
  for (Scalar& s : out) s = f.mul(s, c);
  return out;
}

Vector vec_add(const FieldSpec& f, const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], b[i]);
  return out;
}

Vector vec_sub(const FieldSpec& f, const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(out[i], b[i]);
  return out;
}

void axpy(const FieldSpec& f, Vector& a, const Scalar& c, const Vector& b) {
  assert(a.size() == b.size());
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
}

std::vector<int> rref(const FieldSpec& f, std::vector<Vector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  std::size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && rows[pivot_row][col].is_zero()) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    Scalar inv = f.inv(rows[rank][col]);
    for (Scalar& s : rows[rank]) s = f.mul(s, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar c = f.neg(rows[r][col]);
      axpy(f, rows[r], c, rows[rank]);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

Subspace Subspace::zero(const FieldSpec& f, int ambient_dim) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
  return Subspace(f, ambient_dim);
}

Subspace Subspace::full(const FieldSpec& f, int ambient_dim) {
  Subspace s = zero(f, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    Vector row = zero_vector(f, ambient_dim);
    row[i] = f.one();
    s.rows_.push_back(std::move(row));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FieldSpec& f, int ambient_dim,
                        std::span<const Vector> generators) {
  Subspace s = zero(f, ambient_dim);
  std::vector<Vector> rows;
  rows.reserve(generators.size());
  for (const Vector& g : generators) {
    if (static_cast<int>(g.size()) != ambient_dim)
      throw std::invalid_argument("generator length does not match ambient dimension");
    rows.push_back(g);
  }
  s.pivots_ = rref(f, rows);
  s.rows_ = std::move(rows);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    axpy(field_, v, field_.neg(c), rows_[r]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_ || !(other.field_ == field_))
    throw std::invalid_argument("subspace comparison across different spaces");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vector& r) { return contains(r); });
}

int subspace_cmp(const Subspace& a, const Subspace& b) {
  assert(a.ambient_dim() == b.ambient_dim());
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (int r = 0; r < a.dim(); ++r) {
    int c = vector_cmp(a.rows()[r], b.rows()[r]);
    if (c != 0) return c;
  }
  return 0;
}

Subspace join(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim() || !(s.field() == t.field()))
    throw std::invalid_argument("join across different spaces");
  std::vector<Vector> gens = s.rows();
  gens.insert(gens.end(), t.rows().begin(), t.rows().end());
  return Subspace::span(s.field(), s.ambient_dim(), gens);
}

// Zassenhaus: row-reduce [S|S; T|0]; rows with zero left half carry an
// intersection basis in the right half.
Subspace meet(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim() || !(s.field() == t.field()))
    throw std::invalid_argument("meet across different spaces");
  const FieldSpec& f = s.field();
  const int n = s.ambient_dim();
  std::vector<Vector> stacked;
  for (const Vector& r : s.rows()) {
    Vector row = r;
    row.insert(row.end(), r.begin(), r.end());
    stacked.push_back(std::move(row));
  }
  for (const Vector& r : t.rows()) {
    Vector row = r;
    Vector z = zero_vector(f, n);
    row.insert(row.end(), z.begin(), z.end());
    stacked.push_back(std::move(row));
  }
  rref(f, stacked);
  std::vector<Vector> inter;
  for (const Vector& row : stacked) {
    bool left_zero = true;
    for (int i = 0; i < n; ++i)
      if (!row[i].is_zero()) {
        left_zero = false;
        break;
      }
    if (left_zero) inter.emplace_back(row.begin() + n, row.end());
  }
  return Subspace::span(f, n, inter);
}

Subspace kernel(const FieldSpec& f, int unknowns,
                const std::vector<Vector>& constraints) {
  std::vector<Vector> rows = constraints;
  std::vector<int> pivots = rref(f, rows);
  std::vector<bool> is_pivot(unknowns, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int free_col = 0; free_col < unknowns; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector x = zero_vector(f, unknowns);
    x[free_col] = f.one();
    for (std::size_t r = 0; r < rows.size(); ++r)
      x[pivots[r]] = f.neg(rows[r][free_col]);
    basis.push_back(std::move(x));
  }
  return Subspace::span(f, unknowns, basis);
}

long long gaussian_binomial(std::int64_t p, int n, int k) {
  if (k < 0 || k > n) return 0;
  // product formula over exact integers; sizes here stay tiny
  mpz_class num = 1, den = 1;
  mpz_class q(static_cast<long>(p));
  for (int i = 0; i < k; ++i) {
    mpz_class qn, qk;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n - i);
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), i + 1);
    num *= qn - 1;
    den *= qk - 1;
  }
  mpz_class out = num / den;
  return out.get_si();
}

long long subspace_count(std::int64_t p, int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(p, n, k);
  return total;
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int ambient_dim,
                                          const EnumLimits& limits) {
  if (!f.finite())
    throw std::invalid_argument("subspace enumeration requires a finite field");
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
  if (ambient_dim > limits.max_dim)
    throw guard_error("subspace enumeration capped at dimension " +
                      std::to_string(limits.max_dim));
  if (subspace_count(f.modulus(), ambient_dim) > limits.max_count)
    throw guard_error("subspace lattice larger than the configured guard");

  const int n = ambient_dim;
  const std::int64_t p = f.modulus();
  std::vector<Subspace> out;

  for (int k = 0; k <= n; ++k) {
    // pivot column combinations, then an odometer over the free entries
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (int c : cols) is_pivot[c] = true;
      std::vector<std::pair<int, int>> free_slots;  // (row, col)
      for (int r = 0; r < k; ++r)
        for (int c = cols[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(r, c);

      std::vector<std::int64_t> digits(free_slots.size(), 0);
      while (true) {
        std::vector<Vector> rows(k, zero_vector(f, n));
        for (int r = 0; r < k; ++r) rows[r][cols[r]] = f.one();
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          rows[free_slots[s].first][free_slots[s].second] = f.from_int(digits[s]);
        out.push_back(Subspace::span(f, n, rows));

        std::size_t d = 0;
        while (d < digits.size() && ++digits[d] == p) digits[d++] = 0;
        if (d == digits.size()) break;
      }

      // next k-combination of {0..n-1}
      int i = k - 1;
      while (i >= 0 && cols[i] == n - k + i) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Subspace& a, const Subspace& b) { return subspace_cmp(a, b) < 0; });
  return out;
}

std::vector<Vector> enumerate_nonzero_vectors(const FieldSpec& f, int dim,
                                              const EnumLimits& limits) {
  if (!f.finite())
    throw std::invalid_argument("vector enumeration requires a finite field");
  const std::int64_t p = f.modulus();
  long long count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= p;
    if (count > limits.max_count)
      throw guard_error("vector enumeration larger than the configured guard");
  }
  std::vector<Vector> out;
  out.reserve(count - 1);
  // little-endian odometer: coordinate 0 is the least significant digit,
  // which realizes the canonical vector_cmp order
  Vector v = zero_vector(f, dim);
  std::vector<std::int64_t> digits(dim, 0);
  for (long long k = 1; k < count; ++k) {
    int d = 0;
    while (++digits[d] == p) digits[d++] = 0;
    for (int i = 0; i < dim; ++i) v[i] = f.from_int(digits[i]);
    out.push_back(v);
  }
  return out;
}

}  // namespace glie
