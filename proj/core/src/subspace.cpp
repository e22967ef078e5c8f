#include "cyclocode/subspace.hpp"

#include <algorithm>
#include <string>

namespace cyclo {

u128 gaussian_binomial(int m, int r, int64_t q) {
  if (r < 0 || r > m) return 0;
  if (r == 0 || r == m) return 1;
  // Multiply-then-divide keeps every intermediate value integral: after step
  // i the accumulator is the Gaussian binomial with r = i + 1.
  u128 acc = 1;
  for (int i = 0; i < r; ++i) {
    u128 num = 1, den = 1;
    for (int j = 0; j < m - i; ++j) num *= u128(q);
    for (int j = 0; j < i + 1; ++j) den *= u128(q);
    num -= 1;
    den -= 1;
    if (acc > ~u128(0) / num) fail(errc::budget_exceeded, "subspace count overflows");
    acc = acc * num / den;
  }
  return acc;
}

int rref_inplace(std::vector<uint16_t>& rows, int nrows, int ncols, const Subfield& fq,
                 std::vector<uint8_t>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pr = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[size_t(r) * ncols + col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int c = 0; c < ncols; ++c)
        std::swap(rows[size_t(pr) * ncols + c], rows[size_t(rank) * ncols + c]);
    uint16_t inv = fq.inv(rows[size_t(rank) * ncols + col]);
    for (int c = 0; c < ncols; ++c)
      rows[size_t(rank) * ncols + c] = fq.mul(rows[size_t(rank) * ncols + c], inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      uint16_t f = rows[size_t(r) * ncols + col];
      if (f == 0) continue;
      for (int c = 0; c < ncols; ++c)
        rows[size_t(r) * ncols + c] =
            fq.sub(rows[size_t(r) * ncols + c], fq.mul(f, rows[size_t(rank) * ncols + c]));
    }
    if (pivots) pivots->push_back(uint8_t(col));
    ++rank;
  }
  return rank;
}

SubspaceEnumerator::SubspaceEnumerator(int m, int r, int64_t q) : m_(m), r_(r), q_(q) {
  if (r < 0 || r > m) fail(errc::dimension_mismatch, "subspace dimension out of range");
  total_ = gaussian_binomial(m, r, q);
  reset();
}

void SubspaceEnumerator::reset() {
  comb_.resize(r_);
  for (int i = 0; i < r_; ++i) comb_[i] = uint8_t(i);
  rebuild_cells();
  position_ = 0;
  fresh_ = true;
  done_ = r_ < 0;
}

void SubspaceEnumerator::rebuild_cells() {
  cells_.clear();
  for (int i = 0; i < r_; ++i)
    for (int col = comb_[i] + 1; col < m_; ++col) {
      bool is_pivot = false;
      for (int j = 0; j < r_; ++j)
        if (comb_[j] == col) {
          is_pivot = true;
          break;
        }
      if (!is_pivot) cells_.push_back({i, col});
    }
  odo_.assign(cells_.size(), 0);
}

bool SubspaceEnumerator::advance_comb() {
  int i = r_ - 1;
  while (i >= 0 && comb_[i] == m_ - r_ + i) --i;
  if (i < 0) return false;
  ++comb_[i];
  for (int j = i + 1; j < r_; ++j) comb_[j] = uint8_t(comb_[i] + (j - i));
  rebuild_cells();
  return true;
}

void SubspaceEnumerator::emit(Subspace& out) const {
  out.m = m_;
  out.r = r_;
  out.rows.assign(size_t(r_) * m_, 0);
  out.pivots.assign(comb_.begin(), comb_.end());
  for (int i = 0; i < r_; ++i) out.rows[size_t(i) * m_ + comb_[i]] = 1;
  for (size_t k = 0; k < cells_.size(); ++k)
    out.rows[size_t(cells_[k].row) * m_ + cells_[k].col] = odo_[k];
}

bool SubspaceEnumerator::next(Subspace& out) {
  if (done_ || position_ >= total_) return false;
  if (fresh_) {
    fresh_ = false;
  } else {
    // Odometer over free cells, last cell fastest; overflow moves to the
    // next pivot combination.
    int k = int(cells_.size()) - 1;
    while (k >= 0) {
      if (++odo_[k] < q_) break;
      odo_[k] = 0;
      --k;
    }
    if (k < 0 && !advance_comb()) {
      done_ = true;
      return false;
    }
  }
  emit(out);
  ++position_;
  return true;
}

void SubspaceEnumerator::seek(u128 index) {
  if (index > total_) fail(errc::dimension_mismatch, "seek index beyond enumeration");
  reset();
  fresh_ = true;
  position_ = index;
  u128 left = index;
  while (true) {
    u128 block = 1;
    for (size_t k = 0; k < cells_.size(); ++k) block *= u128(q_);
    if (left < block) break;
    left -= block;
    if (!advance_comb()) {
      done_ = true;  // index == total: enumeration is exhausted
      return;
    }
  }
  for (int k = int(cells_.size()) - 1; k >= 0; --k) {
    odo_[k] = uint16_t(left % u128(q_));
    left /= u128(q_);
  }
}

Subspace subspace_at(int m, int r, int64_t q, u128 index) {
  SubspaceEnumerator en(m, r, q);
  en.seek(index);
  Subspace s;
  if (!en.next(s)) fail(errc::dimension_mismatch, "subspace index out of range");
  return s;
}

bool contains(const Subspace& s, const Subfield& fq, std::span<const uint16_t> vec) {
  if (int(vec.size()) != s.m) fail(errc::dimension_mismatch, "vector length mismatch");
  if (s.m > 64) fail(errc::dimension_mismatch, "ambient dimension above 64 is unsupported");
  uint16_t buf[64];
  std::copy(vec.begin(), vec.end(), buf);
  for (int i = 0; i < s.r; ++i) {
    uint16_t c = buf[s.pivots[i]];
    if (c == 0) continue;
    const uint16_t* row = &s.rows[size_t(i) * s.m];
    for (int j = 0; j < s.m; ++j) buf[j] = fq.sub(buf[j], fq.mul(c, row[j]));
  }
  for (int j = 0; j < s.m; ++j)
    if (buf[j] != 0) return false;
  return true;
}

int64_t intersect_count(const Subspace& s, const FieldCtx& ctx, std::span<const Fe> elems) {
  const Subfield& fq = ctx.subfield();
  uint16_t coords[64];
  int64_t count = 0;
  for (Fe x : elems) {
    ctx.coords(x, coords);
    if (contains(s, fq, std::span<const uint16_t>(coords, size_t(s.m)))) ++count;
  }
  return count;
}

std::vector<Fe> materialize(const Subspace& s, const FieldCtx& ctx, const Budgets& budgets) {
  int64_t size = checked_pow(ctx.q(), s.r, budgets.enum_budget);
  if (size < 0)
    fail(errc::budget_exceeded, "materializing q^r elements exceeds the enumeration budget");
  std::vector<Fe> elems;
  elems.reserve(size);
  elems.push_back(fe_zero);
  const Subfield& fq = ctx.subfield();
  for (int i = 0; i < s.r; ++i) {
    Fe b = ctx.uncoords(std::span<const uint16_t>(&s.rows[size_t(i) * s.m], size_t(s.m)));
    size_t have = elems.size();
    for (int64_t c = 1; c < ctx.q(); ++c) {
      Fe cb = ctx.mul(fq.to_field(uint16_t(c)), b);
      for (size_t k = 0; k < have; ++k) elems.push_back(ctx.add(elems[k], cb));
    }
  }
  return elems;
}

std::vector<int64_t> coset_profile(const Subspace& s, const FieldCtx& ctx, int h,
                                   const Budgets& budgets) {
  if (h <= 0 || ctx.order() % h != 0) fail(errc::dimension_mismatch, "h must divide Q-1");
  std::vector<int64_t> prof(h, 0);
  for (Fe x : materialize(s, ctx, budgets))
    if (!x.is_zero()) ++prof[x.v % h];
  return prof;
}

Subspace trace_dual(const Subspace& s, const FieldCtx& ctx) {
  const Subfield& fq = ctx.subfield();
  const int m = ctx.m();
  // Pairing matrix T[i][k] = Tr(b_i theta^k); the dual is its kernel.
  std::vector<uint16_t> T(size_t(s.r) * m, 0);
  for (int i = 0; i < s.r; ++i) {
    Fe b = ctx.uncoords(std::span<const uint16_t>(&s.rows[size_t(i) * s.m], size_t(s.m)));
    for (int k = 0; k < m; ++k) T[size_t(i) * m + k] = ctx.trace_to_q(ctx.mul(b, ctx.theta_pow(k)));
  }
  std::vector<uint8_t> piv;
  int rank = rref_inplace(T, s.r, m, fq, &piv);

  std::vector<uint16_t> kernel;
  std::vector<bool> is_pivot(m, false);
  for (uint8_t pc : piv) is_pivot[pc] = true;
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint16_t> v(m, 0);
    v[f] = 1;
    for (int i = 0; i < rank; ++i) v[piv[i]] = fq.neg(T[size_t(i) * m + f]);
    kernel.insert(kernel.end(), v.begin(), v.end());
  }
  int kn = m - rank;
  Subspace dual;
  dual.m = m;
  dual.r = rref_inplace(kernel, kn, m, fq, &dual.pivots);
  kernel.resize(size_t(dual.r) * m);
  dual.rows = std::move(kernel);
  return dual;
}

}  // namespace cyclo
