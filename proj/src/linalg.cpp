#include "fitres/linalg.hpp"

#include <algorithm>

namespace fitres {

Eliminator::Eliminator(const FpField& f, int nrows, bool track_combinations)
    : f_(f), nrows_(nrows), track_(track_combinations) {
  scratch_.assign(static_cast<size_t>(nrows), 0);
}

Eliminator::Reduced Eliminator::reduce(const SparseVec& v) {
  for (int r : touched_) scratch_[r] = 0;
  touched_.clear();
  for (const auto& [idx, val] : v.e) {
    scratch_[idx] = val;
    touched_.push_back(idx);
  }
  for (int r : comb_touched_) comb_scratch_[r] = 0;
  comb_touched_.clear();
  if (track_ && comb_scratch_.size() < pivots_.size() + 1)
    comb_scratch_.resize(pivots_.size() + 1, 0);

  // One pass in pivot insertion order: pivot t's column is zero at all earlier
  // pivot rows, so the coefficient at row(t) is final once pivots < t are done.
  for (size_t t = 0; t < pivots_.size(); ++t) {
    const Pivot& pv = pivots_[t];
    uint32_t c = scratch_[pv.row];
    if (c == 0) continue;
    uint32_t cneg = f_.neg(c);
    for (const auto& [idx, val] : pv.col.e) {
      uint32_t before = scratch_[idx];
      if (before == 0) touched_.push_back(idx);
      scratch_[idx] = f_.add(before, f_.mul(cneg, val));
    }
    if (track_) {
      for (const auto& [j, val] : pv.comb.e) {
        if (comb_scratch_[j] == 0) comb_touched_.push_back(j);
        comb_scratch_[j] = f_.add(comb_scratch_[j], f_.mul(c, val));
      }
    }
  }

  Reduced out;
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
  for (int r : touched_) {
    if (scratch_[r] != 0) out.residual.push(r, scratch_[r]);
  }
  if (track_) {
    std::sort(comb_touched_.begin(), comb_touched_.end());
    comb_touched_.erase(std::unique(comb_touched_.begin(), comb_touched_.end()),
                        comb_touched_.end());
    for (int j : comb_touched_) {
      if (comb_scratch_[j] != 0) out.comb.push(j, comb_scratch_[j]);
    }
  }
  return out;
}

void Eliminator::install(const Reduced& r, int orig_id) {
  if (r.residual.is_zero()) fail(Err::Internal, "installing a dependent column");
  // pivot row: smallest nonzero row of the residual (deterministic)
  int prow = r.residual.e.front().first;
  uint32_t alpha = r.residual.e.front().second;
  uint32_t ainv = f_.inv(alpha);
  Pivot pv;
  pv.row = prow;
  pv.orig = orig_id;
  pv.col.e.reserve(r.residual.e.size());
  for (const auto& [idx, val] : r.residual.e) pv.col.push(idx, f_.mul(val, ainv));
  if (track_) {
    // residual = v - sum_slot comb[slot] * col(slot); express col(new) over
    // pivot slots with a trailing unit slot for v itself, scaled by 1/alpha.
    for (const auto& [slot, val] : r.comb.e) pv.comb.push(slot, f_.mul(f_.neg(val), ainv));
    pv.comb.push(static_cast<int>(pivots_.size()), ainv);
  }
  pivots_.push_back(std::move(pv));
}

bool Eliminator::add(const SparseVec& v, int orig_id) {
  Reduced r = reduce(v);
  if (r.residual.is_zero()) return false;
  install(r, orig_id);
  return true;
}

int Eliminator::pivot_orig(int slot) const { return pivots_[static_cast<size_t>(slot)].orig; }

KernelBasis kernel_basis(const FpField& f, int nrows, std::span<const SparseVec> cols) {
  KernelBasis out;
  Eliminator elim(f, nrows, true);
  for (size_t c = 0; c < cols.size(); ++c) {
    auto red = elim.reduce(cols[c]);
    if (red.residual.is_zero()) {
      // canonical kernel vector: +1 at column c, minus the unique combination
      // of c over the earlier independent columns
      std::vector<std::pair<int, uint32_t>> entries;
      entries.reserve(red.comb.e.size() + 1);
      entries.push_back({static_cast<int>(c), 1});
      for (const auto& [slot, val] : red.comb.e)
        entries.push_back({elim.pivot_orig(slot), f.neg(val)});
      std::sort(entries.begin(), entries.end());
      SparseVec k;
      k.e = std::move(entries);
      out.vectors.push_back(std::move(k));
    } else {
      elim.install(red, static_cast<int>(c));
    }
  }
  out.rank = elim.rank();
  return out;
}

int rank_of(const FpField& f, int nrows, std::span<const SparseVec> cols) {
  Eliminator elim(f, nrows, false);
  for (size_t c = 0; c < cols.size(); ++c) elim.add(cols[c], static_cast<int>(c));
  return elim.rank();
}

} // namespace fitres
