#include <doctest.h>

#include "fitres/linalg.hpp"
#include "fitres/prng.hpp"

using namespace fitres;

namespace {

int dense_rank(const FpField& f, std::vector<std::vector<uint32_t>> W) {
  if (W.empty()) return 0;
  int rows = static_cast<int>(W.size());
  int cols = static_cast<int>(W[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (W[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(W[rank], W[piv]);
    uint32_t inv = f.inv(W[rank][c]);
    for (int j = 0; j < cols; ++j) W[rank][j] = f.mul(W[rank][j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || !W[i][c]) continue;
      uint32_t fac = W[i][c];
      for (int j = 0; j < cols; ++j) W[i][j] = f.sub(W[i][j], f.mul(fac, W[rank][j]));
    }
    ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("sparse kernel basis against dense rank and exact verification") {
  FpField f(101);
  Prng rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(8));
    std::vector<std::vector<uint32_t>> M(rows, std::vector<uint32_t>(cols, 0));
    std::vector<SparseVec> colsv(cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i)
        if (rng.below(3) == 0) {
          uint32_t v = 1 + static_cast<uint32_t>(rng.below(100));
          M[i][j] = v;
          colsv[j].push(i, v);
        }
    auto K = kernel_basis(f, rows, colsv);
    for (const auto& k : K.vectors) {
      REQUIRE(!k.e.empty());
      for (int i = 0; i < rows; ++i) {
        uint64_t acc = 0;
        for (const auto& [j, v] : k.e) acc += static_cast<uint64_t>(M[i][j]) * v;
        CHECK(acc % 101 == 0);
      }
    }
    CHECK(static_cast<int>(K.vectors.size()) == cols - dense_rank(f, M));
    CHECK(K.rank == dense_rank(f, M));
  }
}

TEST_CASE("kernel basis is canonical: dependent column carries unit coefficient") {
  FpField f(101);
  // columns: c0 = (1,0), c1 = (0,1), c2 = c0 + 2 c1
  std::vector<SparseVec> cols(3);
  cols[0].push(0, 1);
  cols[1].push(1, 1);
  cols[2].push(0, 1);
  cols[2].push(1, 2);
  auto K = kernel_basis(f, 2, cols);
  REQUIRE(K.vectors.size() == 1);
  const auto& k = K.vectors[0];
  REQUIRE(k.e.size() == 3);
  CHECK(k.at(0) == 100); // -1
  CHECK(k.at(1) == 99);  // -2
  CHECK(k.at(2) == 1);
}

TEST_CASE("eliminator membership") {
  FpField f(101);
  Eliminator e(f, 3, false);
  SparseVec a;
  a.push(0, 1);
  a.push(2, 5);
  CHECK(e.add(a, 0));
  CHECK(!e.add(a, 1)); // dependent now
  SparseVec b;
  b.push(1, 7);
  CHECK(e.add(b, 2));
  CHECK(e.rank() == 2);
}
