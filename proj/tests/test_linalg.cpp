#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/kernels.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/rng.hpp"

using namespace syz;

namespace {

using oracle::naive_rank;

FieldMatrix random_matrix(const PrimeField& f, Rng& rng, std::size_t rows, std::size_t cols, double density,
                          std::size_t forced_rank = SIZE_MAX) {
  FieldMatrix m(f, rows, cols);
  if (forced_rank == SIZE_MAX) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (static_cast<double>(rng.below(1000)) < density * 1000) m.set(i, j, rng.residue(f));
    return m;
  }
  FieldMatrix a(f, rows, forced_rank), b(f, forced_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < forced_rank; ++j) a.set(i, j, rng.residue(f));
  for (std::size_t i = 0; i < forced_rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.set(i, j, rng.residue(f));
  return a.multiply(b);
}

std::vector<std::vector<std::int64_t>> to_rows(const FieldMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f;
  CHECK(f.modulus() == 31991);
  CHECK_THROWS_AS(PrimeField(31990), InputError);
  CHECK_THROWS_AS(PrimeField(2), InputError);
  Rng rng(7);
  for (int t = 0; t < 2000; ++t) {
    Residue a = rng.nonzero(f), b = rng.residue(f), c = rng.residue(f);
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(b, f.neg(b)) == 0);
    CHECK(f.sub(b, c) == f.add(b, f.neg(c)));
    Residue sq = f.mul(a, a);
    Residue r = f.sqrt(sq);
    CHECK(f.mul(r, r) == sq);
  }
  CHECK_THROWS(f.inv(0));
  PrimeField g(65521);  // p = 1 mod 16 exercises Tonelli-Shanks
  for (Residue a = 1; a < 300; ++a) {
    Residue sq = g.mul(a, a);
    Residue r = g.sqrt(sq);
    CHECK(g.mul(r, r) == sq);
  }
  CHECK(f.from_int(-1) == 31990);
  CHECK(f.to_signed(31990) == -1);
}

TEST_CASE("row kernels agree with the scalar reference") {
  for (std::uint32_t p : {3u, 31991u, 65521u, 1000003u, 2147483647u}) {
    PrimeField f(p);
    kernels::Reducer red(p);
    Rng rng(p);
    for (kernels::Backend b : {kernels::Backend::Avx2, kernels::Backend::Neon}) {
      if (!kernels::backend_usable(b, p)) continue;
      const kernels::RowOps& ops = kernels::ops_for(b, p);
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
        Vec x(n), y(n);
        for (auto& v : x) v = rng.residue(f);
        for (auto& v : y) v = rng.residue(f);
        for (Residue factor : {Residue{0}, Residue{1}, p - 1, rng.residue(f)}) {
          Vec ref = y, vec = y;
          kernels::detail::axpy_scalar(ref.data(), x.data(), factor, n, red);
          ops.axpy(vec.data(), x.data(), factor, n, red);
          CHECK(ref == vec);
          Vec sref = x, svec = x;
          kernels::detail::scale_scalar(sref.data(), factor, n, red);
          ops.scale(svec.data(), factor, n, red);
          CHECK(sref == svec);
        }
      }
    }
  }
  // Extremes of the lane range: every reduced input against the largest factor.
  PrimeField f(65521);
  kernels::Reducer red(65521);
  if (kernels::backend_usable(kernels::Backend::Avx2, 65521)) {
    const auto& ops = kernels::ops_for(kernels::Backend::Avx2, 65521);
    Vec x(65521), y(65521);
    for (Residue i = 0; i < 65521; ++i) {
      x[i] = i;
      y[i] = 65520 - i;
    }
    Vec ref = y, vec = y;
    kernels::detail::axpy_scalar(ref.data(), x.data(), 65520, x.size(), red);
    ops.axpy(vec.data(), x.data(), 65520, x.size(), red);
    CHECK(ref == vec);
  }
  CHECK_THROWS(kernels::ops_for(kernels::Backend::Avx2, 1000003));
}

TEST_CASE("rank small cases") {
  PrimeField f;
  CHECK(rank(FieldMatrix(f, 0, 5)) == 0);
  CHECK(rank(FieldMatrix(f, 5, 0)) == 0);
  CHECK(rank(FieldMatrix::identity(f, 17)) == 17);
  CHECK(rank(FieldMatrix(f, 6, 6)) == 0);
  CHECK(kernel_basis(FieldMatrix::identity(f, 9)).empty());
  CHECK(kernel_basis(FieldMatrix(f, 4, 4)).size() == 4);
  CHECK(kernel_basis(FieldMatrix(f, 0, 3)).size() == 3);
  CHECK(rank_parallel(FieldMatrix::identity(f, 40), 4) == 40);
  CHECK(rank_sparse(FieldMatrix::identity(f, 40)) == 40);
}

TEST_CASE("sparse construction merges duplicates and drops zeros") {
  PrimeField f(7);
  FieldMatrix m = FieldMatrix::sparse(f, 2, 2, {{0, 0, 3}, {0, 0, 4}, {1, 1, 5}, {1, 0, 0}});
  CHECK(m.stored() == 1);
  CHECK(m.at(1, 1) == 5);
  CHECK(m.at(0, 0) == 0);
}

TEST_CASE("random matrix consistency") {
  PrimeField f;
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    std::size_t rows = 1 + rng.below(40), cols = 1 + rng.below(40);
    std::size_t target = rng.below(std::min(rows, cols) + 1);
    FieldMatrix m = t % 3 == 0 ? random_matrix(f, rng, rows, cols, 0.15) : random_matrix(f, rng, rows, cols, 1.0, target);
    std::size_t r = rank(m);
    CHECK(r == naive_rank(to_rows(m), f.modulus()));
    CHECK(r == rank(m.transpose()));
    CHECK(r == rank_sparse(m.to_sparse()));
    CHECK(r == rank_dense(m.to_sparse()));
    for (unsigned w : {1u, 2u, 3u, 4u}) CHECK(rank_parallel(m, w) == r);
    auto ker = kernel_basis(m);
    CHECK(ker.size() + r == cols);
    for (const Vec& v : ker) {
      Vec mv = m.apply(v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](Residue x) { return x == 0; }));
    }
  }
}

TEST_CASE("parallel rank on a 500x800 matrix") {
  PrimeField f;
  Rng rng(5);
  FieldMatrix m = random_matrix(f, rng, 500, 800, 1.0, 430);
  std::size_t r = rank(m);
  CHECK(r == 430);
  for (unsigned w : {1u, 2u, 4u}) CHECK(rank_parallel(m, w) == r);
}

TEST_CASE("backend override does not change ranks") {
  PrimeField f;
  Rng rng(11);
  FieldMatrix m = random_matrix(f, rng, 120, 150, 1.0, 97);
  kernels::force_backend(kernels::Backend::Scalar);
  std::size_t scalar = rank(m);
  kernels::force_backend(std::nullopt);
  CHECK(scalar == 97);
  CHECK(rank(m) == scalar);
}

TEST_CASE("memory cap raises a resource error") {
  PrimeField f;
  auto saved = linalg_config();
  linalg_config().memory_cap_bytes = 1000;
  CHECK_THROWS_AS(rank(FieldMatrix::identity(f, 100)), ResourceLimitError);
  linalg_config() = saved;
}

TEST_CASE("SMS round trip") {
  PrimeField f(101);
  FieldMatrix m = FieldMatrix::sparse(f, 3, 4, {{0, 1, 5}, {2, 3, 100}, {1, 0, 1}});
  std::stringstream ss;
  m.write_sms(ss);
  CHECK(ss.str().rfind("3 4 101\n", 0) == 0);
  FieldMatrix back = FieldMatrix::read_sms(ss);
  CHECK(back == m);
  std::stringstream bad("2 2 101\n3 1 4\n0 0 0\n");
  CHECK_THROWS_AS(FieldMatrix::read_sms(bad), InputError);
}

TEST_CASE("echelon span") {
  PrimeField f;
  Echelon e(f, 4);
  CHECK(e.insert({1, 2, 0, 0}));
  CHECK(e.insert({0, 1, 1, 0}));
  CHECK_FALSE(e.insert({1, 3, 1, 0}));
  CHECK(e.contains({2, 5, 1, 0}));
  CHECK_FALSE(e.contains({0, 0, 0, 1}));
  CHECK(e.rank() == 2);
  Vec v{3, 3, 3, 3};
  e.reduce(v);
  for (std::size_t c : e.pivots()) CHECK(v[c] == 0);
}
