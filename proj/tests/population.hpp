#pragma once

// Random direct and semidirect combinations of catalog algebras, for property suites.

#include "lierad/catalog.hpp"

#include <random>
#include <string>
#include <vector>

namespace population {

using lierad::LieAlgebra;
using lierad::Matrix;
using lierad::Scalar;

/// Irreducible sl2 module of dimension d in the basis v_0..v_{d-1}; returns (h, e, f).
inline std::vector<Matrix> sl2_irrep(std::size_t d) {
  Matrix h(d, d), e(d, d), f(d, d);
  const long m = static_cast<long>(d) - 1;
  for (std::size_t k = 0; k < d; ++k) {
    const long kk = static_cast<long>(k);
    h(k, k) = Scalar(m - 2 * kk);
    if (k + 1 < d) f(k + 1, k) = 1;
    if (k > 0) e(k - 1, k) = Scalar(kk * (m - kk + 1));
  }
  return {h, e, f};
}

inline Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return out;
}

inline const std::vector<LieAlgebra>& pieces() {
  using lierad::catalog::build;
  static const std::vector<LieAlgebra> p{
      build("abelian", {1}), build("abelian", {2}), build("heisenberg3"), build("borel2"),
      build("sl", {2}),      build("gl", {2}),      build("t", {2}),      build("t", {3}),
      build("cext4"),        build("classII", {2}), build("n", {4}),
  };
  return p;
}

class Generator {
public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  LieAlgebra next() {
    for (;;) {
      LieAlgebra l = attempt();
      if (l.dim() >= 1 && l.dim() <= 15) return l;
    }
  }

private:
  std::mt19937 rng_;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  long coeff(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  LieAlgebra maybe_extend(LieAlgebra l) {
    if (pick(3) == 0) {
      const auto& extra = pieces()[pick(pieces().size())];
      if (l.dim() + extra.dim() <= 15) return lierad::direct_product({l, extra});
    }
    return l;
  }

  LieAlgebra attempt() {
    using lierad::catalog::build;
    switch (pick(6)) {
      case 0: {  // direct product of two or three pieces
        std::vector<LieAlgebra> f{pieces()[pick(pieces().size())], pieces()[pick(pieces().size())]};
        if (pick(2)) f.push_back(pieces()[pick(pieces().size())]);
        return lierad::direct_product(f);
      }
      case 1: {  // sl2 acting on a sum of irreducibles and trivial summands
        std::vector<std::vector<Matrix>> reps;
        std::size_t total = 0, parts = 1 + pick(3);
        for (std::size_t k = 0; k < parts; ++k) {
          std::size_t d = 1 + pick(4);
          reps.push_back(sl2_irrep(d));
          total += d;
        }
        std::vector<Matrix> phi;
        for (std::size_t g = 0; g < 3; ++g) {
          std::vector<Matrix> blocks;
          for (const auto& r : reps) blocks.push_back(r[g]);
          phi.push_back(block_diag(blocks));
        }
        return maybe_extend(lierad::semidirect_product(build("sl", {2}), build("abelian", {total}), phi));
      }
      case 2: {  // one derivation of a piece
        const auto& l0 = pieces()[pick(pieces().size())];
        auto ders = lierad::derivation_basis(l0);
        Matrix d(l0.dim(), l0.dim());
        for (const auto& b : ders) d = d + Scalar(coeff(-2, 2)) * b;
        return maybe_extend(lierad::semidirect_product(build("abelian", {1}), l0, {d}));
      }
      case 3: {  // two commuting diagonal actions with weights in Q(i)
        const std::size_t m = 1 + pick(4);
        const Scalar weights[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar::i(), Scalar(1) + Scalar::i()};
        std::vector<Matrix> phi(2, Matrix(m, m));
        for (auto& p : phi)
          for (std::size_t k = 0; k < m; ++k) p(k, k) = weights[pick(6)];
        return maybe_extend(lierad::semidirect_product(build("abelian", {2}), build("abelian", {m}), phi));
      }
      case 4: {  // borel2 on C^2 by its defining upper-triangular action
        Matrix h(2, 2), e(2, 2);
        h(0, 0) = 1;
        h(1, 1) = -1;
        e(0, 1) = 1;
        return maybe_extend(lierad::semidirect_product(build("borel2"), build("abelian", {2}), {h, e}));
      }
      default: {  // gl2 on C^2
        std::vector<Matrix> phi;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            Matrix u(2, 2);
            u(i, j) = 1;
            phi.push_back(u);
          }
        return maybe_extend(lierad::semidirect_product(build("gl", {2}), build("abelian", {2}), phi));
      }
    }
  }
};

inline std::vector<LieAlgebra> random_population(std::size_t count, unsigned seed = 20261016) {
  Generator g(seed);
  std::vector<LieAlgebra> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(g.next().renamed("combo" + std::to_string(k)));
  return out;
}

/// Catalog algebras of dimension at most 21.
inline std::vector<LieAlgebra> catalog_members() {
  using lierad::catalog::build;
  return {build("abelian", {1}), build("abelian", {3}), build("heisenberg3"), build("borel2"),  build("sl", {2}),
          build("sl", {3}),      build("gl", {2}),      build("gl", {3}),     build("t", {2}),    build("t", {3}),
          build("t", {4}),       build("t", {5}),       build("n", {3}),      build("n", {4}),    build("n", {5}),
          build("classII", {2}), build("classII", {3}), build("classI"),      build("cext4")};
}

}  // namespace population
