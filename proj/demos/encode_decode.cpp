// Encodes a logical qubit into four photons, scrambles every photon with the
// same random rotation, and decodes it back.
#include <cstdio>
#include <random>

#include <dfsim/dfsim.hpp>

using namespace dfsim;

int main() {
  std::mt19937_64 rng(2024);
  const LogicalQubit in{std::sqrt(3.0) / 2.0, -0.5};
  const Vec psi = encode_logical(in);

  for (int i = 0; i < 5; ++i) {
    const Mat u4 = collective(haar_su2(rng), 4);
    const DecodedLogical out = decode_logical(dfsim::apply(u4, psi));
    const Cx overlap = std::conj(in.c0) * out.q.c0 + std::conj(in.c1) * out.q.c1;
    std::printf("draw %d: |overlap| = %.12f, residual = %.2e\n", i, std::abs(overlap), out.residual);
  }
  return 0;
}
