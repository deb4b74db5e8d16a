#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include <dfsim/df_states.hpp>
#include <dfsim/optics.hpp>

using namespace dfsim;

namespace {

// Independent mixed-basis oracle: coefficient of each (Z,Z,X,X) product basis
// vector by direct summation, no matrix machinery.
std::array<Cx, 16> mixed_basis_oracle(const Vec& s) {
  std::array<Cx, 16> out{};
  for (int o = 0; o < 16; ++o) {
    Cx coeff = 0.0;
    for (int idx = 0; idx < 16; ++idx) {
      // <o| idx> factorizes per photon: Z photons match exactly, X photons
      // contribute (+-1)/sqrt(2)
      double overlap = 1.0;
      bool zero = false;
      for (int photon = 0; photon < 4; ++photon) {
        const int ob = (o >> (3 - photon)) & 1;
        const int ib = (idx >> (3 - photon)) & 1;
        if (photon < 2) {
          if (ob != ib) zero = true;
        } else {
          overlap *= (ob == 1 && ib == 1) ? -1.0 / std::sqrt(2.0) : 1.0 / std::sqrt(2.0);
        }
      }
      if (!zero) coeff += overlap * s[idx];
    }
    out[o] = coeff;
  }
  return out;
}

}  // namespace

TEST_CASE("singlet amplitudes") {
  const Vec s = singlet();
  REQUIRE(std::abs(s[0b01] - Cx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  REQUIRE(std::abs(s[0b10] + Cx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  REQUIRE(std::abs(s.norm() - 1.0) < 1e-15);
}

TEST_CASE("phi0 amplitudes") {
  const Vec p = phi0();
  REQUIRE(std::abs(p[0b0101] - Cx{0.5, 0.0}) < 1e-15);
  REQUIRE(std::abs(p[0b0110] + Cx{0.5, 0.0}) < 1e-15);
  REQUIRE(std::abs(p[0b1001] + Cx{0.5, 0.0}) < 1e-15);
  REQUIRE(std::abs(p[0b1010] - Cx{0.5, 0.0}) < 1e-15);
  REQUIRE(std::abs(p[0b0011]) == 0.0);
}

TEST_CASE("phi1 amplitudes and orthogonality") {
  const Vec p = phi1();
  const double s = 1.0 / (2.0 * std::sqrt(3.0));
  REQUIRE(std::abs(p[0b0011] - Cx{2.0 * s, 0.0}) < 1e-15);
  REQUIRE(std::abs(p[0b0101] + Cx{s, 0.0}) < 1e-15);
  REQUIRE(std::abs(p[0b1100] - Cx{2.0 * s, 0.0}) < 1e-15);
  REQUIRE(std::abs(p.norm() - 1.0) < 1e-12);
  // brute-force inner product over the 16 basis terms
  Cx ip = 0.0;
  const Vec p0 = phi0();
  for (int i = 0; i < 16; ++i) ip += std::conj(p0[i]) * p[i];
  REQUIRE(std::abs(ip) < 1e-12);
}

TEST_CASE("encode_logical") {
  REQUIRE((encode_logical({1.0, 0.0}) - phi0()).cwiseAbs().maxCoeff() < 1e-15);
  REQUIRE((encode_logical({0.0, 1.0}) - phi1()).cwiseAbs().maxCoeff() < 1e-15);
  const Vec psi_l = encode_logical({std::sqrt(3.0) / 2.0, -0.5});
  const Vec expected = std::sqrt(3.0) / 2.0 * phi0() - 0.5 * phi1();
  REQUIRE((psi_l - expected).cwiseAbs().maxCoeff() < 1e-15);
  REQUIRE(std::abs(psi_l[0b0101] - Cx{1.0 / std::sqrt(3.0), 0.0}) < 1e-12);
  REQUIRE_THROWS_AS(encode_logical({1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("decode round trips") {
  const DecodedLogical d0 = decode_logical(phi0());
  REQUIRE(std::abs(d0.q.c0 - Cx{1.0, 0.0}) < 1e-12);
  REQUIRE(std::abs(d0.q.c1) < 1e-12);
  REQUIRE(std::abs(d0.residual) < 1e-12);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const LogicalQubit q = random_logical_qubit(rng);
    const DecodedLogical d = decode_logical(encode_logical(q));
    // equality up to global phase: compare |<q|d>| = 1
    const Cx overlap = std::conj(q.c0) * d.q.c0 + std::conj(q.c1) * d.q.c1;
    REQUIRE(std::abs(std::abs(overlap) - 1.0) < 1e-12);
    REQUIRE(std::abs(d.residual) < 1e-12);
  }
}

TEST_CASE("decode after collective noise") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const LogicalQubit q = random_logical_qubit(rng);
    const Mat u4 = collective(haar_su2(rng), 4);
    const DecodedLogical d = decode_logical(Vec(u4 * encode_logical(q)));
    const Cx overlap = std::conj(q.c0) * d.q.c0 + std::conj(q.c1) * d.q.c1;
    REQUIRE(std::abs(std::abs(overlap) - 1.0) < 1e-10);
    REQUIRE(std::abs(d.residual) < 1e-10);
  }
}

TEST_CASE("decode rejects states orthogonal to the DF subspace") {
  REQUIRE_THROWS_AS(decode_logical(basis_ket(16, 0b0000)), std::invalid_argument);
}

TEST_CASE("mixed-basis expansion of phi0") {
  const std::array<Cx, 16> coeffs = expand_mixed_basis(phi0());
  // nonzero entries: 01 -> (1,0) pattern on X side
  REQUIRE(std::abs(coeffs[0b0110] - Cx{0.5, 0.0}) < 1e-12);   // 01 then X bits 1,0
  REQUIRE(std::abs(coeffs[0b0101] + Cx{0.5, 0.0}) < 1e-12);   // 01 then X bits 0,1
  REQUIRE(std::abs(coeffs[0b1001] - Cx{0.5, 0.0}) < 1e-12);   // 10 then X bits 0,1
  REQUIRE(std::abs(coeffs[0b1010] + Cx{0.5, 0.0}) < 1e-12);   // 10 then X bits 1,0
  for (int o = 0; o < 16; ++o) {
    const bool populated = o == 0b0110 || o == 0b0101 || o == 0b1001 || o == 0b1010;
    if (!populated) REQUIRE(std::abs(coeffs[o]) < 1e-12);
  }
}

TEST_CASE("mixed-basis expansion of phi1 against the summation oracle") {
  const std::array<Cx, 16> coeffs = expand_mixed_basis(phi1());
  const std::array<Cx, 16> oracle = mixed_basis_oracle(phi1());
  for (int o = 0; o < 16; ++o) REQUIRE(std::abs(coeffs[o] - oracle[o]) < 1e-12);
  // twelve entries of magnitude 1/(2 sqrt 3), zero on the four phi0 outcomes
  const double mag = 1.0 / (2.0 * std::sqrt(3.0));
  const std::array<int, 4> phi0_outcomes{0b0101, 0b0110, 0b1001, 0b1010};
  // signs of the twelve populated terms
  const std::array<int, 16> sign{+1, -1, -1, +1, -1, 0, 0, +1, -1, 0, 0, +1, +1, +1, +1, +1};
  for (int o = 0; o < 16; ++o) {
    bool is_phi0 = false;
    for (int z : phi0_outcomes) is_phi0 |= o == z;
    if (is_phi0) {
      REQUIRE(std::abs(coeffs[o]) < 1e-12);
    } else {
      REQUIRE(std::abs(coeffs[o] - Cx{sign[o] * mag, 0.0}) < 1e-12);
    }
  }
}

TEST_CASE("mixed-basis expansion of a product state") {
  const std::array<Cx, 16> coeffs = expand_mixed_basis(basis_ket(16, 0b0000));
  for (int o = 0; o < 16; ++o) {
    if ((o >> 2) == 0)
      REQUIRE(std::abs(coeffs[o] - Cx{0.5, 0.0}) < 1e-12);
    else
      REQUIRE(std::abs(coeffs[o]) < 1e-12);
  }
}

TEST_CASE("random expansions agree with the oracle") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    Vec s(16);
    for (int i = 0; i < 16; ++i) s[i] = Cx{uni(rng), uni(rng)};
    s.normalize();
    const std::array<Cx, 16> coeffs = expand_mixed_basis(s);
    const std::array<Cx, 16> oracle = mixed_basis_oracle(s);
    for (int o = 0; o < 16; ++o) REQUIRE(std::abs(coeffs[o] - oracle[o]) < 1e-12);
  }
}

TEST_CASE("classify_outcome") {
  REQUIRE(classify_outcome(0b0110) == DfClass::Phi0Consistent);  // 01 then 1,0 on X
  REQUIRE(classify_outcome(0b0000) == DfClass::Phi1Consistent);
  REQUIRE(classify_outcome(0b1111) == DfClass::Phi1Consistent);
  int phi0_count = 0;
  for (int o = 0; o < 16; ++o)
    if (classify_outcome(o) == DfClass::Phi0Consistent) ++phi0_count;
  REQUIRE(phi0_count == 4);
  REQUIRE_THROWS_AS(classify_outcome(0, kSettingZZZZ), std::invalid_argument);
  REQUIRE_THROWS_AS(classify_outcome(16), std::invalid_argument);
}

TEST_CASE("DF states have zero weight on the other class") {
  const std::array<Cx, 16> c0 = expand_mixed_basis(phi0());
  const std::array<Cx, 16> c1 = expand_mixed_basis(phi1());
  for (int o = 0; o < 16; ++o) {
    if (classify_outcome(o) == DfClass::Phi0Consistent)
      REQUIRE(std::abs(c1[o]) < 1e-12);
    else
      REQUIRE(std::abs(c0[o]) < 1e-12);
  }
}

TEST_CASE("DF invariance over Haar draws") {
  std::mt19937_64 rng(43);
  std::vector<Vec> states{phi0(), phi1()};
  for (int k = 0; k < 20; ++k) states.push_back(encode_logical(random_logical_qubit(rng)));
  for (int draw = 0; draw < 1000; ++draw) {
    const Mat u4 = collective(haar_su2(rng), 4);
    for (const Vec& s : states) REQUIRE(std::abs(std::abs(inner(s, Vec(u4 * s))) - 1.0) < 1e-10);
  }
}

TEST_CASE("random_logical_qubit is normalized and seeded") {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 10; ++i) {
    const LogicalQubit qa = random_logical_qubit(a);
    const LogicalQubit qb = random_logical_qubit(b);
    REQUIRE(qa.c0 == qb.c0);
    REQUIRE(qa.c1 == qb.c1);
    REQUIRE(is_normalized(qa));
  }
}
