// Copyright 2026 The pauli-dla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdla/pauli.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pdla/instance.hpp"
#include "test_util.hpp"

using namespace pdla;

TEST(pauli, parse_and_render) {
  EXPECT_EQ(render_pauli(parse_pauli("iXZ")), "iXZ");
  EXPECT_EQ(render_pauli(parse_pauli("-iY")), "-iY");
  EXPECT_EQ(render_pauli(parse_pauli("X.Z")), "XIZ");
  EXPECT_EQ(render_pauli(parse_pauli("+Y")), "Y");
  EXPECT_EQ(render_pauli(parse_pauli("iX", 3)), "iXII");
  EXPECT_EQ(parse_pauli("Y").phase(), 1u);
}

TEST(pauli, parse_errors) {
  EXPECT_THROW(parse_pauli(""), PauliParseError);
  EXPECT_THROW(parse_pauli("i"), PauliParseError);
  EXPECT_THROW(parse_pauli("XQ"), PauliParseError);
  EXPECT_THROW(parse_pauli("XXX", 2), PauliParseError);
}

TEST(pauli, products_follow_the_pauli_algebra) {
  // XZ = -iY, ZX = iY.
  EXPECT_EQ(render_pauli(multiply(parse_pauli("X"), parse_pauli("Z"))), "-iY");
  EXPECT_EQ(render_pauli(multiply(parse_pauli("Z"), parse_pauli("X"))), "iY");
  EXPECT_EQ(render_pauli(multiply(parse_pauli("Y"), parse_pauli("Y"))), "I");
  EXPECT_TRUE(anticommute(parse_pauli("XI"), parse_pauli("ZZ")));
  EXPECT_FALSE(anticommute(parse_pauli("XX"), parse_pauli("ZZ")));
  EXPECT_FALSE(commutator(parse_pauli("XX"), parse_pauli("ZZ")));
  EXPECT_EQ(render_pauli(*commutator(parse_pauli("iX"), parse_pauli("iZ"))), "iY");
}

TEST(pauli, squares) {
  EXPECT_TRUE(parse_pauli("iX").squares_to_minus_one());
  EXPECT_FALSE(parse_pauli("X").squares_to_minus_one());
  EXPECT_TRUE(parse_pauli("iYY").squares_to_minus_one());
  EXPECT_FALSE(parse_pauli("iXZ").squares_to_minus_one() == parse_pauli("XZ").squares_to_minus_one());
}

TEST(pauli, vector_image_forgets_only_the_sign) {
  EXPECT_EQ(to_vector(parse_pauli("iX")), to_vector(parse_pauli("-iX")));
  EXPECT_NE(to_vector(parse_pauli("iX")), to_vector(parse_pauli("X")));
  EXPECT_EQ(to_vector(parse_pauli("iXZ")).bits().str(), "10011");
  EXPECT_EQ(PauliVector::radical_point(2).bits().str(), "00001");
  EXPECT_EQ(render_pauli(from_vector(to_vector(parse_pauli("-iY")))), "iY");
}

TEST(pauli, forms_match_group_structure) {
  // Q is the square sign and f the commutation sign, and the vector of a
  // product is the sum of the vectors.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto gens = random_generators(n, 2, rng);
    auto p = gens[0].with_phase(rng() % 4);
    auto q = gens[1].with_phase(rng() % 4);
    const auto vp = to_vector(p);
    const auto vq = to_vector(q);
    ASSERT_EQ(quadratic_form(vp), p.squares_to_minus_one());
    ASSERT_EQ(polar_form(vp, vq), anticommute(p, q));
    ASSERT_EQ(to_vector(multiply(p, q)), vp + vq);
    const auto forms = eval_forms(vp, vq);
    ASSERT_EQ(forms.f, anticommute(p, q));
    ASSERT_EQ(forms.q_u, p.squares_to_minus_one());
  }
}

TEST(pauli, mismatched_sizes_throw) {
  EXPECT_THROW(multiply(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
  EXPECT_THROW(PauliVector(2, BitVector(4)), std::invalid_argument);
}
