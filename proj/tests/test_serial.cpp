// Copyright 2026 The remeshx Authors.
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

#include <gtest/gtest.h>

#include "fixture.hpp"
#include "remeshx/error.hpp"
#include "remeshx/property.hpp"
#include "remeshx/reindex.hpp"
#include "remeshx/serial.hpp"

namespace remeshx {
namespace {

using testing::vertices_of;
using testing::worked_mesh;

TEST(ReindexSerial, WorkedExampleFirstUseOrder) {
  const Mesh out = reindex_serial(worked_mesh());
  EXPECT_EQ(out.vertices(), vertices_of("ABCDEF"));
  EXPECT_EQ(out.indices(), (std::vector<std::uint32_t>{0, 1, 2, 0, 2, 3, 2, 4, 5, 2, 5, 3}));
}

TEST(ReindexSerial, FirstUseOrderDiffersFromSorted) {
  const Mesh m(vertices_of("FEDF"), 2, {0, 1, 2, 3});
  const Mesh out = reindex_serial(m);
  EXPECT_EQ(out.vertices(), vertices_of("FED"));
  EXPECT_EQ(out.indices(), (std::vector<std::uint32_t>{0, 1, 2, 0}));
  EXPECT_EQ(reindex(m).mesh.vertices(), vertices_of("DEF"));
  EXPECT_TRUE(equivalent(out, reindex(m).mesh));
}

TEST(ReindexSerial, EmptyAndUnusedOnly) {
  EXPECT_TRUE(reindex_serial(Mesh()).empty());
  EXPECT_TRUE(reindex_serial(Mesh(vertices_of("ABC"), 3, {})).empty());
}

TEST(ReindexSerial, InvalidMeshRejected) {
  EXPECT_THROW(reindex_serial(Mesh(vertices_of("A"), 1, {1})), Error);
}

TEST(ReindexSerial, GenericDimensionPath) {
  RandomMeshSpec spec;
  spec.dim = 6;
  spec.coord_pool_size = 2;
  const Mesh m = random_mesh(spec);
  const Mesh out = reindex_serial(m);
  EXPECT_EQ(out.num_vertices(), testing::brute_force_distinct_used(m));
  EXPECT_EQ(dereference(out), dereference(m));
}

TEST(ReindexSerial, IdempotentBitExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomMeshSpec spec;
    spec.seed = seed;
    const Mesh once = reindex_serial(random_mesh(spec));
    EXPECT_EQ(reindex_serial(once), once);
  }
}

TEST(Equivalent, Examples) {
  const Mesh m = worked_mesh();
  EXPECT_TRUE(equivalent(m, m));
  EXPECT_TRUE(equivalent(reindex(m).mesh, reindex_serial(m)));

  std::vector<float> coords = m.vertices().coords();
  coords[3] = 1.5f;  // perturb B
  const Mesh perturbed(VertexArray(2, coords), 3, m.indices());
  EXPECT_FALSE(equivalent(m, perturbed));
}

TEST(Equivalent, SameSoupDifferentMultiset) {
  // Same soup; the second mesh carries an extra unused copy.
  const Mesh a(vertices_of("ABC"), 3, {0, 1, 2});
  const Mesh b(vertices_of("ABCA"), 3, {0, 1, 2});
  EXPECT_FALSE(equivalent(a, b));
  const Mesh c(vertices_of("CBA"), 3, {2, 1, 0});
  EXPECT_TRUE(equivalent(a, c));
}

}  // namespace
}  // namespace remeshx
