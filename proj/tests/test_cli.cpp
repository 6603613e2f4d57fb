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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixture.hpp"
#include "remeshx/io.hpp"
#include "remeshx/serial.hpp"

namespace remeshx::cli {
namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           (std::string("remeshx_cli_") +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "remeshx");
    out_.str({});
    err_.str({});
    return cli_main(args, out_, err_);
  }

  // Value printed on the stats row labelled `label`, or -1.
  long long stat(const std::string& label) const {
    std::istringstream lines(out_.str());
    std::string key;
    long long value = 0;
    while (lines >> key >> value) {
      if (key == label) return value;
    }
    return -1;
  }

  std::ostringstream out_;
  std::ostringstream err_;

 private:
  std::filesystem::path dir_;
};

TEST_F(Cli, GenReindexStats) {
  ASSERT_EQ(run({"gen", "--n", "8", path("g.rmx")}), kExitOk) << err_.str();
  ASSERT_EQ(run({"reindex", path("g.rmx"), path("out.rmx")}), kExitOk) << err_.str();
  ASSERT_EQ(run({"stats", path("out.rmx")}), kExitOk) << err_.str();
  EXPECT_EQ(stat("vertices"), 81);
  EXPECT_EQ(stat("elements"), 64);
  EXPECT_EQ(stat("duplicates"), 0);
  EXPECT_EQ(stat("unused"), 0);
}

TEST_F(Cli, StatsOnRawGrid) {
  ASSERT_EQ(run({"--quiet", "gen", "--n", "2", path("g.obj")}), kExitOk) << err_.str();
  EXPECT_TRUE(out_.str().empty());
  ASSERT_EQ(run({"--dim", "2", "stats", path("g.obj")}), kExitOk) << err_.str();
  // 20 vertices: 9 distinct corners + 4 centers; 4 centers unused.
  EXPECT_EQ(stat("distinct"), 13);
  EXPECT_EQ(stat("unused"), 4);
}

TEST_F(Cli, ValidateExitCodes) {
  write_mesh(testing::worked_mesh(), path("w.rmx"));
  EXPECT_EQ(run({"validate", path("w.rmx")}), kExitOk);

  std::ofstream(path("bad.rmx"), std::ios::binary).write("RMX1", 4);
  EXPECT_EQ(run({"validate", path("bad.rmx")}), kExitFailure);
}

TEST_F(Cli, ValidateReportsOutOfRangeIndex) {
  // Hand-built .rmx: 1 vertex, one 1-element referencing vertex 3.
  const Mesh ok(VertexArray(1, {0.0f}), 1, {0});
  auto bytes = encode_bin(ok);
  bytes[28 + 4] = std::byte{3};
  std::ofstream(path("oob.rmx"), std::ios::binary)
      .write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  EXPECT_EQ(run({"validate", path("oob.rmx")}), kExitFailure);
  EXPECT_NE(err_.str().find("index 3"), std::string::npos) << err_.str();
}

TEST_F(Cli, MissingInput) {
  EXPECT_NE(run({"reindex", path("missing.obj"), path("out.obj")}), kExitOk);
  EXPECT_NE(err_.str().find("not found"), std::string::npos) << err_.str();
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"reindex", "--bogus", "a.obj", "b.obj"}), kExitUsage);
  EXPECT_EQ(run({"--format", "ply", "stats", "a.obj"}), kExitUsage);
  EXPECT_EQ(run({"subset", path("a.rmx"), path("b.rmx")}), kExitUsage);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST_F(Cli, MergeSoupSubset) {
  const Mesh w = testing::worked_mesh();
  write_mesh(w, path("w.rmx"));
  ASSERT_EQ(run({"merge", path("w.rmx"), path("w.rmx"), path("m.rmx")}), kExitOk) << err_.str();
  const Mesh merged = read_bin(path("m.rmx"));
  EXPECT_EQ(merged.num_vertices(), 6u);
  EXPECT_EQ(merged.num_elements(), 8u);

  ASSERT_EQ(run({"soup", path("w.rmx"), path("s.rmx")}), kExitOk) << err_.str();
  EXPECT_EQ(dereference(read_bin(path("s.rmx"))), dereference(w));

  ASSERT_EQ(run({"subset", path("w.rmx"), path("sub.rmx"), "--keep", "0-1"}), kExitOk)
      << err_.str();
  EXPECT_EQ(read_bin(path("sub.rmx")).vertices(), testing::vertices_of("ABCD"));
  EXPECT_EQ(run({"subset", path("w.rmx"), path("sub.rmx"), "--keep", "0-9"}), kExitFailure);
  EXPECT_EQ(run({"subset", path("w.rmx"), path("sub.rmx"), "--keep", "1-x"}), kExitUsage);
}

TEST_F(Cli, SubsetByObjGroup) {
  std::ofstream(path("g.obj")) << "v 0 0\nv 1 0\nv 0 1\nv 1 1\nv 5 5\n"
                                  "g first\nf 1 2 3\ng second\nf 2 3 4\nf 2 4 5\n";
  ASSERT_EQ(run({"subset", path("g.obj"), path("second.obj"), "--group", "second"}), kExitOk)
      << err_.str();
  const Mesh part = read_obj(path("second.obj")).mesh;
  EXPECT_EQ(part.num_elements(), 2u);
  EXPECT_EQ(part.num_vertices(), 4u);
  EXPECT_EQ(run({"subset", path("g.obj"), path("x.obj"), "--group", "nope"}), kExitFailure);
}

TEST_F(Cli, FormatOverrideAndThreads) {
  write_mesh(testing::worked_mesh(), path("w.obj"));
  ASSERT_EQ(run({"--threads", "1", "reindex", path("w.obj"), path("out.obj")}), kExitOk)
      << err_.str();
  EXPECT_EQ(read_obj(path("out.obj")).mesh.num_vertices(), 6u);
  ASSERT_EQ(run({"--format", "bin", "gen", "--n", "3", path("grid.dat")}), kExitOk);
  EXPECT_EQ(read_mesh(path("grid.dat"), MeshFormat::kBin).mesh.num_elements(), 9u);
}

TEST_F(Cli, BenchCsv) {
  ASSERT_EQ(run({"bench", "--sizes", "2,8", "--reps", "1", "--csv", path("b.csv")}), kExitOk)
      << err_.str();
  std::ifstream csv(path("b.csv"));
  std::string header, row1, row2;
  std::getline(csv, header);
  std::getline(csv, row1);
  std::getline(csv, row2);
  EXPECT_EQ(header, "n,quads_in,vertices_in,vertices_out,t_serial_ms,t_parallel_ms,threads");
  EXPECT_EQ(row1.rfind("2,4,20,9,", 0), 0u) << row1;
  EXPECT_EQ(row2.rfind("8,64,320,81,", 0), 0u) << row2;
  EXPECT_NE(out_.str().find("time (CPU, serial)"), std::string::npos);
}

TEST(ParseRanges, Forms) {
  EXPECT_EQ(parse_ranges("0-3,7,9-10"), (std::vector<std::size_t>{0, 1, 2, 3, 7, 9, 10}));
  EXPECT_EQ(parse_ranges("5,1,5"), (std::vector<std::size_t>{1, 5}));
  EXPECT_ANY_THROW(parse_ranges(""));
  EXPECT_ANY_THROW(parse_ranges("3-1"));
  EXPECT_ANY_THROW(parse_ranges("1,,2"));
}

}  // namespace
}  // namespace remeshx::cli
