// Copyright 2026 The kopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "kopt/buckets.h"
#include "kopt/decomp.h"
#include "kopt/moves.h"
#include "kopt/oracle.h"
#include "test_util.h"

namespace kopt {
namespace {

using ::kopt::testing::Complete;
using ::kopt::testing::Cycle;
using ::kopt::testing::Path;
using ::kopt::testing::Pattern;
using ::kopt::testing::RandomGraph;

TEST(DependenceGraphTest, UnionOfInterferenceAndOrder) {
  const InterferenceGraph triangle =
      BuildInterferenceGraph(Pattern(3, {{2, 3}, {4, 5}, {6, 1}}));
  const Graph g = DependenceGraph(triangle, 0);
  EXPECT_EQ(g, Complete(3));
  EXPECT_EQ(TreewidthExact(g)->width, 2);

  // Parallel edges collapse.
  const InterferenceGraph two_opt =
      BuildInterferenceGraph(Pattern(2, {{1, 3}, {2, 4}}));
  EXPECT_EQ(DependenceGraph(two_opt, 0b1).edges().size(), 1u);
}

TEST(DependenceGraphTest, FullOrderIsConnectedWithBoundedDegree) {
  for (int k = 2; k <= 6; ++k) {
    ASSERT_OK_AND_ASSIGN(valid, EnumerateValidPatterns(k));
    for (const ConnectionPattern& m : valid) {
      const InterferenceGraph im = BuildInterferenceGraph(m);
      const uint32_t all = (1u << (k - 1)) - 1;
      const Graph g = DependenceGraph(im, all);
      for (int v = 0; v + 1 < k; ++v) EXPECT_TRUE(g.HasEdge(v, v + 1));
      for (uint32_t a = 0; a <= all; ++a) {
        const Graph d = DependenceGraph(im, a);
        for (int v = 0; v < k; ++v) EXPECT_LE(d.degree(v), 4);
      }
    }
  }
}

TEST(TreewidthTest, KnownGraphs) {
  EXPECT_EQ(TreewidthExact(Complete(5))->width, 4);
  EXPECT_EQ(TreewidthExact(Cycle(6))->width, 2);
  EXPECT_EQ(TreewidthExact(Cycle(3))->width, 2);
  EXPECT_EQ(TreewidthExact(Path(5))->width, 1);
  EXPECT_EQ(TreewidthExact(Graph(5))->width, 0);
  EXPECT_EQ(TreewidthExact(Graph(0))->width, 0);
  EXPECT_EQ(TreewidthExact(Complete(8))->width, 7);
  EXPECT_FALSE(TreewidthExact(Graph(25)).ok());
}

TEST(TreewidthTest, OrderRealizesWidthAndIsLexSmallest) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = RandomGraph(n, 0.5, rng);
    ASSERT_OK_AND_ASSIGN(tw, TreewidthExact(g));
    std::vector<int> sorted = tw.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    ASSERT_EQ(sorted, identity);
    EXPECT_EQ(EliminationWidth(g, tw.order), tw.width);
    // No lexicographically smaller order reaches the same width.
    std::vector<int> order = identity;
    do {
      if (order >= tw.order) break;
      EXPECT_GT(EliminationWidth(g, order), tw.width);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(TreewidthTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 8);
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 7);
    const Graph g = RandomGraph(n, p, rng);
    ASSERT_OK_AND_ASSIGN(brute, TreewidthBruteforce(g));
    EXPECT_EQ(TreewidthExact(g)->width, brute);
  }
}

TEST(TreewidthTest, MatchesBruteForceOnDependenceGraphs) {
  for (int k = 2; k <= 5; ++k) {
    ASSERT_OK_AND_ASSIGN(valid, EnumerateValidPatterns(k));
    for (const ConnectionPattern& m : valid) {
      const InterferenceGraph im = BuildInterferenceGraph(m);
      for (uint32_t a = 0; a < (1u << (k - 1)); ++a) {
        const Graph g = DependenceGraph(im, a);
        EXPECT_EQ(TreewidthExact(g)->width, *TreewidthBruteforce(g));
      }
    }
  }
}

TEST(DecompositionTest, FromOrderIsValidWithOrderWidth) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = RandomGraph(n, 0.4, rng);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const TreeDecomposition d = DecompositionFromOrder(g, order);
    const ValidationReport report = ValidateDecomposition(g, d);
    EXPECT_TRUE(report.ok) << report.problems.front();
    EXPECT_EQ(d.width(), EliminationWidth(g, order));
    const NiceTreeDecomposition nice = ToNice(d);
    const ValidationReport nice_report = ValidateDecomposition(g, nice);
    EXPECT_TRUE(nice_report.ok) << nice_report.problems.front();
    EXPECT_EQ(nice.width(), d.width());
    EXPECT_LE(nice.nodes.size(),
              static_cast<size_t>(4 * n * (d.width() + 1) + 1));
  }
}

TEST(DecompositionTest, SmallExamples) {
  const TreeDecomposition tri = DecompositionFromOrder(Complete(3), {2, 0, 1});
  EXPECT_EQ(tri.width(), 2);
  const TreeDecomposition path =
      DecompositionFromOrder(Path(5), {0, 1, 2, 3, 4});
  EXPECT_EQ(path.width(), 1);
  EXPECT_TRUE(ValidateDecomposition(Path(5), path).ok);
}

TEST(NiceTest, SingleBagChain) {
  Graph g(2);
  g.AddEdge(0, 1);
  const TreeDecomposition d{{{0, 1}}, {-1}};
  const NiceTreeDecomposition nice = ToNice(d);
  ASSERT_EQ(nice.nodes.size(), 5u);
  // Walk from the root down to the leaf.
  std::vector<NodeKind> kinds;
  std::vector<int> vertices;
  for (int t = nice.root; t >= 0;
       t = nice.nodes[t].children.empty() ? -1 : nice.nodes[t].children[0]) {
    kinds.push_back(nice.nodes[t].kind);
    vertices.push_back(nice.nodes[t].vertex);
  }
  EXPECT_EQ(kinds, (std::vector<NodeKind>{NodeKind::kForget, NodeKind::kForget,
                                          NodeKind::kIntroduce,
                                          NodeKind::kIntroduce,
                                          NodeKind::kLeaf}));
  // Bottom-up: introduce 1, introduce 2, forget 1, forget 2.
  EXPECT_EQ(vertices, (std::vector<int>{1, 0, 1, 0, -1}));
  EXPECT_TRUE(nice.nodes[nice.root].bag.empty());
  EXPECT_TRUE(ValidateDecomposition(g, nice).ok);
}

TEST(NiceTest, ChildrenPrecedeParentsAndJoinsCopyBags) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = RandomGraph(n, 0.3, rng);
    ASSERT_OK_AND_ASSIGN(nice, OptimalNiceDecomposition(g));
    EXPECT_EQ(nice.width(), TreewidthExact(g)->width);
    for (int t = 0; t < static_cast<int>(nice.nodes.size()); ++t) {
      for (int c : nice.nodes[t].children) EXPECT_LT(c, t);
      if (nice.nodes[t].kind == NodeKind::kJoin) {
        ASSERT_EQ(nice.nodes[t].children.size(), 2u);
        for (int c : nice.nodes[t].children) {
          EXPECT_EQ(nice.nodes[c].bag, nice.nodes[t].bag);
        }
      }
    }
  }
}

TEST(ValidateTest, NamesUncoveredEdge) {
  const Graph g = Path(3);
  const TreeDecomposition d{{{0, 1}, {2}}, {-1, 0}};
  const ValidationReport report = ValidateDecomposition(g, d);
  EXPECT_FALSE(report.ok);
  ASSERT_FALSE(report.problems.empty());
  EXPECT_NE(std::find(report.problems.begin(), report.problems.end(),
                      "edge {2,3} is not covered by any bag"),
            report.problems.end());
}

TEST(ValidateTest, NamesDisconnectedVertex) {
  const Graph g = Path(3);
  // Vertex 1 (0-based 0) sits in the two ends of a three-node path only.
  const TreeDecomposition d{{{0, 1}, {1, 2}, {0}}, {-1, 0, 1}};
  const ValidationReport report = ValidateDecomposition(g, d);
  EXPECT_FALSE(report.ok);
  bool named = false;
  for (const std::string& p : report.problems) {
    named |= p.find("vertex 1: bags do not form a connected subtree") !=
             std::string::npos;
  }
  EXPECT_TRUE(named);
}

TEST(ValidateTest, RejectsBadNiceShapes) {
  Graph g(2);
  g.AddEdge(0, 1);
  NiceTreeDecomposition nice = ToNice(TreeDecomposition{{{0, 1}}, {-1}});
  ASSERT_TRUE(ValidateDecomposition(g, nice).ok);
  NiceTreeDecomposition broken = nice;
  broken.nodes[broken.root].kind = NodeKind::kJoin;
  EXPECT_FALSE(ValidateDecomposition(g, broken).ok);
  broken = nice;
  broken.nodes[0].bag = {0};
  EXPECT_FALSE(ValidateDecomposition(g, broken).ok);
}

TEST(DotTest, ListsNodes) {
  const NiceTreeDecomposition nice =
      ToNice(TreeDecomposition{{{0, 1}}, {-1}});
  const std::string dot = ToDot(nice);
  EXPECT_NE(dot.find("introduce"), std::string::npos);
  EXPECT_NE(dot.find("forget"), std::string::npos);
  EXPECT_NE(dot.find("leaf"), std::string::npos);
}

}  // namespace
}  // namespace kopt
