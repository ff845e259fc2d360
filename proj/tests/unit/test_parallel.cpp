#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "fitkernel/parallel.hpp"
#include "support.hpp"

using namespace fitkernel;

namespace {

struct ThreadsEnv {
  explicit ThreadsEnv(const char* v) { setenv("FITKERNEL_THREADS", v, 1); }
  ~ThreadsEnv() { unsetenv("FITKERNEL_THREADS"); }
};

}  // namespace

TEST(Parallel, WorkerCountFromEnvironment) {
  {
    ThreadsEnv env("3");
    EXPECT_EQ(worker_threads(), 3u);
  }
  {
    ThreadsEnv env("garbage");
    EXPECT_GE(worker_threads(), 1u);
  }
}

TEST(Parallel, CoversEveryIndexOnce) {
  ThreadsEnv env("4");
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, RethrowsTaskErrors) {
  ThreadsEnv env("4");
  EXPECT_THROW(parallel_for(50, [](std::size_t i) {
                 if (i == 17) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(Parallel, FitIndependentOfThreadCount) {
  const GroupPtr g = FiniteGroup::make({Family::Alternating4, {}});
  const WedderburnData w = wedderburn_data(g, 3);
  const auto pres = make_gr_presentation(g, 3, fk_test::random_gr_matrix(g, 4, 2));
  FitResult one, many;
  {
    ThreadsEnv env("1");
    one = fit_of_presentation(w, pres);
  }
  {
    ThreadsEnv env("4");
    many = fit_of_presentation(w, pres);
  }
  EXPECT_EQ(one.generators, many.generators);
  EXPECT_EQ(one.expansion, many.expansion);
}
