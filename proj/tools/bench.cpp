#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "floatlab/bodies.hpp"
#include "floatlab/floating.hpp"
#include "floatlab/metronoid.hpp"
#include "floatlab/parallel.hpp"
#include "floatlab/radon.hpp"

namespace {

using namespace floatlab;
using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(const Fn& fn) {
  const auto t0 = Clock::now();
  fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string name;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool match = false;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-28s %12s %12s %9s %7s\n", "workload", "serial [ms]", "parallel [ms]",
              "speedup", "match");
  for (const Row& r : rows) {
    std::printf("%-28s %12.1f %12.1f %8.2fx %7s\n", r.name.c_str(), r.serial_ms,
                r.parallel_ms, r.serial_ms / r.parallel_ms, r.match ? "yes" : "no");
  }
}

bool same_samples(const std::vector<MetronoidSample2>& a,
                  const std::vector<MetronoidSample2>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(a[i])) != 0) return false;
  }
  return true;
}

bool same_samples(const std::vector<MetronoidSample3>& a,
                  const std::vector<MetronoidSample3>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(a[i])) != 0) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const int dirs2d = quick ? 512 : 4096;
  const int dirs3d = quick ? 256 : 1024;
  const int ball_res = quick ? 2000 : 10000;

  std::printf("threads: %d\n\n", thread_cap());
  std::vector<Row> rows;

  {
    const ConvexPolygon disk = make_disk(1.0, 4096);
    const auto dirs = uniform_directions2(dirs2d);
    std::vector<MetronoidSample2> rs, rp;
    Row row{"metronoid 2D disk-4096", 0, 0, false};
    row.serial_ms = time_ms([&] { rs = metronoid_boundary(disk, 0.3, dirs, kVolumeTol, Exec::Serial); });
    row.parallel_ms = time_ms([&] { rp = metronoid_boundary(disk, 0.3, dirs, kVolumeTol, Exec::Parallel); });
    row.match = same_samples(rs, rp);
    rows.push_back(row);
  }
  {
    const ConvexPolytope ball = make_ball(1.0, ball_res);
    const auto dirs = fibonacci_sphere(dirs3d);
    std::vector<MetronoidSample3> rs, rp;
    Row row{"metronoid 3D ball-" + std::to_string(ball_res), 0, 0, false};
    row.serial_ms = time_ms([&] { rs = metronoid_boundary(ball, 0.5, dirs, kVolumeTol, Exec::Serial); });
    row.parallel_ms = time_ms([&] { rp = metronoid_boundary(ball, 0.5, dirs, kVolumeTol, Exec::Parallel); });
    row.match = same_samples(rs, rp);
    rows.push_back(row);

    UlamReport3 us, up;
    Row urow{"ulam 3D ball-" + std::to_string(ball_res), 0, 0, false};
    urow.serial_ms = time_ms([&] { us = ulam_report(ball, 0.5, dirs, 16, 1e-2, kVolumeTol, Exec::Serial); });
    urow.parallel_ms = time_ms([&] { up = ulam_report(ball, 0.5, dirs, 16, 1e-2, kVolumeTol, Exec::Parallel); });
    urow.match = us.stats.mean == up.stats.mean && us.stats.spread == up.stats.spread;
    rows.push_back(urow);

    Theorem2Report ts, tp;
    Row trow{"theorem2 ball-" + std::to_string(ball_res), 0, 0, false};
    trow.serial_ms = time_ms([&] { ts = theorem2_report(ball, dirs, 16, 5e-2, 512, Exec::Serial); });
    trow.parallel_ms = time_ms([&] { tp = theorem2_report(ball, dirs, 16, 5e-2, 512, Exec::Parallel); });
    trow.match = ts.mean == tp.mean && ts.max_identity_gap == tp.max_identity_gap;
    rows.push_back(trow);
  }

  print_rows(rows);
  return 0;
}
