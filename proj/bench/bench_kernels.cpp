// Copyright 2026 The skewroot authors
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
//
// Timing comparison of the OpenMP kernels against the serial reference
// implementations, on the built-in family fixtures. Every timed pair is
// also checked for exact agreement; a disagreement aborts with exit 1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skewroot/families.hpp"
#include "skewroot/galgebra.hpp"

using namespace skw;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return ms_since(t0);
}

void require(bool ok, const char* what, const std::string& fixture) {
  if (!ok) {
    std::fprintf(stderr, "MISMATCH: %s on %s\n", what, fixture.c_str());
    std::exit(1);
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("%-24s %6s  %12s %12s  %s\n", "fixture", "dim", "parallel/ms", "serial/ms",
              "kernel");

  const std::vector<std::string> lie = {"nonsingular:4:lie", "nonsingular:2,2:lie",
                                        "clifford:6:lie",    "quad:h:2:lie",
                                        "clifford:7:lie",    "quad:h:3:lie"};
  for (const std::string& name : lie) {
    const FamilySystem fs = family_by_name(name);
    const GradedAlgebra a = GradedAlgebra::build(fs.system, fs.xi);

    CycloMatrix kp(1, 1, 1), ks(1, 1, 1);
    const double tp = timed([&] { kp = killing_form(a); });
    const double ts = timed([&] { ks = serial::killing_form(a); });
    require(kp == ks, "killing form", name);
    std::printf("%-24s %6ld  %12.2f %12.2f  killing form\n", name.c_str(), a.dim(), tp, ts);

    if (a.dim() <= 24) {  // the serial expansion is quintic, keep it honest but bounded
      bool jp = false, js = false;
      const double tjp = timed([&] { jp = jacobi_holds(a); });
      const double tjs = timed([&] { js = serial::jacobi_holds(a); });
      require(jp == js && jp, "jacobi sweep", name);
      std::printf("%-24s %6ld  %12.2f %12.2f  jacobi sweep\n", name.c_str(), a.dim(), tjp,
                  tjs);
    }

    CycloNum dp = CycloNum::zero(), ds = CycloNum::zero();
    const double tdp = timed([&] { dp = mat_det(kp); });
    const double tds = timed([&] { ds = serial::mat_det(kp); });
    require(dp == ds, "determinant", name);
    std::printf("%-24s %6ld  %12.2f %12.2f  killing det\n", name.c_str(), a.dim(), tdp, tds);
  }

  const std::vector<std::string> jordan = {"nonsingular:2,2:jordan", "quad:h:2:jordan",
                                           "clifford:7:jordan", "quad:f0:3:jordan"};
  for (const std::string& name : jordan) {
    const FamilySystem fs = family_by_name(name);
    const GradedAlgebra a = GradedAlgebra::build(fs.system, fs.xi);

    CycloMatrix tp_m(1, 1, 1), ts_m(1, 1, 1);
    const double tp = timed([&] { tp_m = trace_form(a); });
    const double ts = timed([&] { ts_m = serial::trace_form(a); });
    require(tp_m == ts_m, "trace form", name);
    std::printf("%-24s %6ld  %12.2f %12.2f  trace form\n", name.c_str(), a.dim(), tp, ts);

    bool jp = false, js = false;
    const double tjp = timed([&] { jp = jordan_identity_holds(a); });
    const double tjs = timed([&] { js = serial::jordan_identity_holds(a); });
    require(jp == js && jp, "jordan identity sweep", name);
    std::printf("%-24s %6ld  %12.2f %12.2f  jordan identity\n", name.c_str(), a.dim(), tjp,
                tjs);
  }

  std::printf("all kernels agree\n");
  return 0;
}
