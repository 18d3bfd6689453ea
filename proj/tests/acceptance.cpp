// One line per acceptance criterion. Exit status is nonzero when any criterion fails.
// Pass -v to list every failing check under its criterion.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "mjlab/verify.hpp"

using namespace mjlab;

namespace {

struct Criterion {
  int id;
  const char* name;
  std::vector<const char*> suites;
  double max_tol;      // no decisive check may use a looser tolerance
  double max_seconds;  // 0: no runtime bound
};

const std::vector<Criterion> kCriteria = {
    {1, "covariance of raise/lower and xi operators", {"covariance"}, 1e-8, 60},
    {2, "kernel functions lie in the Casimir and LaplaceH kernels", {"kernels"}, 1e-7, 30},
    {3, "xi-image table", {"xi-images"}, 1e-7, 60},
    {4, "Weil representation", {"weil"}, 1e-8, 0},
    {5, "mu-hat transformation, xi^H and Laplace identities", {"mu-transform", "mu-xi-theta"}, 1e-6, 0},
    {6, "factorizations", {"factorizations"}, 1e-6, 0},
    {7, "decomposition round trip", {"decomposition-roundtrip"}, 1e-9, 0},
    {8, "numerics hygiene", {"hygiene"}, 1e-6, 0},
};

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  int failed_criteria = 0;
  std::vector<std::string> details;
  for (const auto& c : kCriteria) {
    int decisive = 0, failed = 0, loose = 0;
    double worst = 0.0, seconds = 0.0;
    std::string error;
    for (const char* suite : c.suites) {
      try {
        SuiteReport rep = run_suite(suite);
        seconds += rep.seconds;
        for (const auto& chk : rep.checks) {
          if (chk.informational) continue;
          ++decisive;
          if (chk.tol > c.max_tol) ++loose;
          if (!chk.passed()) {
            ++failed;
            details.push_back("  [" + std::to_string(c.id) + "] " + chk.identity + "  residual " +
                              std::to_string(chk.max_residual) + (chk.note.empty() ? "" : "  (" + chk.note + ")"));
          }
          if (chk.max_residual > worst) worst = chk.max_residual;
        }
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
    const bool slow = c.max_seconds > 0 && seconds > c.max_seconds;
    const bool ok = error.empty() && decisive > 0 && failed == 0 && loose == 0 && !slow;
    if (!ok) ++failed_criteria;
    std::printf("criterion %d %-58s %s  checks %d/%d  worst %.3g  tol <= %.0e  %.2fs%s%s\n", c.id, c.name,
                ok ? "PASS" : "FAIL", decisive - failed, decisive, worst, c.max_tol, seconds,
                slow ? "  over time limit" : "", error.empty() ? "" : ("  error: " + error).c_str());
    if (loose > 0) std::printf("  %d checks use a tolerance looser than %.0e\n", loose, c.max_tol);
  }
  if (verbose)
    for (const auto& d : details) std::printf("%s\n", d.c_str());
  std::printf("%d of %zu criteria pass\n", int(kCriteria.size()) - failed_criteria, kCriteria.size());
  return failed_criteria == 0 ? 0 : 1;
}
