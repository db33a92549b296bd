// Acceptance runner: one pass/fail line per criterion, exit 0 iff all pass.
//
//   acceptance [--golden-dir DIR] [--threads N]

#include "kummer/suites.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <thread>

using namespace kummer;

namespace {

int g_failures = 0;

void line(int criterion, bool ok, const std::string& what, double seconds) {
  if (!ok) ++g_failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", seconds);
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
            << " - " << what << " (" << buf << " s)" << std::endl;
}

template <typename F>
void run(int criterion, const std::string& what, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = f();
  } catch (const std::exception& e) {
    detail = std::string(" [exception: ") + e.what() + "]";
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           t0)
                 .count();
  line(criterion, ok, what + detail, s);
}

}  // namespace

int main(int argc, char** argv) {
  std::string golden_dir = "data/golden";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--golden-dir") && i + 1 < argc)
      golden_dir = argv[++i];
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
      threads = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--golden-dir DIR] [--threads N]\n";
      return 2;
    }
  }

  ClassificationReport report;
  run(1, "31 = 10 + 15 + 6 distinct patching subgroups", [&] {
    report = classify_all(threads);
    return report.certificate.ok && report.rows.size() == 31;
  });
  run(2, "rendered tables byte-identical to the golden files",
      [&] { return golden_check(report, golden_dir).ok; });
  run(3, "E7(2) certification of all 10 + 15 + 192 eigenlattices",
      [&] { return eigenlattice_check(threads).ok; });
  run(4, "orbit tables of u(2)^m + <1/4> for m = 1, 2, 3",
      [] { return orbit_tables_check().ok; });
  run(5, "|O(E7(2))| = 2903040 = order of its image in O(q) = |O(q)|",
      [] { return surjectivity_check().ok; });
  run(6, "order-4 subgroup census 10 / 15 / 6 and concrete bijection", [&] {
    return census_counts_check().ok && abstract_concrete_bijection(report).ok;
  });
  run(7, "counts 15 / 60 / 20 / 80 / 192, Weber shapes, Rosenhain pairs",
      [] { return combinatorics_check().ok; });
  run(8, "Weyl vector identities for all generators",
      [] { return weyl_identities().ok; });
  run(9, "cross-construction agreement for the base involutions",
      [] { return cross_construction_check().ok; });
  run(10, "discriminant form identifications",
      [] { return form_identifications_check().ok && ns_suite().ok; });

  return g_failures == 0 ? 0 : 1;
}
