#include "kummer/suites.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace kummer {

CheckReport ns_suite() {
  CheckReport r;
  try {
    std::vector<std::string> log = verify_disc_basis();
    r.add(log.size() > 70, "discriminant basis identities (" +
                               std::to_string(log.size()) + " facts)");
  } catch (const std::exception& e) {
    r.add(false, std::string("discriminant basis: ") + e.what());
  }
  GenusReport genus = reconcile_abstract_model();
  for (const std::string& line : genus.checks) r.checks.push_back(line);
  r.ok = r.ok && genus.ok;
  return r;
}

CheckReport form_identifications_check() {
  const NsModel& m = ns_model();
  CheckReport r;
  r.add(forms_isometric(m.disc_form, u2_pow_plus_quarter(2)).has_value(),
        "A_NS isometric to u(2)^2 + <1/4>");
  r.add(distinguished_element(m.disc_form) ==
            disc_class(hyperplane_vector() / 2),
        "[H/2] is the distinguished orbit-length-1 class");
  Sublattice t(make_ambient(gram_t()), QMat::Identity(5, 5));
  r.add(forms_isometric(negated(m.disc_form), from_lattice(t).form).has_value(),
        "-q_NS isometric to the discriminant form of U(2)^2 + <-4>");
  return r;
}

CheckReport orbit_tables_check() {
  CheckReport r;
  for (int m = 1; m <= 3; ++m) {
    long s = 1L << m, s2 = 1L << (2 * m);
    std::vector<std::pair<long, Rational>> expect = {
        {1, Rational(0)},          {1, Rational(1)},
        {s2 - 1, Rational(0)},     {s2 - 1, Rational(1)},
        {s2 + s, Rational(1, 4)},  {s2 - s, Rational(5, 4)}};
    std::sort(expect.begin(), expect.end());
    std::vector<std::pair<long, Rational>> got;
    for (const Orbit& o : orbits(u2_pow_plus_quarter(m)))
      got.push_back({o.length, o.square});
    std::sort(got.begin(), got.end());
    r.add(got == expect, "orbit table of u(2)^" + std::to_string(m) +
                             " + <1/4>: 6 orbits with the stated lengths and "
                             "squares");
  }
  return r;
}

CheckReport census_counts_check() {
  const FiniteQuadraticForm& f = ns_model().disc_form;
  CheckReport r;
  r.add(subgroups_order4(f, CyclicWithGeneratorSquare{Rational(1, 4)}).size() ==
            10,
        "10 cyclic order-4 subgroups with q(gen) = 1/4");
  r.add(subgroups_order4(f, TwoElementaryContaining{distinguished_element(f)})
                .size() == 15,
        "15 2-elementary order-4 subgroups containing [H/2]");
  r.add(subgroups_order4(f, CyclicWithGeneratorSquare{Rational(-3, 4)})
                .size() == 6,
        "6 cyclic order-4 subgroups with q(gen) = -3/4");
  return r;
}

CheckReport combinatorics_check() {
  CheckReport r;
  r.add(gopel_subgroups().size() == 15, "15 Gopel subgroups");
  r.add(gopel_tetrads().size() == 60, "60 Gopel tetrads");
  r.add(rosenhain_subgroups().size() == 20, "20 Rosenhain subgroups");
  r.add(rosenhain_tetrads().size() == 80, "80 Rosenhain tetrads");
  r.add(weber_hexads().size() == 192, "192 Weber hexads");

  int with_zero = 0;
  bool shapes_ok = true;
  for (const HalfSetList& w : weber_hexads()) {
    WeberShapeWitness s = weber_shape(w);
    if (s.shape == WeberShape::kWithZero) ++with_zero;
    shapes_ok = shapes_ok && hexad_from_shape(s) == w;
  }
  r.add(shapes_ok && with_zero == 72,
        "every hexad matches one of the two shapes (72 with [0], 120 "
        "without)");

  bool pairs_ok = true;
  for (const HalfSet& b : all_odd()) {
    if (b.size() != 3) continue;
    auto [r1, r2] = rosenhain_pair(b);
    HalfSetList diff = set_sym_diff(r1, r2);
    HalfSetList lam = lambda_of(b);
    std::sort(lam.begin(), lam.end());
    pairs_ok = pairs_ok && diff == lam;
  }
  r.add(pairs_ok, "each even theta characteristic has its unique Rosenhain "
                  "pair");
  return r;
}

CheckReport eigenlattice_check(int threads) {
  std::vector<std::pair<std::string, const NsIsometry*>> jobs;
  std::vector<NsIsometry> switches;
  for (const HalfSet& b : all_odd())
    if (b.size() == 3) switches.push_back(switch_action(b));
  for (const NsIsometry& s : switches) jobs.push_back({s.provenance, &s});
  for (const HalfSetList& g : gopel_subgroups())
    jobs.push_back({"gopel " + datum_string(g), &hg_action(g)});
  for (const HalfSetList& w : weber_hexads())
    jobs.push_back({"weber " + datum_string(w), &hw_action(w)});

  std::vector<std::string> failures;
  std::mutex failures_mutex;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      CheckReport one = free_necessary_check(minus_one_eigenlattice(*jobs[i].second));
      if (!one.ok) {
        std::lock_guard<std::mutex> lock(failures_mutex);
        failures.push_back(jobs[i].first);
      }
    }
  };
  int n = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int i = 0; i < n - 1; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  CheckReport r;
  std::string what =
      "all " + std::to_string(jobs.size()) +
      " (10 + 15 + 192) eigenlattices certified E7(2): no -2 vectors, 126 "
      "of norm -4, explicit witness";
  if (!failures.empty()) what += " (first failure: " + failures[0] + ")";
  r.add(failures.empty(), what);
  return r;
}

CheckReport cross_construction_check() {
  CheckReport r;
  const NsIsometry& w_transported = hw_action(hw_base_hexad());
  NsIsometry w_eigen = involution_from_eigenspace(hw_base_eigenlattice(), "k");
  NsIsometry w_closed = hw_closed_form(hw_base_hexad());
  r.add(w_transported.m == w_eigen.m && w_transported.m == w_closed.m,
        "base Weber involution: transport, eigenspace and closed form give "
        "one matrix");

  bool pairs_ok = true;
  WeberMaps maps = weber_maps(hw_base_hexad());
  for (const auto& [alpha, beta] : maps.mu_prime) {
    QVec node = node_vector(alpha), trope = trope_vector(beta);
    pairs_ok = pairs_ok && apply(w_transported, node) == trope &&
               apply(w_transported, trope) == node;
  }
  r.add(pairs_ok, "base Weber involution interchanges the 10 published "
                  "node/trope pairs");

  const NsIsometry& g = hg_action(hg_base_tetrad());
  auto tv = [](const char* n) { return trope_vector(HalfSet::parse(n)); };
  bool tropes_ok = apply(g, tv("[1]")) == tv("[2]") &&
                   apply(g, tv("[3]")) == tv("[4]") &&
                   apply(g, tv("[5]")) == tv("[6]") &&
                   apply(g, tv("[134]")) == trope_vector(HalfSet{2, 3, 4}) &&
                   apply(g, tv("[123]")) == tv("[124]") &&
                   apply(g, tv("[125]")) == tv("[126]");
  QVec cross = hyperplane_vector();
  for (const HalfSet& a : hg_base_tetrad()) cross -= node_vector(a);
  bool nodes_ok = true;
  for (const HalfSet& a : hg_base_tetrad())
    nodes_ok = nodes_ok && apply(g, node_vector(a)) == cross + node_vector(a);
  r.add(tropes_ok && nodes_ok,
        "base Gopel involution reproduces its published action list");
  return r;
}

CheckReport golden_check(const ClassificationReport& r,
                         const std::string& golden_dir) {
  CheckReport out;
  const std::pair<const char*, const char*> files[3] = {
      {"switch", "switch_table.md"},
      {"gopel", "gopel_table.md"},
      {"weber", "weber_table.md"}};
  for (const auto& [family, name] : files) {
    std::ifstream in(golden_dir + "/" + name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    bool ok = in.good() || in.eof();
    out.add(ok && buf.str() == render_table_markdown(r, family),
            std::string(name) + " byte-identical to the rendered table");
  }
  return out;
}

}  // namespace kummer
