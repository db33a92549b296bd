#include "kummer/classifier.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kummer {

namespace {

const char* kBasisNames[4] = {"e1", "f1", "e2", "f2"};

// order-4 generator with g-coordinate 1 (there is exactly one per cyclic
// subgroup: the two order-4 elements are x and -x with g-coordinates 1, 3)
FqElement cyclic_reporting_generator(const FqSubgroup& sub) {
  const FiniteQuadraticForm& f = ns_model().disc_form;
  std::vector<FqElement> hits;
  for (const FqElement& x : sub.elements)
    if (f.element_order(x) == 4 && x.c[4] == 1) hits.push_back(x);
  if (hits.size() != 1)
    throw std::logic_error("cyclic subgroup without a unique g-normalized generator");
  return hits[0];
}

PatchingSubgroup finish(const std::vector<FqElement>& members,
                        const std::optional<FqElement>& two_elementary_gen,
                        std::string provenance) {
  const FiniteQuadraticForm& f = ns_model().disc_form;
  FqSubgroup sub = subgroup_generated(f, members);
  if (sub.elements.size() != 4)
    throw std::logic_error("patching subgroup of " + provenance +
                           " has order " + std::to_string(sub.elements.size()));
  PatchingSubgroup p;
  p.subgroup = std::move(sub);
  p.provenance = std::move(provenance);
  p.cyclic = false;
  for (const FqElement& x : p.subgroup.elements)
    if (f.element_order(x) == 4) p.cyclic = true;
  if (p.cyclic) {
    p.generator = cyclic_reporting_generator(p.subgroup);
    Rational qg = f.q(p.generator);
    if (qg != Rational(1, 4) && qg != Rational(5, 4))
      throw std::logic_error("cyclic patching generator square out of range");
  } else {
    FqElement dist = distinguished_element(f);
    if (std::find(p.subgroup.elements.begin(), p.subgroup.elements.end(),
                  dist) == p.subgroup.elements.end())
      throw std::logic_error("2-elementary patching subgroup misses [H/2]");
    p.generator = two_elementary_gen ? *two_elementary_gen
                                     : p.subgroup.elements[1];  // after zero
  }
  return p;
}

}  // namespace

PatchingSubgroup patching_subgroup(const NsIsometry& s, bool brute_force) {
  const NsModel& m = ns_model();
  Sublattice k = minus_one_eigenlattice(s);
  if (k.rank() != 7)
    throw std::invalid_argument("patching_subgroup: eigenlattice rank " +
                                std::to_string(k.rank()));
  std::vector<FqElement> members;
  if (!brute_force) {
    Sublattice kdual = dual_basis(k);
    QMat rows(m.lattice.rank() + kdual.rank(), kNsDim);
    rows.topRows(m.lattice.rank()) = m.lattice.basis();
    rows.bottomRows(kdual.rank()) = kdual.basis();
    Sublattice sum(m.ambient, rows);
    for (const FqElement& x : m.disc_form.elements())
      if (sum.contains(disc_rep(x))) members.push_back(x);
  } else {
    DiscriminantGroup dg = discriminant_group(k);
    std::vector<QVec> reps;
    std::vector<long> idx(dg.invariant_factors.size(), 0);
    for (;;) {
      QVec y = QVec::Zero(kNsDim);
      for (size_t i = 0; i < idx.size(); ++i)
        y += Rational(idx[i]) * dg.generator_reps.row(static_cast<int>(i)).transpose();
      reps.push_back(y);
      size_t at = 0;
      while (at < idx.size() &&
             ++idx[at] == static_cast<long>(dg.invariant_factors[at]))
        idx[at++] = 0;
      if (at == idx.size()) break;
    }
    for (const FqElement& x : m.disc_form.elements()) {
      QVec xv = disc_rep(x);
      for (const QVec& y : reps)
        if (m.lattice.contains(xv - y)) {
          members.push_back(x);
          break;
        }
    }
  }
  return finish(members, std::nullopt, s.provenance);
}

PatchingSubgroup switch_patching(const HalfSet& beta) {
  if (beta.is_even() || beta.size() != 3)
    throw std::invalid_argument("switch_patching: even theta characteristic required");
  auto [r1, r2] = rosenhain_pair(beta);
  QVec x = hyperplane_vector() / 4;
  for (const HalfSet& a : r1) x += node_vector(a) / 2;
  FqElement gen = disc_class(x);
  return finish({gen}, std::nullopt, "switch " + beta.str());
}

PatchingSubgroup hg_patching(const HalfSetList& tetrad) {
  const auto& all = gopel_tetrads();
  HalfSetList key = tetrad;
  std::sort(key.begin(), key.end());
  if (std::find(all.begin(), all.end(), key) == all.end())
    throw std::invalid_argument("hg_patching: not a Gopel tetrad");
  QVec x = QVec::Zero(kNsDim);
  for (const HalfSet& a : key) x += node_vector(a) / 2;
  FqElement gen = disc_class(x);
  FqElement half_h = disc_class(hyperplane_vector() / 2);
  return finish({gen, half_h}, gen, "gopel " + datum_string(key));
}

PatchingSubgroup hw_patching(const HalfSetList& hexad) {
  HalfSetList key = hexad;
  std::sort(key.begin(), key.end());
  if (!is_weber_hexad(key))
    throw std::invalid_argument("hw_patching: not a Weber hexad");
  QVec x = 3 * hyperplane_vector() / 4;
  for (const HalfSet& a : key) x += node_vector(a) / 2;
  FqElement gen = disc_class(x);
  return finish({gen}, std::nullopt, "weber " + datum_string(key));
}

std::string generator_expression(const FqElement& x) {
  std::vector<std::string> terms;
  for (int i = 0; i < 4; ++i)
    if (x.c[static_cast<size_t>(i)]) terms.push_back(kBasisNames[i]);
  switch (x.c[4]) {
    case 1: terms.push_back("g"); break;
    case 2: terms.push_back("2g"); break;
    case 3: terms.push_back("3g"); break;
    default: break;
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) out += "+" + terms[i];
  return out;
}

std::string datum_string(const HalfSetList& datum) {
  std::string out;
  for (const HalfSet& a : datum) {
    if (!out.empty()) out += "+";
    out += a.str();
  }
  return out;
}

const std::vector<HalfSetList>& weber_table_hexads() {
  static const std::vector<HalfSetList> rows = [] {
    auto parse = [](std::initializer_list<const char*> names) {
      HalfSetList w;
      for (const char* n : names) w.push_back(HalfSet::parse(n));
      std::sort(w.begin(), w.end());
      return w;
    };
    return std::vector<HalfSetList>{
        parse({"[12]", "[23]", "[13]", "[14]", "[25]", "[36]"}),
        parse({"[12]", "[13]", "[23]", "[24]", "[15]", "[36]"}),
        parse({"[23]", "[13]", "[12]", "[34]", "[25]", "[16]"}),
        parse({"[24]", "[23]", "[34]", "[14]", "[25]", "[36]"}),
        parse({"[25]", "[23]", "[35]", "[45]", "[12]", "[36]"}),
        parse({"[26]", "[23]", "[36]", "[46]", "[25]", "[13]"})};
  }();
  return rows;
}

namespace {

// the linear part of a tetrad: translate it to contain [0]
HalfSetList tetrad_subgroup(const HalfSetList& t) {
  HalfSetList v;
  for (const HalfSet& a : t) v.push_back(sym_diff(a, t[0]));
  std::sort(v.begin(), v.end());
  return v;
}

using SubgroupKey = std::vector<FqElement>;

}  // namespace

ClassificationReport classify_all(int threads) {
  const NsModel& m = ns_model();
  m.disc_form.elements();
  hg_action(gopel_tetrads()[0]);
  hw_action(weber_hexads()[0]);

  struct Job {
    std::string family;
    HalfSetList datum;
    const NsIsometry* action;
  };
  std::vector<Job> jobs;
  for (const HalfSet& b : all_odd())
    if (b.size() == 3) jobs.push_back({"switch", {b}, nullptr});
  for (const HalfSetList& t : gopel_tetrads())
    jobs.push_back({"gopel", t, &hg_action(t)});
  for (const HalfSetList& w : weber_hexads())
    jobs.push_back({"weber", w, &hw_action(w)});

  std::vector<PatchingSubgroup> computed(jobs.size());
  std::vector<PatchingSubgroup> closed(jobs.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      try {
        const Job& j = jobs[i];
        if (j.family == "switch") {
          computed[i] = patching_subgroup(switch_action(j.datum[0]));
          closed[i] = switch_patching(j.datum[0]);
        } else if (j.family == "gopel") {
          computed[i] = patching_subgroup(*j.action);
          closed[i] = hg_patching(j.datum);
        } else {
          computed[i] = patching_subgroup(*j.action);
          closed[i] = hw_patching(j.datum);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  int n = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int i = 0; i < n - 1; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);

  ClassificationReport r;
  CheckReport& cert = r.certificate;

  bool closed_agrees = true;
  for (size_t i = 0; i < jobs.size(); ++i)
    closed_agrees =
        closed_agrees && computed[i].subgroup == closed[i].subgroup;
  cert.add(closed_agrees,
           "closed-form generators match the eigenlattice computation on all "
           "10 + 60 + 192 data");

  std::set<SubgroupKey> switch_set, gopel_set, weber_set;
  std::map<HalfSetList, std::set<SubgroupKey>> by_gopel_subgroup;
  std::map<HalfSetList, PatchingSubgroup> gopel_patch;
  std::map<HalfSetList, PatchingSubgroup> hexad_patch;
  for (size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    if (j.family == "switch") {
      switch_set.insert(computed[i].subgroup.elements);
    } else if (j.family == "gopel") {
      gopel_set.insert(computed[i].subgroup.elements);
      by_gopel_subgroup[tetrad_subgroup(j.datum)].insert(
          computed[i].subgroup.elements);
      gopel_patch.emplace(j.datum, closed[i]);
    } else {
      weber_set.insert(computed[i].subgroup.elements);
      hexad_patch.emplace(j.datum, closed[i]);
    }
  }
  cert.add(switch_set.size() == 10, "10 distinct switch subgroups");
  cert.add(gopel_set.size() == 15,
           "60 Gopel tetrads collapse to 15 subgroups");
  bool gopel_const = by_gopel_subgroup.size() == 15;
  for (const auto& [sub, vals] : by_gopel_subgroup)
    gopel_const = gopel_const && vals.size() == 1;
  cert.add(gopel_const, "constant on the 15 translation orbits of tetrads");
  cert.add(weber_set.size() == 6, "192 Weber hexads collapse to 6 subgroups");

  bool class_const = true;
  std::set<SubgroupKey> class_reps;
  for (const auto& cls : weber_classes()) {
    std::set<SubgroupKey> vals;
    for (const HalfSetList& w : cls) vals.insert(hexad_patch.at(w).subgroup.elements);
    class_const = class_const && vals.size() == 1;
    class_reps.insert(*vals.begin());
  }
  cert.add(class_const && class_reps.size() == 6,
           "constant on the 6 Weber classes of 32");

  std::set<SubgroupKey> all31 = switch_set;
  all31.insert(gopel_set.begin(), gopel_set.end());
  all31.insert(weber_set.begin(), weber_set.end());
  cert.add(all31.size() == 31, "31 = 10 + 15 + 6 distinct subgroups");

  for (const HalfSet& b : all_odd())
    if (b.size() == 3) r.rows.push_back({"switch", {b}, switch_patching(b)});
  std::vector<HalfSetList> gsubs = gopel_subgroups();
  std::sort(gsubs.begin(), gsubs.end());
  for (const HalfSetList& g : gsubs)
    r.rows.push_back({"gopel", g, gopel_patch.at(g)});
  std::map<HalfSetList, const std::vector<HalfSetList>*> class_of;
  for (const auto& cls : weber_classes())
    for (const HalfSetList& w : cls) class_of.emplace(w, &cls);
  std::set<const std::vector<HalfSetList>*> seen;
  for (const HalfSetList& w : weber_table_hexads()) {
    seen.insert(class_of.at(w));
    r.rows.push_back({"weber", w, hexad_patch.at(w)});
  }
  cert.add(seen.size() == 6,
           "the 6 published hexads represent the 6 Weber classes");
  return r;
}

CheckReport abstract_concrete_bijection(const ClassificationReport& r) {
  const FiniteQuadraticForm& f = ns_model().disc_form;
  CheckReport out;
  std::set<SubgroupKey> sw, hg, hw;
  for (const ClassificationRow& row : r.rows) {
    if (row.family == "switch") sw.insert(row.patching.subgroup.elements);
    if (row.family == "gopel") hg.insert(row.patching.subgroup.elements);
    if (row.family == "weber") hw.insert(row.patching.subgroup.elements);
  }
  auto as_set = [](const std::vector<FqSubgroup>& v) {
    std::set<SubgroupKey> s;
    for (const FqSubgroup& g : v) s.insert(g.elements);
    return s;
  };
  std::set<SubgroupKey> cyc_quarter =
      as_set(subgroups_order4(f, CyclicWithGeneratorSquare{Rational(1, 4)}));
  std::set<SubgroupKey> cyc_neg =
      as_set(subgroups_order4(f, CyclicWithGeneratorSquare{Rational(-3, 4)}));
  std::set<SubgroupKey> elem = as_set(
      subgroups_order4(f, TwoElementaryContaining{distinguished_element(f)}));
  out.add(cyc_quarter.size() == 10 && sw == cyc_quarter,
          "switch family = all 10 cyclic subgroups with q(gen) = 1/4");
  out.add(elem.size() == 15 && hg == elem,
          "Gopel family = all 15 2-elementary subgroups containing [H/2]");
  out.add(cyc_neg.size() == 6 && hw == cyc_neg,
          "Weber family = all 6 cyclic subgroups with q(gen) = -3/4");
  return out;
}

namespace {

const char* datum_header(const std::string& family) {
  if (family == "switch") return "beta";
  if (family == "gopel") return "tetrad";
  return "hexad";
}

}  // namespace

std::string render_table_markdown(const ClassificationReport& r,
                                  const std::string& family) {
  std::ostringstream out;
  out << "| " << datum_header(family) << " | generator |\n|---|---|\n";
  for (const ClassificationRow& row : r.rows)
    if (row.family == family)
      out << "| " << datum_string(row.datum) << " | "
          << generator_expression(row.patching.generator) << " |\n";
  return out.str();
}

std::string render_markdown(const ClassificationReport& r) {
  std::ostringstream out;
  out << "## Switches\n\n" << render_table_markdown(r, "switch");
  out << "\n## Gopel family\n\n" << render_table_markdown(r, "gopel");
  out << "\n## Weber family\n\n" << render_table_markdown(r, "weber");
  return out.str();
}

std::string render_csv(const ClassificationReport& r) {
  std::ostringstream out;
  out << "family,datum,generator\n";
  for (const ClassificationRow& row : r.rows)
    out << row.family << "," << datum_string(row.datum) << ","
        << generator_expression(row.patching.generator) << "\n";
  return out.str();
}

std::string render_json(const ClassificationReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ClassificationRow& row : r.rows) {
    nlohmann::json j;
    j["family"] = row.family;
    nlohmann::json datum = nlohmann::json::array();
    for (const HalfSet& a : row.datum) datum.push_back(a.str());
    j["datum"] = datum;
    j["generator"] = row.patching.generator.c;
    nlohmann::json elems = nlohmann::json::array();
    for (const FqElement& x : row.patching.subgroup.elements)
      elems.push_back(x.c);
    j["subgroupElements"] = elems;
    rows.push_back(j);
  }
  return rows.dump(2) + "\n";
}

}  // namespace kummer
