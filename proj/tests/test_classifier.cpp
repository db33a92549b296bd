#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummer/classifier.hpp"

#include <algorithm>
#include <string>

using namespace kummer;

namespace {

HalfSet hs(const std::string& s) { return HalfSet::parse(s); }

const ClassificationReport& report() {
  static const ClassificationReport r = classify_all(4);
  return r;
}

// row data of the three published tables, generators normalized to the
// e1, f1, e2, f2, g term order
const char* kSwitchTable[10][2] = {
    {"[123]", "e1+f2+g"},      {"[124]", "f1+e2+g"},
    {"[125]", "e1+f1+e2+f2+g"}, {"[126]", "g"},
    {"[134]", "f1+f2+g"},      {"[135]", "f1+g"},
    {"[136]", "e1+g"},         {"[145]", "f2+g"},
    {"[146]", "e2+g"},         {"[156]", "e1+e2+g"}};

const char* kGopelTable[15][2] = {
    {"[0]+[12]+[34]+[56]", "e1+f1+e2+f2"},
    {"[0]+[12]+[35]+[46]", "f1+e2"},
    {"[0]+[12]+[36]+[45]", "e1+f2"},
    {"[0]+[13]+[24]+[56]", "e1+f1+2g"},
    {"[0]+[13]+[25]+[46]", "e1+f1+f2+2g"},
    {"[0]+[13]+[26]+[45]", "f2"},
    {"[0]+[14]+[23]+[56]", "e2+f2+2g"},
    {"[0]+[14]+[25]+[36]", "f1+e2+f2+2g"},
    {"[0]+[14]+[26]+[35]", "f1"},
    {"[0]+[15]+[23]+[46]", "e1+e2+f2+2g"},
    {"[0]+[15]+[24]+[36]", "e1+f1+e2+2g"},
    {"[0]+[15]+[26]+[34]", "f1+f2"},
    {"[0]+[16]+[23]+[45]", "e1"},
    {"[0]+[16]+[24]+[35]", "e2"},
    {"[0]+[16]+[25]+[34]", "e1+e2"}};

const char* kWeberTable[6][2] = {
    {"[12]+[13]+[14]+[23]+[25]+[36]", "e1+f1+e2+g"},
    {"[12]+[13]+[15]+[23]+[24]+[36]", "f1+e2+f2+g"},
    {"[12]+[13]+[16]+[23]+[25]+[34]", "e2+f2+g"},
    {"[14]+[23]+[24]+[25]+[34]+[36]", "e1+f1+f2+g"},
    {"[12]+[23]+[25]+[35]+[36]+[45]", "e1+e2+f2+g"},
    {"[13]+[23]+[25]+[26]+[36]+[46]", "e1+f1+g"}};

}  // namespace

TEST_CASE("base switch: generator, brute force agreement") {
  PatchingSubgroup p = patching_subgroup(switch_action(hs("[123]")));
  CHECK(p.cyclic);
  CHECK(generator_expression(p.generator) == "e1+f2+g");
  CHECK(ns_model().disc_form.q(p.generator) == Rational(1, 4));

  PatchingSubgroup brute =
      patching_subgroup(switch_action(hs("[123]")), /*brute_force=*/true);
  CHECK(brute.subgroup == p.subgroup);
  CHECK(switch_patching(hs("[123]")).subgroup == p.subgroup);

  // H/4 + (N0+N12+N23+N31)/2 generates
  QVec x = hyperplane_vector() / 4;
  for (const char* n : {"[0]", "[12]", "[23]", "[13]"})
    x += node_vector(hs(n)) / 2;
  CHECK(disc_class(x) == p.generator);
}

TEST_CASE("base Gopel datum: 2-elementary with [H/2]") {
  HalfSetList g0{hs("[0]"), hs("[12]"), hs("[34]"), hs("[56]")};
  PatchingSubgroup p = patching_subgroup(hg_action(g0));
  CHECK_FALSE(p.cyclic);
  for (const FqElement& x : p.subgroup.elements)
    CHECK(ns_model().disc_form.element_order(x) <= 2);
  FqElement half_h = disc_class(hyperplane_vector() / 2);
  CHECK(std::count(p.subgroup.elements.begin(), p.subgroup.elements.end(),
                   half_h) == 1);

  PatchingSubgroup cf = hg_patching(g0);
  CHECK(cf.subgroup == p.subgroup);
  CHECK(generator_expression(cf.generator) == "e1+f1+e2+f2");
  CHECK(patching_subgroup(hg_action(g0), true).subgroup == p.subgroup);
}

TEST_CASE("base Weber datum: cyclic with q = -3/4") {
  const HalfSetList& w0 = hw_base_hexad();
  PatchingSubgroup p = patching_subgroup(hw_action(w0));
  CHECK(p.cyclic);
  CHECK(generator_expression(p.generator) == "e1+f1+e2+g");
  CHECK(ns_model().disc_form.q(p.generator) == Rational(5, 4));  // -3/4 mod 2

  PatchingSubgroup cf = hw_patching(w0);
  CHECK(cf.subgroup == p.subgroup);
  CHECK(patching_subgroup(hw_action(w0), true).subgroup == p.subgroup);

  // the closed-form vector (3/4)H + (1/2) sum_W N generates the subgroup
  QVec x = 3 * hyperplane_vector() / 4;
  for (const HalfSet& a : w0) x += node_vector(a) / 2;
  FqElement gen = disc_class(x);
  CHECK(subgroup_generated(ns_model().disc_form, {gen}) == p.subgroup);
}

TEST_CASE("patching is invariant under translation conjugation (sample)") {
  NsIsometry s = switch_action(hs("[123]"));
  PatchingSubgroup base = patching_subgroup(s);
  for (const char* n : {"[12]", "[36]", "[56]"}) {
    NsIsometry t = translation_action(hs(n));
    NsIsometry conj = make_isometry(QMat(t.m * s.m * t.m), "conj", true);
    CHECK(patching_subgroup(conj).subgroup == base.subgroup);
  }
}

TEST_CASE("invalid data are rejected") {
  CHECK_THROWS_AS(switch_patching(hs("[1]")), std::invalid_argument);
  CHECK_THROWS_AS(switch_patching(hs("[12]")), std::invalid_argument);
  HalfSetList rosenhain{hs("[0]"), hs("[12]"), hs("[23]"), hs("[13]")};
  CHECK_THROWS_AS(hg_patching(rosenhain), std::invalid_argument);
  HalfSetList not_hexad{hs("[0]"),  hs("[12]"), hs("[13]"),
                        hs("[14]"), hs("[15]"), hs("[16]")};
  CHECK_THROWS_AS(hw_patching(not_hexad), std::invalid_argument);
  // a translation has no rank-7 eigenlattice
  CHECK_THROWS_AS(patching_subgroup(translation_action(hs("[12]"))),
                  std::invalid_argument);
}

TEST_CASE("full classification: 31 = 10 + 15 + 6 with certificate") {
  const ClassificationReport& r = report();
  CHECK(r.rows.size() == 31);
  CHECK(r.certificate.ok);
  for (const std::string& line : r.certificate.checks)
    CHECK(line.substr(0, 3) == "ok:");
}

TEST_CASE("switch table rows") {
  const ClassificationReport& r = report();
  int at = 0;
  for (const ClassificationRow& row : r.rows) {
    if (row.family != "switch") continue;
    REQUIRE(at < 10);
    CHECK(datum_string(row.datum) == kSwitchTable[at][0]);
    CHECK(generator_expression(row.patching.generator) == kSwitchTable[at][1]);
    ++at;
  }
  CHECK(at == 10);
}

TEST_CASE("Gopel table rows") {
  const ClassificationReport& r = report();
  int at = 0;
  for (const ClassificationRow& row : r.rows) {
    if (row.family != "gopel") continue;
    REQUIRE(at < 15);
    CHECK(datum_string(row.datum) == kGopelTable[at][0]);
    CHECK(generator_expression(row.patching.generator) == kGopelTable[at][1]);
    ++at;
  }
  CHECK(at == 15);
}

TEST_CASE("Weber table rows") {
  const ClassificationReport& r = report();
  int at = 0;
  for (const ClassificationRow& row : r.rows) {
    if (row.family != "weber") continue;
    REQUIRE(at < 6);
    CHECK(datum_string(row.datum) == kWeberTable[at][0]);
    CHECK(generator_expression(row.patching.generator) == kWeberTable[at][1]);
    ++at;
  }
  CHECK(at == 6);
}

TEST_CASE("abstract subgroup census matches the concrete families") {
  CheckReport b = abstract_concrete_bijection(report());
  CHECK(b.ok);
  for (const std::string& line : b.checks)
    CHECK(line.substr(0, 3) == "ok:");
}

TEST_CASE("renderers are deterministic and well formed") {
  const ClassificationReport& r = report();
  std::string md = render_table_markdown(r, "switch");
  CHECK(md.find("| [126] | g |") != std::string::npos);
  CHECK(md == render_table_markdown(r, "switch"));

  std::string csv = render_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 32);  // header + 31
  CHECK(csv.find("gopel,[0]+[16]+[24]+[35],e2") != std::string::npos);

  std::string json = render_json(r);
  CHECK(json.find("\"subgroupElements\"") != std::string::npos);
  CHECK(json.find("\"weber\"") != std::string::npos);
}
