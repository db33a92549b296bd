#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummer/halfset.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace kummer;

namespace {

HalfSet hs(const std::string& s) { return HalfSet::parse(s); }

HalfSetList hexad(std::initializer_list<const char*> names) {
  HalfSetList w;
  for (const char* n : names) w.push_back(hs(n));
  std::sort(w.begin(), w.end());
  return w;
}

const HalfSetList kW0 = hexad({"[12]", "[23]", "[13]", "[14]", "[25]", "[36]"});

}  // namespace

TEST_CASE("canonical representatives and notation round-trip") {
  CHECK(HalfSet{3, 4, 5, 6} == hs("[12]"));
  CHECK(HalfSet{2, 3, 4} == hs("[156]"));
  CHECK(HalfSet{2, 3, 4, 5, 6} == hs("[1]"));
  CHECK(HalfSet{}.str() == "[0]");
  CHECK(hs("[123]").size() == 3);
  CHECK_FALSE(hs("[123]").is_even());
  for (const HalfSet& h : all_even()) CHECK(HalfSet::parse(h.str()) == h);
  for (const HalfSet& h : all_odd()) CHECK(HalfSet::parse(h.str()) == h);
  CHECK_THROWS_AS(HalfSet::parse("[17]"), std::invalid_argument);
}

TEST_CASE("class order matches the documented node order") {
  const HalfSetList& ev = all_even();
  REQUIRE(ev.size() == 16);
  CHECK(ev[0] == hs("[0]"));
  CHECK(ev[1] == hs("[12]"));
  CHECK(ev[5] == hs("[16]"));
  CHECK(ev[6] == hs("[23]"));
  CHECK(ev[15] == hs("[56]"));
  const HalfSetList& od = all_odd();
  REQUIRE(od.size() == 16);
  CHECK(od[0] == hs("[1]"));
  CHECK(od[5] == hs("[6]"));
  CHECK(od[6] == hs("[123]"));
  CHECK(od[15] == hs("[156]"));
}

TEST_CASE("symmetric difference: examples and group structure") {
  CHECK(sym_diff(hs("[12]"), hs("[13]")) == hs("[23]"));
  CHECK(sym_diff(hs("[13]"), hs("[56]")) == hs("[24]"));
  CHECK(sym_diff(hs("[123]"), hs("[1]")) == hs("[23]"));

  // even classes form F_2^4
  for (const HalfSet& a : all_even()) {
    CHECK(sym_diff(a, a) == hs("[0]"));
    CHECK(sym_diff(a, hs("[0]")) == a);
    for (const HalfSet& b : all_even()) {
      CHECK(sym_diff(a, b).is_even());
      for (const HalfSet& c : all_even())
        CHECK(sym_diff(sym_diff(a, b), c) == sym_diff(a, sym_diff(b, c)));
    }
  }
}

TEST_CASE("symplectic pairing: values, bilinearity, trivial radical") {
  CHECK(symplectic(hs("[12]"), hs("[23]")) == 1);
  CHECK(symplectic(hs("[12]"), hs("[34]")) == 0);
  CHECK(symplectic(hs("[12]"), HalfSet{3, 4, 5, 6}) == 0);
  CHECK_THROWS_AS(symplectic(hs("[1]"), hs("[12]")), std::invalid_argument);

  for (const HalfSet& a : all_even()) {
    CHECK(symplectic(a, a) == 0);
    bool radical = true;
    for (const HalfSet& b : all_even()) {
      CHECK(symplectic(a, b) == symplectic(b, a));
      if (symplectic(a, b) != 0) radical = false;
      for (const HalfSet& c : all_even())
        CHECK(symplectic(sym_diff(a, b), c) ==
              (symplectic(a, c) + symplectic(b, c)) % 2);
    }
    CHECK(radical == (a == hs("[0]")));
  }
}

TEST_CASE("incidence and the six-node pencils") {
  CHECK(incidence(hs("[0]"), hs("[1]")));
  CHECK(incidence(hs("[12]"), hs("[123]")));
  CHECK_FALSE(incidence(hs("[0]"), hs("[123]")));
  CHECK_THROWS_AS(incidence(hs("[1]"), hs("[123]")), std::invalid_argument);

  CHECK(lambda_of(hs("[123]")) ==
        hexad({"[12]", "[13]", "[23]", "[45]", "[46]", "[56]"}));
  CHECK(lambda_of(hs("[6]")) ==
        hexad({"[0]", "[16]", "[26]", "[36]", "[46]", "[56]"}));
  for (const HalfSet& beta : all_odd()) CHECK(lambda_of(beta).size() == 6);
}

TEST_CASE("enumeration counts: 15 / 60 / 20 / 80 / 192") {
  CHECK(gopel_subgroups().size() == 15);
  CHECK(gopel_tetrads().size() == 60);
  CHECK(rosenhain_subgroups().size() == 20);
  CHECK(rosenhain_tetrads().size() == 80);
  CHECK(weber_hexads().size() == 192);

  for (const HalfSetList& g : gopel_subgroups()) {
    CHECK(std::binary_search(g.begin(), g.end(), hs("[0]")));
    for (const HalfSet& a : g)
      for (const HalfSet& b : g) {
        CHECK(symplectic(a, b) == 0);
        CHECK(std::binary_search(g.begin(), g.end(), sym_diff(a, b)));
      }
  }
  for (const HalfSetList& r : rosenhain_subgroups()) {
    int nonorth = 0;
    for (const HalfSet& a : r)
      for (const HalfSet& b : r) nonorth += symplectic(a, b);
    CHECK(nonorth > 0);
  }
}

TEST_CASE("weber shapes with witnesses, round-trips over all 192") {
  auto s1 = weber_shape(hexad({"[0]", "[12]", "[23]", "[34]", "[45]", "[15]"}));
  CHECK(s1.shape == WeberShape::kWithZero);
  CHECK(std::array<int, 5>{s1.symbols[0], s1.symbols[1], s1.symbols[2],
                           s1.symbols[3], s1.symbols[4]} ==
        std::array<int, 5>{1, 2, 3, 4, 5});

  auto s2 = weber_shape(kW0);
  CHECK(s2.shape == WeberShape::kWithoutZero);
  CHECK(s2.symbols == std::array<int, 6>{1, 2, 3, 4, 5, 6});

  CHECK_THROWS_AS(
      weber_shape(hexad({"[0]", "[12]", "[34]", "[56]", "[13]", "[24]"})),
      std::invalid_argument);

  int with_zero = 0;
  for (const HalfSetList& w : weber_hexads()) {
    auto s = weber_shape(w);
    CHECK(hexad_from_shape(s) == w);
    if (s.shape == WeberShape::kWithZero) ++with_zero;
  }
  CHECK(with_zero == 72);
}

TEST_CASE("unique Rosenhain pair for each size-3 trope class") {
  auto [r1, r2] = rosenhain_pair(hs("[123]"));
  CHECK((r1 == hexad({"[0]", "[12]", "[23]", "[13]"}) ||
         r2 == hexad({"[0]", "[12]", "[23]", "[13]"})));
  CHECK((r1 == hexad({"[0]", "[45]", "[56]", "[46]"}) ||
         r2 == hexad({"[0]", "[45]", "[56]", "[46]"})));

  int count = 0;
  for (const HalfSet& beta : all_odd()) {
    if (beta.size() != 3) continue;
    ++count;
    auto [a, b] = rosenhain_pair(beta);  // throws unless unique
    CHECK(set_sym_diff(a, b) == lambda_of(beta));
  }
  CHECK(count == 10);
  CHECK_THROWS_AS(rosenhain_pair(hs("[1]")), std::invalid_argument);
}

TEST_CASE("weber_maps on W0 reproduces the ten node/trope pairs") {
  WeberMaps m = weber_maps(kW0);
  CHECK(m.degree_one.size() == 6);
  CHECK(m.mu.size() == 6);
  CHECK(m.mu_prime.size() == 10);
  CHECK(m.perp.size() == 10);

  std::map<HalfSet, HalfSet> mp(m.mu_prime.begin(), m.mu_prime.end());
  CHECK(mp.at(hs("[0]")) == hs("[123]"));
  CHECK(mp.at(hs("[56]")) == hs("[1]"));
  CHECK(mp.at(hs("[46]")) == hs("[2]"));
  CHECK(mp.at(hs("[45]")) == hs("[3]"));
  CHECK(mp.at(hs("[15]")) == hs("[124]"));
  CHECK(mp.at(hs("[16]")) == hs("[134]"));
  CHECK(mp.at(hs("[24]")) == hs("[125]"));
  CHECK(mp.at(hs("[26]")) == hs("[146]"));
  CHECK(mp.at(hs("[34]")) == hs("[136]"));
  CHECK(mp.at(hs("[35]")) == HalfSet{2, 3, 6});

  for (const auto& [alpha, wp] : m.perp) CHECK(is_weber_hexad(wp));
}

TEST_CASE("six conjugacy classes of 32, each with 20 hexads avoiding [0]") {
  const auto& cls = weber_classes();
  REQUIRE(cls.size() == 6);
  size_t covered = 0;
  for (const auto& c : cls) {
    CHECK(c.size() == 32);
    covered += c.size();
    CHECK(class_members_avoiding_zero(c).size() == 20);
  }
  CHECK(covered == 192);
}

TEST_CASE("syntheme duality: 10 present, absent five form a total") {
  CHECK(all_synthemes().size() == 15);

  std::set<std::vector<Syntheme>> totals;
  for (const auto& c : weber_classes()) {
    SynthemeDuality d = syntheme_duality(class_members_avoiding_zero(c));
    CHECK(d.present.size() == 10);
    CHECK(d.absent.size() == 5);
    CHECK(is_total(d.absent));
    totals.insert(d.absent);
  }
  CHECK(totals.size() == 6);

  CHECK_THROWS_AS(syntheme_duality({hexad(
                      {"[0]", "[12]", "[23]", "[34]", "[45]", "[15]"})}),
                  std::invalid_argument);
}
