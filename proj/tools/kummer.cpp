// Command-line front end: verification suites, the 31-row classification
// table, per-involution inspection and enumeration dumps.

#include "CLI11.hpp"
#include "json.hpp"

#include "kummer/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace kummer;

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  return 0;
}

bool print_report(const std::string& title, const CheckReport& r) {
  for (const std::string& line : r.checks) std::cout << "  " << line << "\n";
  std::cout << title << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
  return r.ok;
}

int cmd_verify(const std::string& scope, bool slow, int threads,
               const std::string& golden_dir) {
  bool ok = true;
  if (scope == "all" || scope == "ns") {
    ok = print_report("discriminant basis and genus reconciliation",
                      ns_suite()) &&
         ok;
    ok = print_report("discriminant form identifications",
                      form_identifications_check()) &&
         ok;
  }
  if (scope == "all" || scope == "forms") {
    ok = print_report("orbit tables m = 1, 2, 3", orbit_tables_check()) && ok;
    ok = print_report("order-4 subgroup census", census_counts_check()) && ok;
  }
  if (scope == "all" || scope == "involutions") {
    ok = print_report("index combinatorics", combinatorics_check()) && ok;
    ok = print_report("base involution cross-constructions",
                      cross_construction_check()) &&
         ok;
    ok = print_report("Weyl vector identities", weyl_identities()) && ok;
    ok = print_report("E7(2) eigenlattice certification (10 + 15 + 192)",
                      eigenlattice_check(threads)) &&
         ok;
  }
  if (scope == "all" || scope == "classification") {
    ClassificationReport r = classify_all(threads);
    ok = print_report("31 = 10+15+6 distinct patching subgroups",
                      r.certificate) &&
         ok;
    ok = print_report("abstract subgroup census bijection",
                      abstract_concrete_bijection(r)) &&
         ok;
    ok = print_report("golden tables", golden_check(r, golden_dir)) && ok;
  }
  if (scope == "surjectivity" || (scope == "all" && slow)) {
    ok = print_report("O(E7(2)) -> O(q) surjectivity", surjectivity_check()) &&
         ok;
  }
  return ok ? 0 : 1;
}

int cmd_classify(const std::string& format, const std::string& out_path,
                 int threads) {
  ClassificationReport r = classify_all(threads);
  if (!r.certificate.ok) {
    for (const std::string& line : r.certificate.checks)
      std::cerr << line << "\n";
    return 1;
  }
  std::string text;
  if (format == "md")
    text = render_markdown(r);
  else if (format == "csv")
    text = render_csv(r);
  else
    text = render_json(r);
  return write_output(text, out_path);
}

std::string matrix_block(const QMat& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
  return out.str();
}

HalfSetList parse_datum(const std::string& s) {
  HalfSetList out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, '+')) out.push_back(HalfSet::parse(part));
  std::sort(out.begin(), out.end());
  return out;
}

void print_patching(const PatchingSubgroup& p) {
  std::cout << "patching subgroup ("
            << (p.cyclic ? "cyclic" : "2-elementary") << "):\n";
  for (const FqElement& x : p.subgroup.elements)
    std::cout << "  " << generator_expression(x) << "\n";
  std::cout << "reported generator: " << generator_expression(p.generator)
            << "\n";
}

void print_involution(const NsIsometry& s, const PatchingSubgroup& p) {
  std::cout << "action matrix (H, N[0], N[12], ..., N[56]):\n"
            << matrix_block(s.m);
  Sublattice k = minus_one_eigenlattice(s);
  std::cout << "eigenlattice gram:\n" << matrix_block(k.gram());
  CheckReport cert = free_necessary_check(k);
  for (const std::string& line : cert.checks) std::cout << line << "\n";
  if (std::optional<ZMat> w = e7_witness(k))
    std::cout << "E7(2) witness (rows = images of the standard basis):\n"
              << matrix_block(w->cast<Rational>());
  print_patching(p);
}

int cmd_inspect(const std::string& kind, const std::string& datum) {
  if (kind == "switch") {
    HalfSet beta = HalfSet::parse(datum);
    if (!beta.is_even() && beta.size() == 1)
      throw CLI::ValidationError("inspect",
                                 "odd theta characteristic: switch not free");
    if (beta.is_even())
      throw CLI::ValidationError("inspect",
                                 "not a theta characteristic: switch undefined");
    auto [r1, r2] = rosenhain_pair(beta);
    std::cout << "switch " << beta.str() << "\n";
    std::cout << "generator: H/4+(";
    for (size_t i = 0; i < r1.size(); ++i)
      std::cout << (i ? "+" : "") << "N" << r1[i].str();
    std::cout << ")/2\n";
    print_involution(switch_action(beta), switch_patching(beta));
    return 0;
  }
  if (kind == "hg") {
    HalfSetList tetrad = parse_datum(datum);
    std::cout << "Gopel involution at " << datum_string(tetrad) << "\n";
    print_involution(hg_action(tetrad), hg_patching(tetrad));
    return 0;
  }
  HalfSetList hexad =
      datum == "W0" ? hw_base_hexad() : parse_datum(datum);
  std::cout << "Weber involution at " << datum_string(hexad) << "\n";
  WeberMaps maps = weber_maps(hexad);
  std::cout << "node/trope pairs (alpha not in W -> mu'(alpha)):\n";
  for (const auto& [alpha, beta] : maps.mu_prime)
    std::cout << "  N" << alpha.str() << " <-> T" << beta.str() << "\n";
  print_involution(hw_action(hexad), hw_patching(hexad));
  return 0;
}

int cmd_dump(const std::string& what, const std::string& format,
             const std::string& out_path) {
  std::vector<std::string> items;
  std::string header;
  if (what == "ns") {
    std::ostringstream out;
    out << "gram matrix (H, N[0], N[12], ..., N[56]):\n"
        << matrix_block(ns_model().ambient->gram());
    out << "discriminant basis rows (e1, f1, e2, f2, g):\n"
        << matrix_block(ns_model().disc_basis);
    return write_output(out.str(), out_path);
  }
  if (what == "gopel") {
    header = "gopel tetrads";
    for (const HalfSetList& t : gopel_tetrads())
      items.push_back(datum_string(t));
  } else if (what == "rosenhain") {
    header = "rosenhain tetrads";
    for (const HalfSetList& t : rosenhain_tetrads())
      items.push_back(datum_string(t));
  } else if (what == "weber") {
    header = "weber hexads";
    for (const HalfSetList& w : weber_hexads())
      items.push_back(datum_string(w));
  } else {
    header = "synthemes";
    for (const Syntheme& s : all_synthemes()) items.push_back(datum_string(s));
  }
  std::string text;
  if (format == "json") {
    nlohmann::json j;
    j[what] = items;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "# " << header << " (" << items.size() << ")\n";
    for (const std::string& s : items) out << s << "\n";
    text = out.str();
  }
  return write_output(text, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice toolkit for the Kummer surface involution "
               "classification"};
  app.require_subcommand(1);

  std::string scope = "all", format = "md", out_path, golden_dir = "data/golden";
  std::string kind, datum, what;
  int threads = 4;
  bool slow = false;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--scope", scope, "all|ns|forms|involutions|classification|surjectivity")
      ->check(CLI::IsMember(
          {"all", "ns", "forms", "involutions", "classification",
           "surjectivity"}));
  verify->add_flag("--slow", slow, "include the slow surjectivity suite in --scope all");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--golden-dir", golden_dir, "directory with the golden tables");

  CLI::App* classify =
      app.add_subcommand("classify", "emit the 31-row classification table");
  classify->add_option("--format", format, "md|csv|json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  classify->add_option("--out", out_path, "write to file instead of stdout");
  classify->add_option("--threads", threads, "worker threads");

  CLI::App* inspect =
      app.add_subcommand("inspect", "dump one involution in full");
  inspect->add_option("kind", kind, "switch|hg|hw")
      ->required()
      ->check(CLI::IsMember({"switch", "hg", "hw"}));
  inspect
      ->add_option("datum", datum,
                   "e.g. [123], [0]+[12]+[34]+[56], or W0 for the base hexad")
      ->required();

  CLI::App* dump = app.add_subcommand("dump", "enumeration dumps");
  dump->add_option("what", what, "ns|gopel|rosenhain|weber|synthemes")
      ->required()
      ->check(CLI::IsMember({"ns", "gopel", "rosenhain", "weber", "synthemes"}));
  dump->add_option("--format", format, "md|json")
      ->check(CLI::IsMember({"md", "json"}));
  dump->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(scope, slow, threads, golden_dir);
    if (classify->parsed()) return cmd_classify(format, out_path, threads);
    if (inspect->parsed()) return cmd_inspect(kind, datum);
    return cmd_dump(what, format, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
