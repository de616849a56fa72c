#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bvl/bvl.hpp"

using namespace bvl;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, infeasible = 3 };

void print_triple(std::ostream& os, const GeneratingTriple& t) {
  os << "degree=" << t.degree() << " x=" << t.x.to_cycle_string() << " y=" << t.y.to_cycle_string()
     << " z=" << t.z.to_cycle_string() << " type=" << to_string(t.type()) << " provenance=" << t.provenance
     << " proof=" << (t.proof.empty() ? "-" : t.proof) << "\n";
}

int cmd_d2(int n, const std::string& method) {
  CountReport r = method == "moebius" ? phi2_moebius(n) : phi2_bruteforce(n);
  std::cout << "group=" << r.group << " phi2=" << r.phi2 << " aut=" << r.aut_order << " d2=" << r.d2
            << " method=" << method_name(r.method) << "\n";
  return ok;
}

int cmd_construct(int n, std::size_t k, const std::string& out, std::uint64_t seed, std::size_t cap) {
  auto r = build_beauville(n, k, cap, seed);
  if (r.status == BuildStatus::no_structure) {
    std::cerr << "no structure: " << r.note << "\n";
    return failed;
  }
  if (r.status == BuildStatus::unsupported) {
    std::cerr << "unsupported: " << r.note << "\n";
    return infeasible;
  }
  const std::string text = emit_certificate(*r.structure);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return usage;
    }
    f << text;
  }
  const auto& s = *r.structure;
  std::cerr << "A" << n << "^" << k << " recipe=" << s.recipe << " types=" << to_string(s.report.types[0]) << ";"
            << to_string(s.report.types[1]) << " verified\n";
  return ok;
}

int cmd_verify(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot read " << path << "\n";
    return usage;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  const auto r = verify_certificate(ss.str());
  const auto& v = r.report;
  std::cout << "A" << r.n << "^" << r.k << " condition1=" << v.condition1() << " condition2=" << v.condition2()
            << " condition3=" << v.condition3.holds << " types=" << to_string(v.types[0]) << ";"
            << to_string(v.types[1]) << "\n";
  if (!r.ok) {
    std::cout << "FAILED: " << r.failure << "\n";
    return failed;
  }
  std::cout << "verified\n";
  return ok;
}

int cmd_catalog(int n, bool verify) {
  if (n < 5) throw InvalidArgument("catalog: n >= 5 required");
  if (n <= 11) {
    bool all_ok = true;
    std::size_t entries = 0, verified = 0;
    for (const auto& e : catalog_small(n)) {
      ++entries;
      verified += e.ok();
      std::cout << "[" << role_name(e.role) << "] " << e.label << ": ";
      print_triple(std::cout, e.triple);
      if (!verify) continue;
      for (const auto& d : e.diagnostics) std::cout << "  diagnostic: " << d << "\n";
      for (const auto& d : e.notes) std::cout << "  note: " << d << "\n";
      if (!e.ok() && e.role != CatalogRole::listed_only) all_ok = false;
      std::cout << "  " << (e.ok() ? "verified" : (e.role == CatalogRole::listed_only ? "flagged" : "FAILED"))
                << "\n";
    }
    if (verify) std::cout << entries << " entries, " << verified << " verified\n";
    return all_ok ? ok : failed;
  }
  for (const auto& t : family_long_cycle_representatives(n)) print_triple(std::cout, t);
  for (int p : primes_upto(n)) {
    print_triple(std::cout, family_Tp(n, p));
    print_triple(std::cout, family_Tp_prime(n, p));
  }
  return ok;
}

int cmd_classreps(int n) {
  const auto reps = class_representatives(n);
  for (const auto& t : reps) print_triple(std::cout, t);
  std::cout << reps.size() << " classes\n";
  return ok;
}

int cmd_no_beauville(int n) {
  if (n != 5) throw CapExceeded("no-beauville: only n = 5 is covered");
  const auto o = no_beauville_a5();
  std::cout << "classes=" << o.classes << " pairs_checked=" << o.pairs_checked << " pairs_passing=" << o.pairs_passing
            << "\n";
  return o.pairs_passing == 0 ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beauville structures on powers of alternating groups"};
  app.require_subcommand(1);
  int n = 0;
  std::size_t k = 0, cap = default_cap();
  std::uint64_t seed = 0;
  std::string method = "brute", out, path;
  bool verify = false;

  auto* d2 = app.add_subcommand("d2", "count generating pairs");
  d2->add_option("--n", n)->required();
  d2->add_option("--method", method)->check(CLI::IsMember({"brute", "moebius"}));

  auto* construct = app.add_subcommand("construct", "build and certify a structure on A_n^k");
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--out", out);
  construct->add_option("--seed", seed);
  construct->add_option("--cap", cap);

  auto* ver = app.add_subcommand("verify", "re-verify a certificate");
  ver->add_option("path", path)->required();

  auto* cat = app.add_subcommand("catalog", "list explicit triples");
  cat->add_option("--n", n)->required();
  cat->add_flag("--verify", verify);

  auto* reps = app.add_subcommand("classreps", "one generating triple per Aut-class");
  reps->add_option("--n", n)->required();

  auto* nb = app.add_subcommand("no-beauville", "exhaustive condition 3 scan for A_5");
  nb->add_option("--n", n)->default_val(5);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*d2) return cmd_d2(n, method);
    if (*construct) return cmd_construct(n, k, out, seed, cap);
    if (*ver) return cmd_verify(path);
    if (*cat) return cmd_catalog(n, verify);
    if (*reps) return cmd_classreps(n);
    if (*nb) return cmd_no_beauville(n);
  } catch (const CapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return infeasible;
  } catch (const ParseError& e) {
    std::cerr << "malformed: " << e.what() << "\n";
    return usage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return failed;
  }
  return usage;
}
