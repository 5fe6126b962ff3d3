#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fialg/algebra.hpp"
#include "fialg/catalog.hpp"
#include "fialg/green.hpp"
#include "fialg/kadourek.hpp"
#include "fialg/sn_family.hpp"
#include "fialg/suite.hpp"
#include "fialg/terms.hpp"

namespace {

using namespace fialg;

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t budget = 100'000'000;
  std::size_t max_size = 1'000'000;
  int jobs = 1;
};

bool machine(const GlobalOptions& g) { return g.format == "machine"; }

// Raised when an algebra file parses but breaks its own kind's axioms; the
// command then fails (exit 1) naming the violated law.
struct axiom_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input argument names either an algebra file or a catalog entry. Files
// are axiom-checked after loading; catalog entries are built checked.
FiniteAlgebra load_input(const std::string& arg, const GlobalOptions& g) {
  if (std::filesystem::exists(arg)) {
    FiniteAlgebra a = load_algebra(arg);
    VerifyResult r = verify_kind_axioms(a);
    if (!r.ok()) throw axiom_error("violated axiom: " + r.describe(a));
    return a;
  }
  return build_catalog(arg, g.max_size);
}

// Expands the word macros vN and vN' (N >= 2) into parenthesized products.
std::string expand_word_macros(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool boundary = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    if (text[i] == 'v' && boundary) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const bool has_digits = j > i + 1;
      const bool ends_token = j == text.size() || !std::isalnum(static_cast<unsigned char>(text[j]));
      if (has_digits && ends_token) {
        const int n = std::stoi(text.substr(i + 1, j - i - 1));
        if (n >= 2) {
          const bool primed = j < text.size() && text[j] == '\'';
          const auto [vn, vnp] = vn_pair(n);
          const Word& w = primed ? vnp : vn;
          out += '(';
          for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) out += '*';
            out += w[k];
          }
          out += ')';
          i = j + (primed ? 1 : 0);
          continue;
        }
      }
    }
    out += text[i++];
  }
  return out;
}

int cmd_build(const std::string& name, const std::string& out_path, const GlobalOptions& g) {
  FiniteAlgebra a = build_catalog(name, g.max_size);
  if (out_path.empty())
    std::cout << algebra_to_json(a);
  else
    save_algebra(a, out_path);
  return 0;
}

int cmd_check_identity(const std::string& input, const std::string& identity_text,
                       const GlobalOptions& g) {
  FiniteAlgebra a = load_input(input, g);
  const std::string expanded = expand_word_macros(identity_text);
  Identity id = parse_identity(expanded, infer_signature(expanded));
  CheckOutcome o = check_identity(a, id, CheckOptions{g.budget, g.jobs});
  if (machine(g)) {
    nlohmann::json doc;
    doc["verdict"] = o.satisfied ? "Satisfied" : "Counterexample";
    if (!o.satisfied) {
      nlohmann::json assignment = nlohmann::json::object();
      for (const auto& [var, val] : *o.counterexample) assignment[var] = a.label(val);
      doc["assignment"] = assignment;
    }
    std::cout << doc.dump(2) << "\n";
  } else if (o.satisfied) {
    std::cout << "Satisfied\n";
  } else {
    std::cout << "Counterexample\n";
    for (const auto& [var, val] : *o.counterexample)
      std::cout << "  " << var << " = " << a.label(val) << "\n";
  }
  return o.satisfied ? 0 : 1;
}

int cmd_green(const std::string& input, const GlobalOptions& g) {
  FiniteAlgebra a = load_input(input, g);
  GreenStructure gs = green(a);
  if (machine(g)) {
    nlohmann::json classes = nlohmann::json::array();
    for (int d = 0; d < gs.d_count(); ++d) {
      nlohmann::json members = nlohmann::json::array();
      for (element_id e : gs.d_classes[d]) members.push_back(a.label(e));
      nlohmann::json idems = nlohmann::json::array();
      for (element_id e : gs.d_idempotents(d)) idems.push_back(a.label(e));
      classes.push_back({{"members", members}, {"idempotents", idems}});
    }
    nlohmann::json doc = {{"size", a.size()},
                          {"combinatorial", is_combinatorial(gs)},
                          {"d_classes", classes}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_green_report(a, gs);
  }
  return 0;
}

int cmd_kadourek(const std::string& input, const std::string& drop_label, const GlobalOptions& g) {
  FiniteAlgebra a = load_input(input, g);
  if (!drop_label.empty()) {
    std::optional<element_id> target = a.find_label(drop_label);
    if (!target) throw std::invalid_argument("no element labeled " + drop_label);
    GreenStructure gs = green(a);
    const int dropped = gs.d_class[*target];
    std::vector<element_id> keep;
    for (element_id e = 0; e < a.size(); ++e)
      if (gs.d_class[e] != dropped) keep.push_back(e);
    if (keep.empty()) throw std::invalid_argument("dropping that D-class leaves nothing");
    Subalgebra sub = subalgebra_generated(a, keep);
    if (sub.algebra.size() != keep.size())
      throw std::invalid_argument("the complement of that D-class is not a subalgebra");
    a = sub.algebra;
  }
  B21MembershipResult r = in_var_b21(a);
  if (machine(g)) {
    nlohmann::json witness = nlohmann::json::array();
    for (element_id e : r.witness) witness.push_back(a.label(e));
    nlohmann::json doc = {{"member", r.member},
                          {"obstruction", r.obstruction},
                          {"witness", witness}};
    if (r.star) {
      doc["condition"] = {{"holds", r.star->holds},
                          {"obligations", r.star->obligations.size()}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "member of the b21 variety: " << (r.member ? "yes" : "no") << "\n";
    if (r.star)
      std::cout << "separation condition: " << (r.star->holds ? "holds" : "fails") << " ("
                << r.star->obligations.size() << " obligations)\n";
    if (!r.member) {
      std::cout << "obstruction: " << r.obstruction << "\n";
      if (!r.witness.empty()) {
        std::cout << "witness:";
        for (element_id e : r.witness) std::cout << " " << a.label(e);
        std::cout << "\n";
      }
    }
  }
  return r.member ? 0 : 1;
}

int cmd_sn(int n, bool report, bool verify, const GlobalOptions& g) {
  SnFamily s = build_sn(n, g.max_size);
  std::vector<std::pair<std::string, std::string>> checks;
  if (verify) {
    checks.emplace_back("generator products", verify_formulas(s));
    checks.emplace_back("class structure", dclass_shape_check(s));
    checks.emplace_back("word images", word_image_check(s));
  }
  const std::size_t b_size = s.green.d_classes[s.b_class[1]].size();
  if (machine(g)) {
    nlohmann::json doc = {{"n", s.n},
                          {"size", s.algebra.size()},
                          {"degree", s.degree()},
                          {"classes",
                           {{"B", b_size},
                            {"B_count", s.n},
                            {"C", s.green.d_classes[s.c_class].size()},
                            {"E", s.green.d_classes[s.e_class].size()},
                            {"D", s.green.d_classes[s.d_class].size()},
                            {"zero", s.green.d_classes[s.zero_class].size()}}}};
    if (verify) {
      nlohmann::json results = nlohmann::json::object();
      for (const auto& [name, err] : checks)
        results[name] = err.empty() ? "pass" : ("fail: " + err);
      doc["checks"] = results;
    }
    std::cout << doc.dump(2) << "\n";
    if (report) std::cout << render_green_report(s.algebra, s.green);
  } else {
    std::cout << "sn:" << s.n << ": " << s.algebra.size() << " elements, maps of degree "
              << s.degree() << "\n";
    std::cout << "classes: " << s.n << " four-element classes, one of "
              << s.green.d_classes[s.c_class].size() << ", one of "
              << s.green.d_classes[s.e_class].size() << ", one of "
              << s.green.d_classes[s.d_class].size() << ", and the zero\n";
    for (const auto& [name, err] : checks)
      std::cout << name << ": " << (err.empty() ? "pass" : "fail: " + err) << "\n";
    if (report) std::cout << render_green_report(s.algebra, s.green);
  }
  for (const auto& [name, err] : checks)
    if (!err.empty()) return 1;
  return 0;
}

int cmd_verify_paper(int n_max, const std::string& only, const GlobalOptions& g) {
  SuiteOptions so;
  so.n_max = n_max;
  so.budget = g.budget;
  so.max_size = g.max_size;
  so.jobs = g.jobs;
  so.only = only;
  VerificationReport report = run_verification_suite(so);
  std::cout << (machine(g) ? render_report_machine(report) : render_report_text(report));
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--budget", g.budget, "assignment budget for identity checks");
  app.add_option("--max-size", g.max_size, "closure size cap");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string build_name, build_out;
  CLI::App* build = app.add_subcommand("build", "write a catalog algebra as JSON");
  build->add_option("name", build_name, "catalog name")->required();
  build->add_option("out", build_out, "output path (stdout when absent)");

  std::string ci_input, ci_text;
  CLI::App* ci = app.add_subcommand("check-identity", "decide an identity by exhaustion");
  ci->add_option("algebra", ci_input, "algebra file or catalog name")->required();
  ci->add_option("identity", ci_text, "identity, e.g. \"x + x*x = x*x\"")->required();

  std::string green_input;
  CLI::App* gr = app.add_subcommand("green", "print the Green-relation report");
  gr->add_option("algebra", green_input, "algebra file or catalog name")->required();

  std::string kad_input, kad_drop;
  CLI::App* kad = app.add_subcommand("kadourek", "b21-variety membership by separation");
  kad->add_option("algebra", kad_input, "algebra file or catalog name")->required();
  kad->add_option("--drop-dclass", kad_drop, "remove the D-class of this element first");

  int sn_n = 2;
  bool sn_report = false, sn_verify = false;
  CLI::App* sn = app.add_subcommand("sn", "build and inspect a map family member");
  sn->add_option("--n", sn_n, "family index")->required()->check(CLI::Range(2, 64));
  sn->add_flag("--report", sn_report, "include the Green-relation report");
  sn->add_flag("--verify", sn_verify, "re-derive products, classes, and word images");

  int vp_n_max = 3;
  std::string vp_only;
  CLI::App* vp = app.add_subcommand("verify-paper", "run the full verification suite");
  vp->add_option("--n-max", vp_n_max, "largest family index")->check(CLI::Range(2, 16));
  vp->add_option("--only", vp_only, "run a single named check");

  for (CLI::App* sub : {build, ci, gr, kad, sn, vp}) sub->fallthrough();

  int rc = 0;
  build->callback([&] { rc = cmd_build(build_name, build_out, g); });
  ci->callback([&] { rc = cmd_check_identity(ci_input, ci_text, g); });
  gr->callback([&] { rc = cmd_green(green_input, g); });
  kad->callback([&] { rc = cmd_kadourek(kad_input, kad_drop, g); });
  sn->callback([&] { rc = cmd_sn(sn_n, sn_report, sn_verify, g); });
  vp->callback([&] { rc = cmd_verify_paper(vp_n_max, vp_only, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const axiom_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded_error& e) {
    std::cerr << "budget exceeded after " << e.evaluated << " assignments\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
