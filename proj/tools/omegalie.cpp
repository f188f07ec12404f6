// omegalie: verification, construction and classification of ternary
// w-Lie algebras.
//
// Exit status: 0 all checks passed, 1 checks ran and failed, 2 usage or
// input error.

#include "omegalie/acceptance.hpp"
#include "omegalie/classify2d.hpp"
#include "omegalie/free_ternary.hpp"
#include "omegalie/ga15.hpp"
#include "omegalie/io.hpp"
#include "omegalie/matrix_constructions.hpp"
#include "omegalie/structure_tensor.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

using namespace omegalie;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

// identity checks tabulate dim^6 scalars
constexpr std::size_t max_identity_dim = 12;

struct Options {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 20240607;
  std::size_t trials = 50;

  std::string kind = "second";
  bool print_poly = false;

  std::string type;
  std::size_t n = 2;
  std::size_t m = 1;
  std::string basis = "full";
  std::string out;
  std::vector<std::string> in;

  bool skip_scale = false;
  std::vector<std::string> elements;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& o, Json report, const Timer& timer) {
  if (o.timing)
    report["seconds"] = timer.seconds();
  std::cout << dump(report);
}

std::string tuple_text(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

void print_check(const std::string& name, const std::string& layout, const CheckReport& r,
                 std::size_t show = 10) {
  std::printf("%-22s %s (%zu tuples", (name + ":").c_str(), r.passed ? "PASS" : "FAIL", r.checked);
  if (!r.passed)
    std::printf(", %zu violations", r.violation_count);
  std::printf(")\n");
  for (std::size_t i = 0; i < r.violations.size() && i < show; ++i)
    std::printf("  %s = %s: residual %s\n", layout.c_str(),
                tuple_text(r.violations[i].indices).c_str(),
                to_string(r.violations[i].residual).c_str());
  if (r.violations.size() > show)
    std::printf("  ... %zu more\n", r.violation_count - show);
}

StructureTensor load_tensor(const std::string& path) {
  return tensor_from_json(read_json_file(path));
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Options& o) {
  Timer timer;
  const AssocKind kind = o.kind == "first" ? AssocKind::First
                         : o.kind == "second" ? AssocKind::Second
                                              : AssocKind::Free;
  const OmegaExpansion e = omega_polynomial(kind);
  const bool zero = e.polynomial.is_zero();
  if (o.json) {
    Json r = Json::object();
    r["command"] = "verify";
    r["kind"] = o.kind;
    r["zero"] = zero;
    r["double_commutators"] = e.double_commutators;
    r["raw_terms"] = e.raw_terms;
    r["merged_terms"] = e.polynomial.size();
    if (o.print_poly)
      r["polynomial"] = to_string(e.polynomial);
    r["passed"] = zero;
    emit(o, std::move(r), timer);
  } else {
    std::printf("Omega, %s associativity: %s\n", o.kind.c_str(),
                zero ? "zero polynomial" : "nonzero polynomial");
    std::printf("  %zu double commutators, %zu raw terms, %zu terms after merging\n",
                e.double_commutators, e.raw_terms, e.polynomial.size());
    if (o.print_poly)
      std::printf("  %s\n", to_string(e.polynomial).c_str());
    std::printf("%s\n", zero ? "PASS" : "FAIL");
    if (o.timing)
      std::printf("time: %.3f s\n", timer.seconds());
  }
  return zero ? exit_pass : exit_fail;
}

// ---- group ----------------------------------------------------------------

int cmd_group(const Options& o) {
  Timer timer;
  const auto rows = ga15_rows();
  const Perm5 s = sigma(), t = tau(), e{};
  const std::vector<Perm5> gens{s, t}, n_gen{s}, h_gen{t};
  const PermSet g = generate(gens);
  std::vector<std::pair<std::string, bool>> checks{
      {"order 20", g.size() == 20},
      {"sigma^5 = e", power(s, 5) == e},
      {"tau^4 = e", power(t, 4) == e},
      {"tau sigma tau^-1 = sigma^2", compose(compose(t, s), inverse(t)) == power(s, 2)},
      {"rows sigma^k tau^j cover the group", PermSet(rows.begin(), rows.end()) == g},
      {"<sigma> normal", is_normal(generate(n_gen), g)},
      {"<tau> not normal", !is_normal(generate(h_gen), g)},
  };
  bool all = true;
  for (const auto& [_, ok] : checks)
    all = all && ok;
  if (o.json) {
    Json r = Json::object();
    r["command"] = "group";
    Json table = Json::array();
    for (int j = 0; j < 4; ++j) {
      Json row = Json::array();
      for (int k = 0; k < 5; ++k)
        row.push_back(to_cycle_string(rows[j * 5 + k]));
      table.push_back(std::move(row));
    }
    r["rows"] = std::move(table);
    Json cs = Json::array();
    for (const auto& [name, ok] : checks)
      cs.push_back(Json{{"name", name}, {"passed", ok}});
    r["checks"] = std::move(cs);
    r["passed"] = all;
    emit(o, std::move(r), timer);
  } else {
    std::printf("GA(1,5) = <sigma, tau>, sigma = %s, tau = %s\n", to_cycle_string(s).c_str(),
                to_cycle_string(t).c_str());
    for (int j = 0; j < 4; ++j) {
      std::printf("  tau^%d row:", j);
      for (int k = 0; k < 5; ++k)
        std::printf(" %-13s", to_cycle_string(rows[j * 5 + k]).c_str());
      std::printf("\n");
    }
    for (const auto& [name, ok] : checks)
      std::printf("%-36s %s\n", name.c_str(), ok ? "PASS" : "FAIL");
  }
  return all ? exit_pass : exit_fail;
}

// ---- algebra build / check / probe ----------------------------------------

struct Built {
  StructureTensor tensor;
  std::string description;
};

Built build_algebra(const Options& o) {
  const std::size_t n = o.n, m = o.m;
  if (n < 1 || m < 1)
    throw CLI::ValidationError("--n and --m must be at least 1");
  const bool traceless = o.basis == "traceless";
  if (traceless && !(o.type == "cubic-beta" || o.type == "cubic-gamma") )
    throw CLI::ValidationError("--basis traceless applies to cubic algebras only");
  if (o.type == "vector") {
    if (n > 16)
      throw CLI::ValidationError("vector algebra: --n above the size budget of 16");
    return {vector_structure_constants(n, VectorVariant::Cyclic),
            "vectors of length " + std::to_string(n) + ", cyclic bracket"};
  }
  if (o.type == "rect") {
    if (m * n > 16)
      throw CLI::ValidationError("rect algebra: m*n above the size budget of 16");
    return {extract_structure_constants(rect_transpose_product(), matrix_unit_basis(m, n)),
            std::to_string(m) + "x" + std::to_string(n) + " matrices, A B^T C"};
  }
  if (o.type == "binary") {
    if (n > 4)
      throw CLI::ValidationError("binary algebra: --n above the size budget of 4");
    return {extract_structure_constants(binary_derived_product(), matrix_unit_basis(n, n)),
            std::to_string(n) + "x" + std::to_string(n) + " matrices, A B C"};
  }
  const CubicForm form = o.type == "cubic-beta" ? CubicForm::Beta : CubicForm::Gamma;
  if (n != 2 && n != 3)
    throw CLI::ValidationError("cubic algebras: --n must be 2 or 3");
  if (traceless) {
    if (n != 2)
      throw CLI::ValidationError("traceless basis is available for order 2");
    const TracelessBasis t = traceless_basis_order2();
    return {extract_structure_constants(cubic_product(form), std::vector{t.e1, t.e2}),
            "traceless cubic matrices of order 2 (E1, E2), " + o.type};
  }
  return {extract_structure_constants(cubic_product(form), cubic_unit_basis(n)),
          "cubic matrices of order " + std::to_string(n) + ", " + o.type};
}

int cmd_algebra_build(const Options& o) {
  Timer timer;
  Built b;
  try {
    b = build_algebra(o);
  } catch (const NotClosed& e) {
    if (o.json) {
      emit(o, Json{{"command", "algebra build"}, {"passed", false}, {"error", e.what()}}, timer);
    } else {
      std::printf("not closed: %s\nFAIL\n", e.what());
    }
    return exit_fail;
  }
  const Json tensor = to_json(b.tensor);
  if (!o.out.empty())
    write_json_file(o.out, tensor);
  if (o.json) {
    Json r = Json::object();
    r["command"] = "algebra build";
    r["type"] = o.type;
    r["dim"] = b.tensor.dim();
    r["nonzero_entries"] = tensor["entries"].size();
    r["out"] = o.out;
    r["passed"] = true;
    if (o.out.empty())
      r["tensor"] = tensor;
    emit(o, std::move(r), timer);
  } else {
    std::printf("%s: dimension %zu, %zu nonzero structure constants\n", b.description.c_str(),
                b.tensor.dim(), tensor["entries"].size());
    if (b.tensor.dim() == 2) {
      const auto v = independent_2d(b.tensor);
      std::printf("(C^1_121, C^2_121, C^1_212, C^2_212) = (%s, %s, %s, %s)\n",
                  to_string(v[0]).c_str(), to_string(v[1]).c_str(), to_string(v[2]).c_str(),
                  to_string(v[3]).c_str());
    }
    if (o.out.empty())
      std::cout << dump(tensor);
    else
      std::printf("written to %s\n", o.out.c_str());
  }
  return exit_pass;
}

int cmd_algebra_check(const Options& o) {
  Timer timer;
  const StructureTensor c = load_tensor(o.in.at(0));
  if (c.dim() > max_identity_dim)
    throw CLI::ValidationError("identity check is limited to dimension " +
                               std::to_string(max_identity_dim));
  const CheckReport sym = check_omega_symmetry(c);
  const CheckReport id = check_ga15_identity(c);
  const bool passed = sym.passed && id.passed;
  if (o.json) {
    Json r = Json::object();
    r["command"] = "algebra check";
    r["input"] = o.in.at(0);
    r["dim"] = c.dim();
    Json s = to_json(sym, {"m", "i", "k", "l"});
    s["name"] = "omega-symmetry";
    Json g = to_json(id, {"i", "k", "l", "r", "s", "p"});
    g["name"] = "ga15-identity";
    r["checks"] = Json::array({std::move(s), std::move(g)});
    r["passed"] = passed;
    emit(o, std::move(r), timer);
  } else {
    std::printf("%s: dimension %zu\n", o.in.at(0).c_str(), c.dim());
    print_check("w-symmetry", "(m,i,k,l)", sym);
    print_check("GA(1,5)-identity", "(i,k,l,r,s,p)", id);
    std::printf("%s\n", passed ? "PASS" : "FAIL");
    if (o.timing)
      std::printf("time: %.3f s\n", timer.seconds());
  }
  return passed ? exit_pass : exit_fail;
}

template <class T>
Json probe_json(const ProbeReport<T>& r) {
  Json j = to_json(r.check, {"trial", "equation", "coordinate"});
  if (r.witness) {
    Json w = Json::array();
    for (const auto& x : *r.witness)
      w.push_back(to_json(x));
    j["witness"] = std::move(w);
  }
  return j;
}

int cmd_algebra_probe(const Options& o) {
  Timer timer;
  const Associativity kind = o.kind == "first" ? Associativity::First : Associativity::Second;
  if (o.kind == "free")
    throw CLI::ValidationError("--kind must be first or second for probes");
  Json report;
  std::string name;
  if (o.type == "rect" || o.type == "binary") {
    const auto prod = o.type == "rect" ? rect_transpose_product() : binary_derived_product();
    const EisMatrix shape = o.type == "rect" ? EisMatrix(o.m, o.n) : EisMatrix(o.n, o.n);
    report = probe_json(associativity_probe(prod, kind, o.trials, o.seed, shape));
    name = prod.name;
  } else if (o.type == "cubic-beta" || o.type == "cubic-gamma") {
    const auto prod = cubic_product(o.type == "cubic-beta" ? CubicForm::Beta : CubicForm::Gamma);
    report = probe_json(associativity_probe(prod, kind, o.trials, o.seed, CubicMatrix(o.n)));
    name = prod.name;
  } else {
    throw CLI::ValidationError("probe supports rect, binary, cubic-beta and cubic-gamma");
  }
  const bool passed = report["passed"].get<bool>();
  if (o.json) {
    Json r = Json::object();
    r["command"] = "algebra probe";
    r["type"] = o.type;
    r["kind"] = o.kind;
    r["trials"] = o.trials;
    r["seed"] = o.seed;
    r["report"] = std::move(report);
    r["passed"] = passed;
    emit(o, std::move(r), timer);
  } else {
    std::printf("%s, %s-kind associativity, %zu trials, seed %llu: %s\n", name.c_str(),
                o.kind.c_str(), o.trials, static_cast<unsigned long long>(o.seed),
                passed ? "PASS" : "FAIL");
    if (!passed)
      std::printf("  %zu coordinate mismatches; first in trial %d\n",
                  report["violation_count"].get<std::size_t>(),
                  report["violations"][0]["trial"].get<int>());
  }
  return passed ? exit_pass : exit_fail;
}

// ---- classify / iso -------------------------------------------------------

int cmd_classify(const Options& o) {
  Timer timer;
  const StructureTensor c = load_tensor(o.in.at(0));
  const ClassReport report = classify(c);
  const SimplicityEntry simple = simplicity_of(c);
  if (o.json) {
    Json r = to_json(report);
    r["simplicity"] = to_string(simple.structure);
    Json ideals = Json::array();
    for (const auto& s : simple.ideals) {
      Json v = Json::array();
      for (const auto& x : s.basis()[0])
        v.push_back(to_json(x));
      ideals.push_back(std::move(v));
    }
    r["ideals"] = std::move(ideals);
    emit(o, std::move(r), timer);
  } else {
    const auto v = independent_2d(c);
    std::printf("(C^1_121, C^2_121, C^1_212, C^2_212) = (%s, %s, %s, %s)\n",
                to_string(v[0]).c_str(), to_string(v[1]).c_str(), to_string(v[2]).c_str(),
                to_string(v[3]).c_str());
    const auto& inv = report.invariants;
    std::printf("class %s\n", to_string(report.label));
    std::printf("  zero: %s, in W: %s, p^2 - qr = 0: %s, in V: %s\n", inv.is_zero ? "yes" : "no",
                inv.in_W ? "yes" : "no", inv.disc_zero ? "yes" : "no", inv.in_V ? "yes" : "no");
    std::printf("  %s", to_string(simple.structure));
    for (const auto& s : simple.ideals)
      std::printf(" span{(%s, %s)}", to_string(s.basis()[0][0]).c_str(),
                  to_string(s.basis()[0][1]).c_str());
    std::printf("\n");
    if (report.witness)
      std::printf("  basis change to the canonical form: %s\n", to_string(*report.witness).c_str());
    else
      std::printf("  no basis change to the canonical form found over Q(w)\n");
    if (report.label == ClassLabel::IV && !inv.in_V)
      std::printf("  note: p != s with a nonzero W-part; IV is assigned by the p != s rule\n");
  }
  return exit_pass;
}

int cmd_iso(const Options& o) {
  Timer timer;
  if (o.in.size() != 2)
    throw CLI::ValidationError("iso needs exactly two --in files");
  const StructureTensor a = load_tensor(o.in[0]);
  const StructureTensor b = load_tensor(o.in[1]);
  const ClassReport ra = classify(a, false), rb = classify(b, false);
  const IsoResult iso = iso_witness(a, b);
  if (o.json) {
    Json r = Json::object();
    r["command"] = "iso";
    r["labels"] = Json::array({to_string(ra.label), to_string(rb.label)});
    r["same_class"] = ra.label == rb.label;
    r["witness"] = iso.witness ? to_json(*iso.witness) : Json(nullptr);
    r["reason"] = iso.reason;
    r["passed"] = iso.witness.has_value();
    emit(o, std::move(r), timer);
  } else {
    std::printf("classes: %s, %s\n", to_string(ra.label), to_string(rb.label));
    if (iso.witness)
      std::printf("witness A = %s\n", to_string(*iso.witness).c_str());
    else
      std::printf("no witness: %s\n", iso.reason.c_str());
  }
  return iso.witness ? exit_pass : exit_fail;
}

// ---- paper-suite ----------------------------------------------------------

int cmd_suite(const Options& o) {
  Timer timer;
  AcceptanceOptions opts;
  opts.seed = o.seed;
  opts.include_scale_check = !o.skip_scale;
  if (!o.elements.empty()) {
    std::vector<Perm5> els;
    for (const auto& text : o.elements)
      els.push_back(parse_cycle_string(text));
    opts.elements = std::move(els);
  }
  bool all = true;
  Json results = Json::array();
  if (!o.json)
    std::printf("%-3s %-46s %-6s %-60s\n", "#", "check", "result", "statement");
  run_acceptance(opts, [&](const CriterionResult& r) {
    all = all && r.passed;
    if (o.json) {
      Json j = Json::object();
      j["id"] = r.id;
      j["title"] = r.title;
      j["statement"] = r.anchor;
      j["passed"] = r.passed;
      j["detail"] = r.detail;
      if (o.timing)
        j["seconds"] = r.seconds;
      results.push_back(std::move(j));
    } else {
      std::printf("%-3d %-46s %-6s %-60s\n", r.id, r.title.c_str(), r.passed ? "PASS" : "FAIL",
                  r.anchor.c_str());
      if (!r.passed || o.timing)
        std::printf("    %s (%.2f s)\n", r.detail.c_str(), r.seconds);
      std::fflush(stdout);
    }
  });
  if (o.json)
    emit(o, Json{{"command", "paper-suite"}, {"seed", o.seed}, {"results", results}, {"passed", all}},
         timer);
  else
    std::printf("%s\n", all ? "ALL PASS" : "FAILURES");
  return all ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification toolkit for ternary w-Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");

  auto* verify = app.add_subcommand("verify", "Expand Omega and reduce it modulo associativity");
  verify->add_option("--kind", o.kind, "first, second or free")
      ->check(CLI::IsMember({"first", "second", "free"}));
  verify->add_flag("--print", o.print_poly, "Print the reduced polynomial");

  auto* group = app.add_subcommand("group", "List GA(1,5) and check its structure");

  auto* algebra = app.add_subcommand("algebra", "Build, check or probe ternary algebras");
  algebra->require_subcommand(1);
  algebra->fallthrough();
  auto* build = algebra->add_subcommand("build", "Extract structure constants of a construction");
  build->add_option("--type", o.type, "rect, vector, cubic-beta, cubic-gamma or binary")
      ->required()
      ->check(CLI::IsMember({"rect", "vector", "cubic-beta", "cubic-gamma", "binary"}));
  build->add_option("--n", o.n, "Columns, vector length, matrix or cubic order");
  build->add_option("--m", o.m, "Rows of rectangular matrices");
  build->add_option("--basis", o.basis, "full or traceless")
      ->check(CLI::IsMember({"full", "traceless"}));
  build->add_option("--out", o.out, "Write the tensor JSON here");
  auto* check = algebra->add_subcommand("check", "Check w-symmetry and the GA(1,5)-identity");
  check->add_option("--in", o.in, "Tensor JSON")->required()->expected(1);
  auto* probe = algebra->add_subcommand("probe", "Random associativity test of a product");
  probe->add_option("--type", o.type, "rect, binary, cubic-beta or cubic-gamma")
      ->required()
      ->check(CLI::IsMember({"rect", "binary", "cubic-beta", "cubic-gamma"}));
  probe->add_option("--kind", o.kind, "first or second")->check(CLI::IsMember({"first", "second"}));
  probe->add_option("--n", o.n, "Columns or order");
  probe->add_option("--m", o.m, "Rows of rectangular matrices");
  probe->add_option("--trials", o.trials, "Number of random triples")->check(CLI::PositiveNumber);
  probe->add_option("--seed", o.seed, "Random seed");

  auto* cls = app.add_subcommand("classify", "Classify a 2-dimensional algebra");
  cls->add_option("--in", o.in, "Tensor JSON")->required()->expected(1);

  auto* iso = app.add_subcommand("iso", "Search for an explicit isomorphism");
  iso->add_option("--in", o.in, "Two tensor JSON files")->required()->expected(2);

  auto* suite = app.add_subcommand("paper-suite", "Run every acceptance check");
  suite->add_option("--seed", o.seed, "Random seed");
  suite->add_flag("--skip-scale", o.skip_scale, "Skip the 8-dimensional algebra");
  suite->add_option("--elements", o.elements,
                    "Replace the group elements summed over (cycle notation)");

  try {
    app.parse(argc, argv);
    if (*verify)
      return cmd_verify(o);
    if (*group)
      return cmd_group(o);
    if (*build)
      return cmd_algebra_build(o);
    if (*check)
      return cmd_algebra_check(o);
    if (*probe)
      return cmd_algebra_probe(o);
    if (*cls)
      return cmd_classify(o);
    if (*iso)
      return cmd_iso(o);
    if (*suite)
      return cmd_suite(o);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_usage;
  }
  return exit_usage;
}
