#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "twisth/catalog.hpp"
#include "twisth/homology.hpp"
#include "twisth/lattice.hpp"

namespace {

using namespace twisth;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitMathFailure = 2;

struct SourceOptions {
  std::string presentation_path;
  std::string representation_path;
  std::string catalog_id;
};

void add_source_flags(CLI::App* cmd, SourceOptions* src) {
  cmd->add_option("--presentation", src->presentation_path,
                  "presentation file");
  cmd->add_option("--representation", src->representation_path,
                  "representation file");
  cmd->add_option("--catalog", src->catalog_id, "built-in catalog entry id");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Source {
  ParsedPresentation parsed;
  Representation rep;
};

Source load_source(const SourceOptions& src) {
  if (!src.catalog_id.empty()) {
    if (!src.presentation_path.empty() || !src.representation_path.empty()) {
      throw std::runtime_error(
          "--catalog excludes --presentation/--representation");
    }
    CatalogEntry e = catalog_load(src.catalog_id);
    return {std::move(e.parsed), std::move(e.representation)};
  }
  if (src.presentation_path.empty() || src.representation_path.empty()) {
    throw std::runtime_error(
        "need either --catalog or both --presentation and --representation");
  }
  ParsedPresentation parsed =
      parse_presentation(read_file(src.presentation_path));
  Representation rep =
      parse_representation(read_file(src.representation_path), parsed.pres);
  return {std::move(parsed), std::move(rep)};
}

void print_warnings(const ParsedPresentation& parsed) {
  for (const std::string& w : parsed.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
}

int cmd_compute(const SourceOptions& src, int degree, bool machine) {
  Source s = load_source(src);
  print_warnings(s.parsed);
  AbelianGroup g = degree == 0 ? h0(s.parsed.pres, s.rep)
                               : h1(s.parsed.pres, s.rep).group;
  if (machine) {
    std::cout << g.machine_string();
  } else {
    std::cout << "H" << degree << " = " << g.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const SourceOptions& src) {
  Source s = load_source(src);
  print_warnings(s.parsed);
  RelationReport report = check_relations(s.parsed.pres, s.rep);
  bool all = true;
  for (const RelationCheck& c : report.checks) {
    const Relation& r = s.parsed.pres.relations[c.index];
    std::cout << (c.pass ? "ok " : "FAIL ")
              << s.parsed.pres.relation_label(c.index) << ' '
              << print_word(r.lhs, s.parsed.pres) << " = "
              << print_word(r.rhs, s.parsed.pres) << '\n';
    all = all && c.pass;
  }
  return all ? kExitOk : kExitMathFailure;
}

int cmd_kernel(const SourceOptions& src) {
  Source s = load_source(src);
  print_warnings(s.parsed);
  IntMatrix d1 = boundary1_matrix(s.parsed.pres, s.rep);
  IntMatrix basis = kernel_lattice(d1);
  std::cout << "rank " << basis.cols() << '\n';
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::cout << combination_label(s.parsed.pres, s.rep, basis.column(c))
              << '\n';
  }
  return kExitOk;
}

int cmd_class(const SourceOptions& src, const std::string& expr) {
  Source s = load_source(src);
  print_warnings(s.parsed);
  std::vector<Int> v = parse_class_expr(expr, s.parsed.pres, s.rep);
  HomologyResult res = h1(s.parsed.pres, s.rep);
  HomologyResult::ClassCoords c = class_of(res, s.parsed.pres, s.rep, v);
  if (c.is_zero()) {
    std::cout << "zero\n";
    return kExitOk;
  }
  std::cout << "class";
  for (const Int& x : c.torsion) std::cout << ' ' << x;
  for (const Int& x : c.free) std::cout << ' ' << x;
  std::cout << '\n' << "factors";
  for (const Int& d : res.group.torsion) std::cout << ' ' << d;
  for (const Int& x : c.free) {
    (void)x;
    std::cout << " 0";
  }
  std::cout << '\n';
  Int ord = c.order(res.group.torsion);
  if (ord == 0) {
    std::cout << "order infinite\n";
  } else {
    std::cout << "order " << ord << '\n';
  }
  return kExitOk;
}

int cmd_catalog(const std::string& action) {
  if (action != "list") {
    throw std::runtime_error("unknown catalog action '" + action + "'");
  }
  for (const std::string& id : catalog_ids()) {
    std::cout << id << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted group homology of finitely presented groups"};
  app.require_subcommand(1);

  SourceOptions src;
  int degree = 1;
  bool machine = false;
  std::string expr;
  std::string catalog_action;

  CLI::App* compute = app.add_subcommand(
      "compute", "compute H0 or H1 with twisted coefficients");
  add_source_flags(compute, &src);
  compute->add_option("--degree", degree, "homology degree (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  compute->add_flag("--machine", machine, "machine-readable output");

  CLI::App* verify = app.add_subcommand(
      "verify", "check every relation under the representation");
  add_source_flags(verify, &src);

  CLI::App* kernel = app.add_subcommand(
      "kernel", "print a basis of ker d1 on the generator symbols");
  add_source_flags(kernel, &src);

  CLI::App* cls = app.add_subcommand(
      "class", "project a symbol combination to the quotient");
  add_source_flags(cls, &src);
  cls->add_option("expression", expr,
                  "integer combination of symbols, e.g. 'a1[3] + u[1]'")
      ->required();

  CLI::App* cat = app.add_subcommand("catalog", "catalog operations");
  cat->add_option("action", catalog_action, "'list'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(src, degree, machine);
    if (verify->parsed()) return cmd_verify(src);
    if (kernel->parsed()) return cmd_kernel(src);
    if (cls->parsed()) return cmd_class(src, expr);
    if (cat->parsed()) return cmd_catalog(catalog_action);
  } catch (const twisth::RelationInconsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const twisth::NotInKernelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const twisth::MembershipError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
