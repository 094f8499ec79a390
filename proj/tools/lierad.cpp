#include "lierad/ops.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using lierad::io::json;

enum Exit { kOk = 0, kParse = 1, kInvalid = 2, kInternal = 3 };

int run_analyze(const std::string& path, bool as_json) {
  lierad::LieAlgebra l = lierad::io::read_algebra(path);
  lierad::StructureReport r = lierad::analyze(l);
  if (as_json)
    std::cout << lierad::io::report_to_json(r).dump(2) << "\n";
  else
    std::cout << lierad::report_to_text(r);
  return kOk;
}

int run_verify(const std::string& path) {
  lierad::LieAlgebra l = lierad::io::read_algebra(path);
  bool all = true;
  for (const auto& c : lierad::verify(l)) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    all = all && c.pass;
  }
  return all ? kOk : kInternal;
}

int run_op(const std::string& name, const std::string& path) {
  const auto& reg = lierad::ops::registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::cerr << "unknown operation '" << name << "'; available:";
    for (const auto& [k, v] : reg) std::cerr << " " << k;
    std::cerr << "\n";
    return kParse;
  }
  lierad::LieAlgebra l = lierad::io::read_algebra(path);
  std::cout << json{{"op", name}, {"algebra", l.name()}, {"result", it->second(l)}}.dump(2) << "\n";
  return kOk;
}

int run_direct(const std::vector<std::string>& paths) {
  std::vector<lierad::LieAlgebra> factors;
  for (const auto& p : paths) factors.push_back(lierad::io::read_algebra(p));
  std::cout << lierad::io::algebra_to_json(lierad::direct_product(factors)).dump(2) << "\n";
  return kOk;
}

int run_semidirect(const std::string& path) {
  json spec = lierad::io::read_json_file(path);
  auto base = std::filesystem::path(path).parent_path();
  std::cout << lierad::io::algebra_to_json(lierad::io::semidirect_from_json(spec, base)).dump(2) << "\n";
  return kOk;
}

std::vector<std::size_t> parse_params(const std::string& entry, const std::vector<std::string>& raw) {
  std::vector<std::size_t> out;
  for (const auto& s : raw) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw lierad::catalog::BadParams(entry, "parameter '" + s + "' is not a count");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radical structure of finite-dimensional Lie algebras over Q(i)"};
  app.require_subcommand(1);

  std::string file, op_name, semidirect_spec, entry;
  std::vector<std::string> factor_files, params;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "full structure report");
  analyze->add_option("file", file, "algebra JSON")->required();
  analyze->add_flag("--json", as_json, "emit the JSON report");

  auto* verify = app.add_subcommand("verify", "run the invariant suite; exit 0 iff all pass");
  verify->add_option("file", file, "algebra JSON")->required();

  auto* op = app.add_subcommand("op", "run one named operation");
  op->add_option("name", op_name, "operation name")->required();
  op->add_option("file", file, "algebra JSON")->required();

  auto* product = app.add_subcommand("product", "build products of algebras");
  product->require_subcommand(1);
  auto* direct = product->add_subcommand("direct", "direct product of the given algebras");
  direct->add_option("files", factor_files, "algebra JSON files")->required()->expected(2, -1);
  auto* semidirect = product->add_subcommand("semidirect", "semidirect product from a spec file");
  semidirect->add_option("spec", semidirect_spec, "spec JSON with l1, l0 and phi")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in model algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list entries");
  auto* emit = catalog->add_subcommand("emit", "write an entry as algebra JSON");
  emit->add_option("name", entry, "entry name")->required();
  emit->add_option("params", params, "integer parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyze) return run_analyze(file, as_json);
    if (*verify) return run_verify(file);
    if (*op) return run_op(op_name, file);
    if (*direct) return run_direct(factor_files);
    if (*semidirect) return run_semidirect(semidirect_spec);
    if (*list) {
      for (const auto& e : lierad::catalog::entries())
        std::cout << e.name << (e.arity ? " <n>" : "") << "  " << e.summary << "\n";
      return kOk;
    }
    if (*emit) {
      auto l = lierad::catalog::build(entry, parse_params(entry, params));
      std::cout << lierad::io::algebra_to_json(l).dump(2) << "\n";
      return kOk;
    }
  } catch (const lierad::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const lierad::catalog::CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kParse;
  } catch (const lierad::AlgebraError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kInvalid;
  } catch (const lierad::DimensionError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
