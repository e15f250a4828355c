// Command-line front end for the Hida Fock space engine.
//
// Every command reads JSON files and writes canonical JSON to stdout.
// Exit codes: 0 success, 1 check failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "hida/checks.hpp"
#include "hida/error.hpp"
#include "hida/expansion.hpp"
#include "hida/hochschild.hpp"
#include "hida/json_io.hpp"

namespace {

using hida::json::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using Operator = std::variant<hida::KernelFamily, hida::BasisActionTable>;

Operator load_operator(const std::string& path) {
  const Json j = hida::json::read_file(path);
  if (j.is_object() && j.contains("rows")) return hida::json::table_from_json(j);
  if (j.is_object() && j.contains("blocks")) return hida::json::kernel_family_from_json(j);
  throw hida::ParseError(path + ": expected a kernel family (\"blocks\") or a basis-action table (\"rows\")");
}

std::uint32_t modes_of(const hida::MultiIndex& a) {
  const auto top = a.max_mode();
  return top ? *top + 1 : 0;
}

// Caps flags for kernel inputs; unset values fall back to what the family needs.
struct CapsFlags {
  std::optional<std::uint32_t> modes;
  std::optional<std::uint32_t> max_degree;

  void attach(CLI::App* cmd) {
    cmd->add_option("--modes", modes, "Mode cap K (modes 0..K-1)");
    cmd->add_option("--max-degree", max_degree, "Degree cap D");
  }

  hida::TruncationCaps resolve(const hida::KernelFamily& k, std::uint32_t extra_degree = 0,
                               std::uint32_t extra_modes = 0) const {
    std::uint32_t need_modes = std::max<std::uint32_t>(extra_modes, 1);
    std::uint32_t need_degree = 0;
    for (const auto& [key, c] : k.entries()) {
      need_modes = std::max(need_modes, modes_of(key.creation));
      for (const auto& j : key.annihilation) need_modes = std::max(need_modes, modes_of(j));
      need_degree = std::max(need_degree, key.l() + key.m());
    }
    return hida::TruncationCaps{modes.value_or(need_modes), max_degree.value_or(need_degree + extra_degree)};
  }
};

hida::BasisActionTable as_table(const Operator& op, const CapsFlags& flags, std::uint32_t extra_modes = 0) {
  if (const auto* t = std::get_if<hida::BasisActionTable>(&op)) return *t;
  const auto& k = std::get<hida::KernelFamily>(op);
  return hida::table_from_kernel(k, flags.resolve(k, 0, extra_modes));
}

std::uint32_t modes_of(const hida::TestVector& v) {
  return v.coeffs().empty() ? 0 : v.coeffs().rbegin()->first + 1;
}

void emit(const Json& j) { std::cout << hida::json::dump(j); }

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Exact computer algebra on truncated Hida Fock spaces"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  CapsFlags caps_flags;

  auto* wick = app.add_subcommand("wick", "Wick product of two Fock vectors");
  wick->add_option("files", files, "Two FockVector files")->required()->expected(2);

  auto* coherent_cmd = app.add_subcommand("coherent", "Coherent vector of a test vector up to a degree");
  std::uint32_t coherent_degree = 0;
  coherent_cmd->add_option("file", files, "TestVector file")->required()->expected(1);
  coherent_cmd->add_option("--max-degree", coherent_degree, "Degree cap N")->required();

  auto* pair = app.add_subcommand("pair", "Bilinear pairing of two Fock vectors");
  pair->add_option("files", files, "Two FockVector files")->required()->expected(2);

  auto* norm = app.add_subcommand("norm", "Weighted norm squared of a Fock vector");
  std::uint32_t norm_k = 0;
  std::string norm_c = "1";
  norm->add_option("file", files, "FockVector file")->required()->expected(1);
  norm->add_option("--k", norm_k, "Sobolev exponent k >= 0");
  norm->add_option("--c", norm_c, "Positive rational constant C");

  auto* apply = app.add_subcommand("apply", "Apply a kernel family or basis-action table to arguments");
  apply->add_option("files", files, "Operator file followed by one FockVector file per slot")->required();

  auto* symbol = app.add_subcommand("symbol", "Symbol of an operator, as a polynomial or at a point");
  std::string symbol_op;
  std::vector<std::string> symbol_at;
  bool symbol_poly_flag = false;
  symbol->add_option("file", symbol_op, "Operator file")->required();
  auto* poly_opt = symbol->add_flag("--poly", symbol_poly_flag, "Emit the truncated symbol polynomial");
  auto* at_opt = symbol->add_option("--at", symbol_at, "TestVector files: one xi per slot, then eta");
  poly_opt->excludes(at_opt);
  caps_flags.attach(symbol);

  auto* expand = app.add_subcommand("expand", "Kernel families of a basis-action table");
  expand->add_option("file", files, "Operator file")->required()->expected(1);
  caps_flags.attach(expand);

  auto* delta = app.add_subcommand("delta", "Hochschild coboundary of a cochain");
  bool delta_kernels = false;
  delta->add_option("file", files, "Operator file")->required()->expected(1);
  delta->add_flag("--kernels", delta_kernels, "Emit the coboundary as a kernel family");
  caps_flags.attach(delta);

  auto* cohomology = app.add_subcommand("cohomology", "Dimensions of a truncated (l, m) cohomology stratum");
  std::size_t coh_r = 1;
  std::uint32_t coh_l = 0, coh_m = 0, coh_modes = 1;
  std::optional<std::uint32_t> coh_degree;
  std::string coh_route = "table";
  cohomology->add_option("--r", coh_r, "Cochain arity")->required();
  cohomology->add_option("--l", coh_l, "Creation degree")->required();
  cohomology->add_option("--m", coh_m, "Total annihilation degree")->required();
  cohomology->add_option("--modes", coh_modes, "Mode cap K")->required();
  cohomology->add_option("--max-degree", coh_degree, "Degree cap D (default l+m+r+1)");
  cohomology->add_option("--route", coh_route, "table or polydifferential")
      ->check(CLI::IsMember({"table", "polydifferential"}));

  auto* check = app.add_subcommand("check", "Run a seeded property-check suite");
  std::string check_suite = "all";
  std::uint64_t check_seed = 1;
  std::size_t check_cases = 50;
  std::string check_mutation = "none";
  check->add_option("--suite", check_suite, "algebra, pairing, ccr, symbol, expansion, hochschild or all");
  check->add_option("--seed", check_seed, "Run seed");
  check->add_option("--cases", check_cases, "Cases per invariant");
  check->add_option("--mutate", check_mutation, "Inject a defect: none, annihilation-constant, coboundary-sign")
      ->check(CLI::IsMember({"none", "annihilation-constant", "coboundary-sign"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  int status = 0;
  try {
    if (*wick) {
      const auto a = hida::json::fock_vector_from_json(hida::json::read_file(files[0]));
      const auto b = hida::json::fock_vector_from_json(hida::json::read_file(files[1]));
      emit(hida::json::to_json(hida::wick_product(a, b)));
    } else if (*coherent_cmd) {
      const auto xi = hida::json::test_vector_from_json(hida::json::read_file(files[0]));
      emit(hida::json::to_json(hida::coherent(xi, coherent_degree)));
    } else if (*pair) {
      const auto a = hida::json::fock_vector_from_json(hida::json::read_file(files[0]));
      const auto b = hida::json::fock_vector_from_json(hida::json::read_file(files[1]));
      emit(hida::json::to_json(hida::pairing(a, b)));
    } else if (*norm) {
      const mpq_class c = hida::parse_rational(norm_c);
      if (c <= 0) throw hida::ParseError("--c must be positive");
      const auto x = hida::json::fock_vector_from_json(hida::json::read_file(files[0]));
      emit(Json{{"value", hida::rational_string(hida::norm_squared(x, norm_k, c))}});
    } else if (*apply) {
      const Operator op = load_operator(files[0]);
      std::vector<hida::FockVector> args;
      for (std::size_t i = 1; i < files.size(); ++i) {
        args.push_back(hida::json::fock_vector_from_json(hida::json::read_file(files[i])));
      }
      if (const auto* k = std::get_if<hida::KernelFamily>(&op)) {
        emit(hida::json::to_json(hida::apply_kernel(*k, args)));
      } else {
        emit(hida::json::to_json(hida::apply_table(std::get<hida::BasisActionTable>(op), args)));
      }
    } else if (*symbol) {
      const Operator op = load_operator(symbol_op);
      if (!symbol_at.empty()) {
        std::vector<hida::TestVector> xis;
        std::uint32_t point_modes = 0;
        for (const auto& f : symbol_at) {
          xis.push_back(hida::json::test_vector_from_json(hida::json::read_file(f)));
          point_modes = std::max(point_modes, modes_of(xis.back()));
        }
        const auto t = as_table(op, caps_flags, point_modes);
        if (xis.size() != t.arity() + 1) {
          throw hida::ArityError("--at needs " + std::to_string(t.arity() + 1) + " files (one xi per slot, then eta)");
        }
        const hida::TestVector eta = xis.back();
        xis.pop_back();
        emit(hida::json::to_json(hida::symbol_numeric(t, xis, eta)));
      } else {
        emit(hida::json::to_json(hida::symbol_poly(as_table(op, caps_flags))));
      }
    } else if (*expand) {
      const auto t = as_table(load_operator(files[0]), caps_flags);
      emit(hida::json::to_json(hida::extract_kernels(t), &t.caps()));
    } else if (*delta) {
      const Operator op = load_operator(files[0]);
      const auto* k = std::get_if<hida::KernelFamily>(&op);
      if (k != nullptr && delta_kernels) {
        const auto caps = caps_flags.resolve(*k, static_cast<std::uint32_t>(k->arity()) + 1);
        emit(hida::json::to_json(hida::kernel_coboundary(*k, caps), &caps));
      } else {
        const hida::Cochain x(k != nullptr ? hida::table_from_kernel(
                                                 *k, caps_flags.resolve(*k, static_cast<std::uint32_t>(k->arity()) + 1))
                                           : std::get<hida::BasisActionTable>(op));
        const hida::Cochain dx = hida::coboundary(x);
        if (delta_kernels) {
          emit(hida::json::to_json(dx.kernels(), &dx.caps()));
        } else {
          emit(hida::json::to_json(dx.table()));
        }
      }
    } else if (*cohomology) {
      const hida::TruncationCaps caps{coh_modes,
                                      coh_degree.value_or(coh_l + coh_m + static_cast<std::uint32_t>(coh_r) + 1)};
      const auto route =
          coh_route == "table" ? hida::ComplexRoute::table : hida::ComplexRoute::polydifferential;
      emit(hida::json::to_json(hida::cohomology_dims(coh_r, coh_l, coh_m, caps, route)));
    } else if (*check) {
      hida::Mutation mutation = hida::Mutation::none;
      if (check_mutation == "annihilation-constant") mutation = hida::Mutation::annihilation_constant;
      if (check_mutation == "coboundary-sign") mutation = hida::Mutation::coboundary_sign;
      const auto report = hida::run_suite(check_suite, check_seed, check_cases, mutation);
      emit(hida::to_json(report));
      if (!report.passed()) status = kExitFailure;
    }
  } catch (const std::invalid_argument& e) {  // ParseError, ArityError
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {  // TruncationError
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "elapsed %.3f s\n", elapsed);
  return status;
}
