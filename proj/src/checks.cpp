#include "hida/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "hida/error.hpp"
#include "hida/expansion.hpp"
#include "hida/hochschild.hpp"
#include "hida/random.hpp"

namespace hida {

namespace {

using json::Json;

struct Mismatch {
  Json inputs;
  Json expected;
  Json got;
};
using Outcome = std::optional<Mismatch>;

struct Context {
  AnnihilationConstant constant = AnnihilationConstant::multiplicity;
  CoboundarySign sign = CoboundarySign::alternating;
};

struct Invariant {
  const char* name;
  std::function<Outcome(Generator&, const Context&)> run;
};

constexpr std::size_t kRecordedPerInvariant = 3;

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

Json text(const std::string& s) { return Json(s); }

Json tuple_json(const std::vector<FockVector>& args) {
  Json out = Json::array();
  for (const auto& a : args) out.push_back(json::to_json(a));
  return out;
}

template <class T>
Outcome expect_equal(Json inputs, const T& expected, const T& got) {
  if (expected == got) return std::nullopt;
  return Mismatch{std::move(inputs), json::to_json(expected), json::to_json(got)};
}

Scalar truncated_exp(const Scalar& s, std::uint32_t n) {
  Scalar sum, term(1);
  for (std::uint32_t k = 0; k <= n; ++k) {
    if (k > 0) term = term * s / Scalar(static_cast<long>(k));
    sum += term;
  }
  return sum;
}

std::vector<TestVector> test_vectors(Generator& g, std::size_t n, std::uint32_t modes) {
  std::vector<TestVector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(g.test_vector(modes));
  return out;
}

BasisActionTable zero_like(const BasisActionTable& t) { return BasisActionTable(t.arity(), t.caps()); }

// ---------------------------------------------------------------- algebra

const TruncationCaps kAlgebraCaps{4, 3};

std::vector<Invariant> algebra_suite() {
  return {
      {"concat_commutative_associative",
       [](Generator& g, const Context&) -> Outcome {
         const auto a = g.multi_index_up_to(4, 3), b = g.multi_index_up_to(4, 3), c = g.multi_index_up_to(4, 3);
         const Json in{json::to_json(a), json::to_json(b), json::to_json(c)};
         if (auto m = expect_equal(in, concat(a, b), concat(b, a))) return m;
         if (auto m = expect_equal(in, concat(a, concat(b, c)), concat(concat(a, b), c))) return m;
         return expect_equal(in, a, concat(a, MultiIndex{}));
       }},
      {"degree_additive",
       [](Generator& g, const Context&) -> Outcome {
         const auto a = g.multi_index_up_to(4, 4), b = g.multi_index_up_to(4, 4);
         if (degree(concat(a, b)) == degree(a) + degree(b)) return std::nullopt;
         return Mismatch{Json{json::to_json(a), json::to_json(b)}, degree(a) + degree(b), degree(concat(a, b))};
       }},
      {"hida_weight_multiplicative",
       [](Generator& g, const Context&) -> Outcome {
         const auto a = g.multi_index_up_to(4, 4), b = g.multi_index_up_to(4, 4);
         const mpz_class expected = hida_weight(a) * hida_weight(b), got = hida_weight(concat(a, b));
         if (expected == got) return std::nullopt;
         return Mismatch{Json{json::to_json(a), json::to_json(b)}, expected.get_str(), got.get_str()};
       }},
      {"factorial_bound",
       [](Generator& g, const Context&) -> Outcome {
         const auto a = g.multi_index_up_to(4, 4), b = g.multi_index_up_to(4, 4);
         mpz_class bound;
         mpz_ui_pow_ui(bound.get_mpz_t(), 2, degree(a) + degree(b));
         bound *= factorial_degree(a) * factorial_degree(b);
         const mpz_class got = factorial_degree(concat(a, b));
         if (got <= bound) return std::nullopt;
         return Mismatch{Json{json::to_json(a), json::to_json(b)}, "<= " + bound.get_str(), got.get_str()};
       }},
      {"decomposition_count",
       [](Generator& g, const Context&) -> Outcome {
         const auto a = g.multi_index_up_to(4, 5);
         std::size_t expected = 1;
         for (const auto& p : a.pairs()) expected *= p.count + 1;
         const std::size_t got = decompositions(a).size();
         if (got == expected && got <= (std::size_t{1} << degree(a))) return std::nullopt;
         return Mismatch{json::to_json(a), expected, got};
       }},
      {"wick_commutative_associative",
       [](Generator& g, const Context&) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 3), y = g.fock_vector(kAlgebraCaps, 3),
                    z = g.fock_vector(kAlgebraCaps, 3);
         const Json in = tuple_json({x, y, z});
         if (auto m = expect_equal(in, wick_product(x, y), wick_product(y, x))) return m;
         return expect_equal(in, wick_product(x, wick_product(y, z)), wick_product(wick_product(x, y), z));
       }},
      {"wick_power_is_iterated_product",
       [](Generator& g, const Context&) -> Outcome {
         const auto xi = g.test_vector(4);
         const std::uint32_t n = g.uniform(0, 4);
         FockVector product = FockVector::vacuum();
         for (std::uint32_t k = 0; k < n; ++k) product = wick_product(product, xi.as_fock());
         return expect_equal(Json{json::to_json(xi), n}, product, wick_power(xi, n));
       }},
      {"coherent_product",
       [](Generator& g, const Context&) -> Outcome {
         const auto xi = g.test_vector(4), eta = g.test_vector(4);
         const std::uint32_t n = g.uniform(0, 5);
         return expect_equal(Json{json::to_json(xi), json::to_json(eta), n}, coherent(xi + eta, n),
                             truncate_degree(wick_product(coherent(xi, n), coherent(eta, n)), n));
       }},
      {"wick_norm_bound",
       [](Generator& g, const Context&) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 3), y = g.fock_vector(kAlgebraCaps, 3);
         const std::uint32_t k = g.uniform(0, 2);
         static const mpq_class choices[] = {mpq_class(1, 2), mpq_class(1), mpq_class(2)};
         const mpq_class c = choices[g.uniform(0, 2)];
         const mpq_class lhs = norm_squared(wick_product(x, y), k, c);
         const mpq_class rhs = norm_squared(x, k, 2 * c) * norm_squared(y, k, 2 * c);
         if (lhs <= rhs) return std::nullopt;
         return Mismatch{Json{json::to_json(x), json::to_json(y), k, rational_string(c)}, "<= " + rational_string(rhs),
                         rational_string(lhs)};
       }},
      {"json_round_trip",
       [](Generator& g, const Context&) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 4);
         const auto k = g.kernel_family(g.uniform(0, 2), 3, 3, 3);
         const auto t = g.table(1, TruncationCaps{2, 2}, 3);
         const auto reparse = [](const Json& j) { return Json::parse(json::dump(j)); };
         if (auto m = expect_equal(Json{}, x, json::fock_vector_from_json(reparse(json::to_json(x))))) return m;
         if (auto m = expect_equal(Json{}, t, json::table_from_json(reparse(json::to_json(t))))) return m;
         const auto k2 = json::kernel_family_from_json(reparse(json::to_json(k)));
         if (k == k2) return std::nullopt;
         return Mismatch{Json{}, json::to_json(k), json::to_json(k2)};
       }},
  };
}

// ---------------------------------------------------------------- pairing

std::vector<Invariant> pairing_suite() {
  return {
      {"exponential_pairing",
       [](Generator& g, const Context&) -> Outcome {
         const auto xi = g.test_vector(4), eta = g.test_vector(4);
         const std::uint32_t n = g.uniform(0, 6);
         return expect_equal(Json{json::to_json(xi), json::to_json(eta), n}, truncated_exp(inner(xi, eta), n),
                             pairing(coherent(xi, n), coherent(eta, n)));
       }},
      {"s_transform_multiplicative",
       [](Generator& g, const Context&) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 3), y = g.fock_vector(kAlgebraCaps, 3);
         const auto eta = g.test_vector(4);
         return expect_equal(Json{json::to_json(x), json::to_json(y), json::to_json(eta)},
                             s_transform(x, eta) * s_transform(y, eta), s_transform(wick_product(x, y), eta));
       }},
      {"s_transform_is_coherent_pairing",
       [](Generator& g, const Context&) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 4);
         const auto eta = g.test_vector(4);
         return expect_equal(Json{json::to_json(x), json::to_json(eta)}, pairing(x, coherent(eta, 3)),
                             s_transform(x, eta));
       }},
      {"pairing_symmetric_bilinear",
       [](Generator& g, const Context&) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 3), y = g.fock_vector(kAlgebraCaps, 3),
                    z = g.fock_vector(kAlgebraCaps, 3);
         const Scalar c = g.scalar();
         const Json in = tuple_json({x, y, z});
         if (auto m = expect_equal(in, pairing(x, y), pairing(y, x))) return m;
         return expect_equal(in, c * pairing(x, y) + pairing(x, z), pairing(x, c * y + z));
       }},
  };
}

// ---------------------------------------------------------------- ccr

std::vector<Invariant> ccr_suite() {
  return {
      {"ccr",
       [](Generator& g, const Context& ctx) -> Outcome {
         const Mode i = g.uniform(0, 3), j = g.uniform(0, 3);
         const auto a = g.multi_index_up_to(4, 5);
         const auto e = FockVector::basis(a);
         const auto got = apply_annihilation(i, apply_creation(j, e), ctx.constant) -
                          apply_creation(j, apply_annihilation(i, e, ctx.constant));
         return expect_equal(Json{i, j, json::to_json(a)}, i == j ? e : FockVector{}, got);
       }},
      {"adjointness",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 3);
         const Mode i = g.uniform(0, 3);
         // overlap y with a*_i x so the pairing sees the annihilation constant
         const auto y = apply_creation(i, x) + g.fock_vector(TruncationCaps{4, 4}, 3);
         return expect_equal(Json{json::to_json(x), json::to_json(y), i}, pairing(apply_creation(i, x), y),
                             pairing(x, apply_annihilation(i, y, ctx.constant)));
       }},
      {"coherent_eigenvector",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto xi = g.test_vector(4);
         const std::uint32_t n = g.uniform(1, 5);
         const Mode i = g.uniform(0, 3);
         return expect_equal(Json{json::to_json(xi), n, i}, xi.coefficient(i) * coherent(xi, n - 1),
                             truncate_degree(apply_annihilation(i, coherent(xi, n), ctx.constant), n - 1));
       }},
      {"wick_derivation",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto x = g.fock_vector(kAlgebraCaps, 3), y = g.fock_vector(kAlgebraCaps, 3);
         const Mode i = g.uniform(0, 3);
         const auto a = [&](const FockVector& v) { return apply_annihilation(i, v, ctx.constant); };
         return expect_equal(Json{json::to_json(x), json::to_json(y), i}, wick_product(a(x), y) + wick_product(x, a(y)),
                             a(wick_product(x, y)));
       }},
      {"kernel_multilinear",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto k = g.kernel_family(2, 3, 3, 3);
         const TruncationCaps caps{3, 3};
         const auto x = g.fock_vector(caps, 2), x2 = g.fock_vector(caps, 2), y = g.fock_vector(caps, 2);
         const Scalar c = g.scalar();
         const auto ap = [&](const FockVector& u, const FockVector& v) {
           const FockVector args[] = {u, v};
           return apply_kernel(k, args, ctx.constant);
         };
         const Json in{json::to_json(k), tuple_json({x, x2, y})};
         if (auto m = expect_equal(in, ap(x, y) + ap(x2, y), ap(x + x2, y))) return m;
         return expect_equal(in, c * ap(x, y), ap(x, c * y));
       }},
  };
}

// ---------------------------------------------------------------- symbol

const TruncationCaps kSymbolCaps{3, 3};

std::vector<Invariant> symbol_suite() {
  return {
      {"symbol_poly_matches_numeric",
       [](Generator& g, const Context&) -> Outcome {
         const std::size_t r = g.uniform(1, 2);
         const auto t = g.table(r, kSymbolCaps, 4);
         const auto xis = test_vectors(g, r, kSymbolCaps.max_mode);
         const auto eta = g.test_vector(4);
         return expect_equal(Json{json::to_json(t), json::to_json(eta)}, symbol_numeric(t, xis, eta),
                             symbol_poly(t).evaluate(xis, eta));
       }},
      {"kernel_reduced_symbol",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto k = g.kernel_family(g.uniform(1, 2), kSymbolCaps.max_mode, kSymbolCaps.max_degree, 2);
         return expect_equal(json::to_json(k), kernel_polynomial(k, kSymbolCaps),
                             reduced_symbol(symbol_poly(table_from_kernel(k, kSymbolCaps, ctx.constant))));
       }},
      {"wick_symbol_factorizes",
       [](Generator& g, const Context& ctx) -> Outcome {
         const TruncationCaps caps{g.uniform(1, 3), g.uniform(0, 3)};
         return expect_equal(json::to_json(caps), exp_pairing(2, caps, Scalar(1)),
                             symbol_poly(table_from_kernel(KernelFamily::wick_multiplication(2), caps, ctx.constant)));
       }},
      {"polynomial_ring_axioms",
       [](Generator& g, const Context&) -> Outcome {
         const auto p = kernel_polynomial(g.kernel_family(1, 3, 3, 3), kSymbolCaps);
         const auto q = kernel_polynomial(g.kernel_family(1, 3, 3, 3), kSymbolCaps);
         const auto s = kernel_polynomial(g.kernel_family(1, 3, 3, 3), kSymbolCaps);
         const Json in{json::to_json(p), json::to_json(q), json::to_json(s)};
         if (auto m = expect_equal(in, p * q, q * p)) return m;
         if (auto m = expect_equal(in, (p * q) * s, p * (q * s))) return m;
         return expect_equal(in, p * q + p * s, p * (q + s));
       }},
  };
}

// ---------------------------------------------------------------- expansion

std::vector<Invariant> expansion_suite() {
  return {
      {"kernel_round_trip",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto k = g.kernel_family(g.uniform(1, 2), kSymbolCaps.max_mode, kSymbolCaps.max_degree, 3);
         return expect_equal(json::to_json(k), k, extract_kernels(table_from_kernel(k, kSymbolCaps, ctx.constant)));
       }},
      {"table_round_trip",
       [](Generator& g, const Context&) -> Outcome {
         const auto t = g.table(g.uniform(1, 2), kSymbolCaps, 3);
         return expect_equal(json::to_json(t), t, reconstruct(extract_kernels(t), t.caps()));
       }},
      {"degree_bookkeeping",
       [](Generator& g, const Context&) -> Outcome {
         const auto t = g.table(g.uniform(1, 2), kSymbolCaps, 3);
         for (const auto& [block, entries] : extract_kernels(t).blocks()) {
           for (const auto& [key, c] : entries) {
             if (KernelFamily::block_of(key) != block) {
               return Mismatch{json::to_json(t), Json{block.l, block.M}, Json{key.l(), KernelFamily::block_of(key).M}};
             }
           }
         }
         return std::nullopt;
       }},
      {"extraction_linear",
       [](Generator& g, const Context&) -> Outcome {
         const std::size_t r = g.uniform(1, 2);
         const auto t1 = g.table(r, kSymbolCaps, 3), t2 = g.table(r, kSymbolCaps, 3);
         return expect_equal(Json{json::to_json(t1), json::to_json(t2)}, extract_kernels(t1) + extract_kernels(t2),
                             extract_kernels(t1 + t2));
       }},
  };
}

// ---------------------------------------------------------------- hochschild

const TruncationCaps kCochainCaps{2, 3};

std::vector<Invariant> hochschild_suite() {
  return {
      {"delta_squared_zero",
       [](Generator& g, const Context& ctx) -> Outcome {
         const Cochain x(g.table(g.uniform(1, 2), kCochainCaps, 3));
         const auto dd = coboundary(coboundary(x, ctx.sign), ctx.sign).table();
         return expect_equal(json::to_json(x.table()), zero_like(dd), dd);
       }},
      {"table_and_symbol_delta_agree",
       [](Generator& g, const Context& ctx) -> Outcome {
         const Cochain x(g.table(g.uniform(1, 2), kCochainCaps, 3));
         return expect_equal(json::to_json(x.table()),
                             table_from_symbol(symbol_coboundary(symbol_poly(x.table()), ctx.sign)),
                             coboundary(x, ctx.sign).table());
       }},
      {"kernel_delta_agrees",
       [](Generator& g, const Context& ctx) -> Outcome {
         const TruncationCaps caps{2, 4};
         const auto k = g.kernel_family(g.uniform(1, 2), caps.max_mode, 2, 3);
         const Cochain x(table_from_kernel(k, caps, ctx.constant));
         return expect_equal(json::to_json(k), kernel_coboundary(k, caps, ctx.sign),
                             coboundary(x, ctx.sign).kernels());
       }},
      {"extraction_commutes_with_delta",
       [](Generator& g, const Context& ctx) -> Outcome {
         const Cochain x(g.table(g.uniform(1, 2), kCochainCaps, 3));
         return expect_equal(json::to_json(x.table()), kernel_coboundary(x.kernels(), kCochainCaps, ctx.sign),
                             coboundary(x, ctx.sign).kernels());
       }},
      {"stratum_preserved",
       [](Generator& g, const Context& ctx) -> Outcome {
         const std::size_t r = g.uniform(1, 2);
         const std::uint32_t l = g.uniform(0, 2), m = g.uniform(0, 2);
         const TruncationCaps caps{2, static_cast<std::uint32_t>(l + m + r + 1)};
         const auto basis = stratum_basis(r, l, m, caps.max_mode);
         KernelFamily k(r);
         k.add(basis[g.uniform(0, static_cast<std::uint32_t>(basis.size() - 1))], g.nonzero_rational());
         const Cochain dx = coboundary(Cochain(table_from_kernel(k, caps, ctx.constant)), ctx.sign);
         if (dx.table().rows().empty()) return std::nullopt;
         const auto got = polydiff_degree(dx);
         if (got && got->l == l && got->m == m) return std::nullopt;
         return Mismatch{json::to_json(k), Json{l, m}, got ? Json{got->l, got->m} : Json(nullptr)};
       }},
      {"commutator_coboundary_zero",
       [](Generator& g, const Context& ctx) -> Outcome {
         const auto phi = g.fock_vector(kCochainCaps, 3);
         const auto d = coboundary(Cochain::element(phi, kCochainCaps), ctx.sign).table();
         return expect_equal(json::to_json(phi), zero_like(d), d);
       }},
  };
}

const std::map<std::string, std::function<std::vector<Invariant>()>, std::less<>>& suites() {
  static const std::map<std::string, std::function<std::vector<Invariant>()>, std::less<>> table{
      {"algebra", algebra_suite}, {"pairing", pairing_suite},     {"ccr", ccr_suite},
      {"symbol", symbol_suite},   {"expansion", expansion_suite}, {"hochschild", hochschild_suite},
  };
  return table;
}

void run_invariants(const std::vector<Invariant>& invariants, std::uint64_t seed, std::size_t cases,
                    const Context& ctx, CheckReport& report) {
  for (const auto& inv : invariants) {
    InvariantResult result{inv.name, cases, 0};
    const std::uint64_t base = case_seed(seed, name_hash(inv.name));
    for (std::size_t i = 0; i < cases; ++i) {
      const std::uint64_t s = case_seed(base, i);
      Generator g(s);
      Outcome outcome;
      try {
        outcome = inv.run(g, ctx);
      } catch (const std::exception& e) {
        outcome = Mismatch{Json(nullptr), text("no exception"), text(e.what())};
      }
      if (!outcome) continue;
      if (++result.failures <= kRecordedPerInvariant) {
        report.failures.push_back(CheckFailure{inv.name, s, std::move(outcome->inputs), std::move(outcome->expected),
                                               std::move(outcome->got)});
      }
    }
    report.invariants.push_back(std::move(result));
  }
}

}  // namespace

bool CheckReport::passed() const {
  for (const auto& inv : invariants) {
    if (inv.failures != 0) return false;
  }
  return true;
}

std::size_t CheckReport::failures_of(std::string_view invariant) const {
  for (const auto& inv : invariants) {
    if (inv.name == invariant) return inv.failures;
  }
  return 0;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "pairing",    "ccr", "symbol",
                                              "expansion", "hochschild", "all"};
  return names;
}

CheckReport run_suite(std::string_view suite, std::uint64_t seed, std::size_t cases, Mutation mutation) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  if (mutation == Mutation::annihilation_constant) ctx.constant = AnnihilationConstant::unit;
  if (mutation == Mutation::coboundary_sign) ctx.sign = CoboundarySign::dropped;

  CheckReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  report.cases = cases;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") run_invariants(suites().at(name)(), seed, cases, ctx, report);
    }
  } else {
    auto it = suites().find(suite);
    if (it == suites().end()) throw ParseError("unknown suite \"" + std::string(suite) + "\"");
    run_invariants(it->second(), seed, cases, ctx, report);
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json::Json to_json(const CheckReport& report) {
  Json invariants = Json::array();
  for (const auto& inv : report.invariants) {
    Json j = Json::object();
    j["name"] = inv.name;
    j["status"] = inv.failures == 0 ? "pass" : "fail";
    j["cases"] = inv.cases;
    j["failures"] = inv.failures;
    invariants.push_back(std::move(j));
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json j = Json::object();
    j["invariant"] = f.invariant;
    j["seed"] = f.seed;
    j["inputs"] = f.inputs;
    j["expected"] = f.expected;
    j["got"] = f.got;
    failures.push_back(std::move(j));
  }
  Json out = Json::object();
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["cases"] = report.cases;
  out["passed"] = report.passed();
  out["invariants"] = std::move(invariants);
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace hida
