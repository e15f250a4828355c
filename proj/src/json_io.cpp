#include "hida/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hida/error.hpp"

namespace hida::json {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::uint32_t unsigned_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  const auto v = j.get<unsigned long long>();
  if (v > 0xFFFFFFFFULL) throw ParseError(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  return a;
}

Scalar coefficient_of(const Json& j) {
  const Json& re = field(j, "re");
  const Json im = j.contains("im") ? j.at("im") : Json("0");
  if (!re.is_string() || !im.is_string()) throw ParseError("coefficients must be rational strings");
  return Scalar::parse(re.get<std::string>(), im.get<std::string>());
}

void put_coefficient(Json& j, const Scalar& c) {
  j["re"] = rational_string(c.re());
  j["im"] = rational_string(c.im());
}

std::vector<MultiIndex> tuple_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of multi-indices");
  std::vector<MultiIndex> out;
  for (const auto& a : j) out.push_back(multi_index_from_json(a));
  return out;
}

Json tuple_to_json(const std::vector<MultiIndex>& tuple) {
  Json out = Json::array();
  for (const auto& a : tuple) out.push_back(to_json(a));
  return out;
}

}  // namespace

Json to_json(const MultiIndex& a) {
  Json out = Json::array();
  for (const auto& p : a.pairs()) out.push_back(Json::array({p.mode, p.count}));
  return out;
}

MultiIndex multi_index_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("multi-index must be an array of [mode, multiplicity] pairs");
  std::vector<std::pair<Mode, std::uint32_t>> raw;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("multi-index entries must be [mode, multiplicity]");
    raw.emplace_back(unsigned_of(p[0], "mode"), unsigned_of(p[1], "multiplicity"));
  }
  return MultiIndex(std::move(raw));
}

Json to_json(const Scalar& c) {
  Json out = Json::object();
  put_coefficient(out, c);
  return out;
}

Scalar scalar_from_json(const Json& j) { return coefficient_of(j); }

Json to_json(const TruncationCaps& caps) {
  return Json{{"max_mode", caps.max_mode}, {"max_degree", caps.max_degree}};
}

TruncationCaps caps_from_json(const Json& j) {
  return TruncationCaps{unsigned_of(field(j, "max_mode"), "max_mode"),
                        unsigned_of(field(j, "max_degree"), "max_degree")};
}

Json to_json(const FockVector& v) {
  Json terms = Json::array();
  for (const auto& [a, c] : v.terms()) {
    Json t = Json::object();
    t["index"] = to_json(a);
    put_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

FockVector fock_vector_from_json(const Json& j) {
  FockVector v;
  for (const auto& t : array_field(j, "terms")) v.add(multi_index_from_json(field(t, "index")), coefficient_of(t));
  return v;
}

Json to_json(const TestVector& v) {
  Json coeffs = Json::array();
  for (const auto& [i, c] : v.coeffs()) {
    Json t = Json::object();
    t["mode"] = i;
    put_coefficient(t, c);
    coeffs.push_back(std::move(t));
  }
  return Json{{"coeffs", std::move(coeffs)}};
}

TestVector test_vector_from_json(const Json& j) {
  TestVector v;
  for (const auto& t : array_field(j, "coeffs")) v.add(unsigned_of(field(t, "mode"), "mode"), coefficient_of(t));
  return v;
}

Json to_json(const KernelFamily& k, const TruncationCaps* caps) {
  Json blocks = Json::array();
  for (const auto& [block, entries] : k.blocks()) {
    Json b = Json::object();
    b["l"] = block.l;
    b["M"] = block.M;
    if (caps != nullptr) b["reliable"] = block_reliable(block, *caps);
    Json list = Json::array();
    for (const auto& [key, c] : entries) {
      Json e = Json::object();
      e["I"] = to_json(key.creation);
      e["J"] = tuple_to_json(key.annihilation);
      put_coefficient(e, c);
      list.push_back(std::move(e));
    }
    b["entries"] = std::move(list);
    blocks.push_back(std::move(b));
  }
  Json out = Json::object();
  out["arity"] = k.arity();
  out["blocks"] = std::move(blocks);
  return out;
}

KernelFamily kernel_family_from_json(const Json& j) {
  const std::size_t arity = unsigned_of(field(j, "arity"), "arity");
  KernelFamily k(arity);
  for (const auto& b : array_field(j, "blocks")) {
    const std::uint32_t l = unsigned_of(field(b, "l"), "l");
    std::vector<std::uint32_t> M;
    for (const auto& mj : array_field(b, "M")) M.push_back(unsigned_of(mj, "M"));
    if (M.size() != arity) throw ParseError("block M has the wrong length for the family arity");
    for (const auto& e : array_field(b, "entries")) {
      KernelKey key{multi_index_from_json(field(e, "I")), tuple_from_json(field(e, "J"))};
      if (key.annihilation.size() != arity) throw ParseError("entry J has the wrong length for the family arity");
      if (degree(key.creation) != l) throw ParseError("entry I does not have the block degree l");
      for (std::size_t s = 0; s < arity; ++s) {
        if (degree(key.annihilation[s]) != M[s]) throw ParseError("entry J does not match the block degrees M");
      }
      k.add(key, coefficient_of(e));
    }
  }
  return k;
}

Json to_json(const BasisActionTable& t) {
  Json rows = Json::array();
  for (const auto& [tuple, value] : t.rows()) {
    Json r = Json::object();
    r["args"] = tuple_to_json(tuple);
    r["value"] = to_json(value);
    rows.push_back(std::move(r));
  }
  Json out = Json::object();
  out["arity"] = t.arity();
  out["caps"] = to_json(t.caps());
  out["rows"] = std::move(rows);
  return out;
}

BasisActionTable table_from_json(const Json& j) {
  const std::size_t arity = unsigned_of(field(j, "arity"), "arity");
  BasisActionTable t(arity, caps_from_json(field(j, "caps")));
  for (const auto& r : array_field(j, "rows")) {
    const auto tuple = tuple_from_json(field(r, "args"));
    if (tuple.size() != arity) throw ParseError("table row has the wrong number of arguments");
    try {
      t.set(tuple, t.at(tuple) + fock_vector_from_json(field(r, "value")));
    } catch (const TruncationError& e) {
      throw ParseError(std::string("table row outside its caps: ") + e.what());
    }
  }
  return t;
}

Json to_json(const SymbolPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t = Json::object();
    t["xi"] = tuple_to_json(m.xi);
    t["eta"] = to_json(m.eta);
    put_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["arity"] = p.arity();
  out["caps"] = to_json(p.caps());
  out["terms"] = std::move(terms);
  return out;
}

SymbolPolynomial symbol_from_json(const Json& j) {
  const std::size_t arity = unsigned_of(field(j, "arity"), "arity");
  std::vector<std::pair<Monomial, Scalar>> parsed;
  TruncationCaps inferred{1, 0};
  for (const auto& t : array_field(j, "terms")) {
    Monomial m{tuple_from_json(field(t, "xi")), multi_index_from_json(field(t, "eta"))};
    if (m.xi.size() != arity) throw ParseError("symbol term has the wrong number of xi slots");
    inferred.max_degree = std::max({inferred.max_degree, m.xi_degree(), degree(m.eta)});
    for (const auto* a : {&m.eta}) {
      if (auto top = a->max_mode()) inferred.max_mode = std::max(inferred.max_mode, *top + 1);
    }
    for (const auto& a : m.xi) {
      if (auto top = a.max_mode()) inferred.max_mode = std::max(inferred.max_mode, *top + 1);
    }
    parsed.emplace_back(std::move(m), coefficient_of(t));
  }
  SymbolPolynomial p(arity, j.contains("caps") ? caps_from_json(j.at("caps")) : inferred);
  for (const auto& [m, c] : parsed) {
    if (!p.in_region(m)) throw ParseError("symbol term outside its caps");
    p.add(m, c);
  }
  return p;
}

Json to_json(const CohomologyDims& dims) {
  Json cocycles = Json::array();
  for (const auto& k : dims.basis_cocycles) cocycles.push_back(to_json(k));
  Json out = Json::object();
  out["dim_ker"] = dims.dim_ker;
  out["dim_im_prev"] = dims.dim_im_prev;
  out["dim_H"] = dims.dim_H;
  out["basis_cocycles"] = std::move(cocycles);
  return out;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace hida::json
