#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hida/fock.hpp"
#include "hida/hochschild.hpp"
#include "hida/operators.hpp"
#include "hida/symbolcalc.hpp"

namespace hida::json {

using Json = nlohmann::ordered_json;

// Every *_from_json throws ParseError on malformed or inconsistent input.

Json to_json(const MultiIndex& a);
MultiIndex multi_index_from_json(const Json& j);

Json to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j);

Json to_json(const TruncationCaps& caps);
TruncationCaps caps_from_json(const Json& j);

Json to_json(const FockVector& v);
FockVector fock_vector_from_json(const Json& j);

Json to_json(const TestVector& v);
TestVector test_vector_from_json(const Json& j);

/// With `caps`, every block carries a "reliable" flag.
Json to_json(const KernelFamily& k, const TruncationCaps* caps = nullptr);
KernelFamily kernel_family_from_json(const Json& j);

Json to_json(const BasisActionTable& t);
BasisActionTable table_from_json(const Json& j);

Json to_json(const SymbolPolynomial& p);
SymbolPolynomial symbol_from_json(const Json& j);

Json to_json(const CohomologyDims& dims);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_file(const std::filesystem::path& path);

/// Canonical single-line text plus trailing newline.
std::string dump(const Json& j);

}  // namespace hida::json
