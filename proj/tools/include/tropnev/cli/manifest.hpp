#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropnev/curves/curves.hpp"
#include "tropnev/polyseg/ops.hpp"

namespace tropnev::cli {

using polyseg::PiecewiseFunction;

// A tropical product is kept alongside the function it expands to.
struct NamedProduct {
  polyseg::TropicalProductSpec spec;
  PiecewiseFunction function;
};

using PolynomialDef = std::variant<curves::TropicalPolynomialMap, curves::FermatForm>;

// All names share one namespace. Definitions keep their file order.
struct Manifest {
  std::vector<std::pair<std::string, PiecewiseFunction>> functions;
  std::vector<std::pair<std::string, NamedProduct>> products;
  std::vector<std::pair<std::string, std::vector<std::string>>> curves;
  std::vector<std::pair<std::string, PolynomialDef>> polynomials;

  // Functions and tropical products by name. Throws UnknownReference.
  const PiecewiseFunction& function(const std::string& name) const;
  curves::TropicalCurve curve(const std::string& name) const;
  const PolynomialDef& polynomial(const std::string& name) const;

  bool operator==(const Manifest& other) const;
};

// Throws SyntaxError (with byte offset for malformed JSON), UnknownReference,
// DuplicateName and DiscontinuityDetected.
Manifest parse_manifest(std::string_view text);
std::string serialize_manifest(const Manifest& manifest);

}  // namespace tropnev::cli
