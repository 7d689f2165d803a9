#include "tropnev/cli/manifest.hpp"

#include <algorithm>
#include <set>

#include "tropnev/cli/render.hpp"
#include "tropnev/error.hpp"

namespace tropnev::cli {

using numeric::Polynomial;
using numeric::Rational;
using numeric::RealScalar;

namespace {

template <class T>
const T* find_named(const std::vector<std::pair<std::string, T>>& list, const std::string& name) {
  for (const auto& [n, v] : list)
    if (n == name) return &v;
  return nullptr;
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::SyntaxError, where + ": missing \"" + key + "\"");
  return obj.at(key);
}

const Json& array_member(const Json& obj, const char* key, const std::string& where) {
  const Json& v = member(obj, key, where);
  if (!v.is_array()) throw Error(ErrorCode::SyntaxError, where + ": \"" + key + "\" must be an array");
  return v;
}

std::string name_of(const Json& obj, const std::string& where) {
  const Json& n = member(obj, "name", where);
  if (!n.is_string() || n.get<std::string>().empty())
    throw Error(ErrorCode::SyntaxError, where + ": \"name\" must be a non-empty string");
  return n.get<std::string>();
}

Rational rational_of(const Json& j, const std::string& where) {
  RealScalar x = scalar_from_json(j);
  if (!x.is_rational()) throw Error(ErrorCode::SyntaxError, where + ": expected a rational");
  return x.rational();
}

polyseg::MaxPlusValue maxplus_of(const Json& j, const std::string& where) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "-inf")) return std::nullopt;
  return rational_of(j, where);
}

Json maxplus_json(const polyseg::MaxPlusValue& v) { return v ? Json(numeric::to_string(*v)) : Json("-inf"); }

PiecewiseFunction function_of(const Json& obj, const std::string& name) {
  const std::string where = "function " + name;
  std::vector<RealScalar> bps;
  for (const auto& b : array_member(obj, "breakpoints", where)) bps.push_back(scalar_from_json(b));
  std::vector<Polynomial> segs;
  for (const auto& s : array_member(obj, "segments", where)) {
    if (!s.is_array()) throw Error(ErrorCode::SyntaxError, where + ": each segment is a coefficient array");
    std::vector<Rational> cs;
    for (const auto& c : s) cs.push_back(rational_of(c, where));
    segs.emplace_back(cs);
  }
  if (segs.size() != bps.size() + 1)
    throw Error(ErrorCode::SyntaxError, where + ": " + std::to_string(bps.size()) + " breakpoints need " +
                                            std::to_string(bps.size() + 1) + " segments, got " +
                                            std::to_string(segs.size()));
  try {
    return PiecewiseFunction(std::move(bps), std::move(segs));
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

std::vector<polyseg::MaxPlusValue> maxplus_list(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw Error(ErrorCode::SyntaxError, where + ": coefficient list must be an array");
  std::vector<polyseg::MaxPlusValue> out;
  for (const auto& v : arr) out.push_back(maxplus_of(v, where));
  return out;
}

PolynomialDef polynomial_of(const Json& obj, const std::string& name) {
  const std::string where = "polynomial " + name;
  const Json& kind = member(obj, "kind", where);
  if (kind == "tropical") {
    curves::TropicalPolynomialMap p;
    for (const auto& m : array_member(obj, "monomials", where)) {
      curves::Monomial mono;
      for (const auto& e : array_member(m, "exponents", where)) {
        if (!e.is_number_integer() || e.get<long>() < 0)
          throw Error(ErrorCode::SyntaxError, where + ": exponents are non-negative integers");
        mono.exponents.push_back(e.get<int>());
      }
      mono.coefficient = maxplus_of(member(m, "coefficient", where), where);
      p.monomials.push_back(std::move(mono));
    }
    try {
      p.degree();
    } catch (const Error& e) {
      throw Error(ErrorCode::SyntaxError, where + ": " + e.what());
    }
    return p;
  }
  if (kind == "fermat") {
    curves::FermatForm q;
    for (const auto& w : array_member(obj, "weights", where)) q.weights.push_back(rational_of(w, where));
    const Json& power = member(obj, "power", where);
    if (!power.is_number_integer() || power.get<long>() < 1)
      throw Error(ErrorCode::SyntaxError, where + ": power must be a positive integer");
    q.power = power.get<int>();
    return q;
  }
  throw Error(ErrorCode::SyntaxError, where + ": kind must be \"tropical\" or \"fermat\"");
}

}  // namespace

const PiecewiseFunction& Manifest::function(const std::string& name) const {
  if (const auto* f = find_named(functions, name)) return *f;
  if (const auto* p = find_named(products, name)) return p->function;
  throw Error(ErrorCode::UnknownReference, "no function named \"" + name + "\"");
}

curves::TropicalCurve Manifest::curve(const std::string& name) const {
  const auto* refs = find_named(curves, name);
  if (!refs) throw Error(ErrorCode::UnknownReference, "no curve named \"" + name + "\"");
  std::vector<PiecewiseFunction> fs;
  for (const auto& r : *refs) fs.push_back(function(r));
  return curves::TropicalCurve(std::move(fs));
}

const PolynomialDef& Manifest::polynomial(const std::string& name) const {
  if (const auto* p = find_named(polynomials, name)) return *p;
  throw Error(ErrorCode::UnknownReference, "no polynomial named \"" + name + "\"");
}

bool Manifest::operator==(const Manifest& other) const {
  auto same_products = [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& x = a[i].second.spec.factors;
      const auto& y = b[i].second.spec.factors;
      if (a[i].first != b[i].first || x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].numerator != y[k].numerator || x[k].denominator != y[k].denominator) return false;
    }
    return true;
  };
  auto same_polys = [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].first != b[i].first || a[i].second.index() != b[i].second.index()) return false;
      if (const auto* p = std::get_if<curves::TropicalPolynomialMap>(&a[i].second)) {
        const auto& q = std::get<curves::TropicalPolynomialMap>(b[i].second);
        if (p->monomials.size() != q.monomials.size()) return false;
        for (std::size_t k = 0; k < p->monomials.size(); ++k)
          if (p->monomials[k].exponents != q.monomials[k].exponents ||
              p->monomials[k].coefficient != q.monomials[k].coefficient)
            return false;
      } else {
        const auto& x = std::get<curves::FermatForm>(a[i].second);
        const auto& y = std::get<curves::FermatForm>(b[i].second);
        if (x.weights != y.weights || x.power != y.power) return false;
      }
    }
    return true;
  };
  return functions == other.functions && curves == other.curves && same_products(products, other.products) &&
         same_polys(polynomials, other.polynomials);
}

Manifest parse_manifest(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "malformed JSON at byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw Error(ErrorCode::SyntaxError, "manifest must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "functions" && key != "tropical_products" && key != "curves" && key != "polynomials" && key != "notes")
      throw Error(ErrorCode::SyntaxError, "unknown top-level key \"" + key + "\"");

  Manifest m;
  std::set<std::string> seen;
  auto claim = [&](const std::string& name) {
    if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateName, "name \"" + name + "\" defined twice");
  };
  auto section = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    if (!doc.contains(key)) return empty;
    if (!doc[key].is_array()) throw Error(ErrorCode::SyntaxError, std::string("\"") + key + "\" must be an array");
    return doc[key];
  };

  for (const auto& obj : section("functions")) {
    std::string name = name_of(obj, "function");
    claim(name);
    m.functions.emplace_back(name, function_of(obj, name));
  }
  for (const auto& obj : section("tropical_products")) {
    std::string name = name_of(obj, "tropical product");
    claim(name);
    NamedProduct p;
    for (const auto& fac : array_member(obj, "factors", "tropical product " + name)) {
      polyseg::TropicalProductFactor factor;
      factor.numerator = maxplus_list(member(fac, "numerator", name), name);
      factor.denominator = maxplus_list(member(fac, "denominator", name), name);
      p.spec.factors.push_back(std::move(factor));
    }
    p.function = polyseg::from_tropical_product(p.spec);
    m.products.emplace_back(name, std::move(p));
  }
  for (const auto& obj : section("polynomials")) {
    std::string name = name_of(obj, "polynomial");
    claim(name);
    m.polynomials.emplace_back(name, polynomial_of(obj, name));
  }
  for (const auto& obj : section("curves")) {
    std::string name = name_of(obj, "curve");
    claim(name);
    std::vector<std::string> refs;
    for (const auto& r : array_member(obj, "components", "curve " + name)) {
      if (!r.is_string()) throw Error(ErrorCode::SyntaxError, "curve " + name + ": components are function names");
      refs.push_back(r.get<std::string>());
    }
    m.curves.emplace_back(name, std::move(refs));
  }
  // References resolve once every definition is known.
  for (const auto& [name, refs] : m.curves)
    for (const auto& r : refs)
      if (!find_named(m.functions, r) && !find_named(m.products, r))
        throw Error(ErrorCode::UnknownReference, "curve " + name + " refers to undefined function \"" + r + "\"");
  return m;
}

std::string serialize_manifest(const Manifest& m) {
  Json doc = Json::object();
  if (!m.functions.empty()) {
    Json fs = Json::array();
    for (const auto& [name, f] : m.functions) fs.push_back(function_json(name, f));
    doc["functions"] = fs;
  }
  if (!m.products.empty()) {
    Json ps = Json::array();
    for (const auto& [name, p] : m.products) {
      Json factors = Json::array();
      for (const auto& fac : p.spec.factors) {
        Json num = Json::array(), den = Json::array();
        for (const auto& v : fac.numerator) num.push_back(maxplus_json(v));
        for (const auto& v : fac.denominator) den.push_back(maxplus_json(v));
        factors.push_back(Json{{"numerator", num}, {"denominator", den}});
      }
      ps.push_back(Json{{"name", name}, {"factors", factors}});
    }
    doc["tropical_products"] = ps;
  }
  if (!m.polynomials.empty()) {
    Json ps = Json::array();
    for (const auto& [name, def] : m.polynomials) {
      if (const auto* p = std::get_if<curves::TropicalPolynomialMap>(&def)) {
        Json monos = Json::array();
        for (const auto& mono : p->monomials)
          monos.push_back(Json{{"exponents", mono.exponents}, {"coefficient", maxplus_json(mono.coefficient)}});
        ps.push_back(Json{{"name", name}, {"kind", "tropical"}, {"monomials", monos}});
      } else {
        const auto& q = std::get<curves::FermatForm>(def);
        Json ws = Json::array();
        for (const auto& w : q.weights) ws.push_back(numeric::to_string(w));
        ps.push_back(Json{{"name", name}, {"kind", "fermat"}, {"weights", ws}, {"power", q.power}});
      }
    }
    doc["polynomials"] = ps;
  }
  if (!m.curves.empty()) {
    Json cs = Json::array();
    for (const auto& [name, refs] : m.curves) cs.push_back(Json{{"name", name}, {"components", refs}});
    doc["curves"] = cs;
  }
  return doc.dump(2) + "\n";
}

}  // namespace tropnev::cli
