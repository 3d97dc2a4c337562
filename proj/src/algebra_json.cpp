#include "nilmul/algebra_json.hpp"

#include <fstream>

namespace nilmul {

using nlohmann::json;

json algebra_to_json(const LieAlgebra& l) {
  json brackets = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const auto& v = l.bracket(i, j);
      if (v.empty()) continue;
      json value = json::array();
      for (const auto& [k, x] : v) value.push_back(json::array({k, to_string(x)}));
      brackets.push_back({{"i", i}, {"j", j}, {"value", std::move(value)}});
    }
  return {{"name", l.name()}, {"dim", l.dim()}, {"basis", l.labels()}, {"brackets", std::move(brackets)}};
}

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + "." + key + ": missing");
  return *it;
}

std::size_t index_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InputError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

LieAlgebra algebra_from_json(const json& j) {
  const json& name = field(j, "name", "algebra");
  if (!name.is_string()) throw InputError("algebra.name: expected a string");
  const std::size_t n = index_field(j, "dim", "algebra");
  const json& basis = field(j, "basis", "algebra");
  if (!basis.is_array() || basis.size() != n)
    throw InputError("algebra.basis: expected an array of " + std::to_string(n) + " labels");

  RawTable raw(n, name.get<std::string>());
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) throw InputError("algebra.basis[" + std::to_string(i) + "]: expected a string");
    raw.labels[i] = basis[i].get<std::string>();
  }

  const json& brackets = field(j, "brackets", "algebra");
  if (!brackets.is_array()) throw InputError("algebra.brackets: expected an array");
  std::vector<bool> seen(n * n, false);
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "algebra.brackets[" + std::to_string(e) + "]";
    const json& entry = brackets[e];
    const std::size_t bi = index_field(entry, "i", where);
    const std::size_t bj = index_field(entry, "j", where);
    if (bi >= n) throw InputError(where + ".i: index " + std::to_string(bi) + " out of range");
    if (bj >= n) throw InputError(where + ".j: index " + std::to_string(bj) + " out of range");
    if (bi >= bj) throw InputError(where + ": requires i < j");
    if (seen[bi * n + bj]) throw InputError(where + ": duplicate pair");
    seen[bi * n + bj] = true;

    const json& value = field(entry, "value", where);
    if (!value.is_array()) throw InputError(where + ".value: expected an array");
    SparseVector v;
    for (std::size_t t = 0; t < value.size(); ++t) {
      const std::string at = where + ".value[" + std::to_string(t) + "]";
      const json& term = value[t];
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
        throw InputError(at + ": expected [index, \"p/q\"]");
      const long long k = term[0].get<long long>();
      if (k < 0 || static_cast<std::size_t>(k) >= n) throw InputError(at + ": index out of range");
      try {
        v.emplace_back(static_cast<std::size_t>(k), parse_rational(term[1].get<std::string>()));
      } catch (const std::invalid_argument& ex) {
        throw InputError(at + ": " + ex.what());
      }
    }
    try {
      raw.set_antisymmetric(bi, bj, v);
    } catch (const std::exception& ex) {
      throw InputError(where + ": " + ex.what());
    }
  }
  try {
    return LieAlgebra::validate(std::move(raw));
  } catch (const ValidationError& ex) {
    throw InputError(std::string("algebra.brackets: ") + ex.what());
  }
}

LieAlgebra read_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& ex) {
    throw InputError(path.string() + ": " + ex.what());
  }
  return algebra_from_json(j);
}

void write_algebra(const LieAlgebra& l, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << algebra_to_json(l).dump(2) << '\n';
}

}  // namespace nilmul
