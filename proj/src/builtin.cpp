#include "gensol/builtin.hpp"

#include <algorithm>
#include <sstream>

#include "gensol/matrix.hpp"

namespace gensol {
namespace {

using Rep = std::vector<int>;

std::string cycle_label(const Rep& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j + 1;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::string matrix_label(const Rep& codes, int n) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < n; ++j) out << (j ? "," : "") << codes[i * n + j];
    out << ']';
  }
  out << ']';
  return out.str();
}

GroupHandle finish(std::string name, GroupHandle::Kind kind, int degree, const FiniteField* field,
                   MaterializedGroup<Rep, IntVectorHash> m) {
  GroupHandle h;
  h.name = std::move(name);
  h.kind = kind;
  h.group = std::move(m.group);
  h.degree = degree;
  h.field = field;
  h.elements = m.elements;
  h.index = m.index;
  return h;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<Rep> json_reps(const Json& gens, std::size_t width) {
  if (!gens.is_array()) bad("\"gens\" must be an array");
  std::vector<Rep> out;
  for (const Json& g : gens) {
    Rep r;
    if (!g.is_array()) bad("generator must be an array");
    for (const Json& v : g) {
      if (v.is_array()) {
        for (const Json& w : v) r.push_back(w.get<int>());
      } else {
        r.push_back(v.get<int>());
      }
    }
    if (r.size() != width) bad("generator has " + std::to_string(r.size()) + " entries, expected " +
                               std::to_string(width));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Elem GroupHandle::find(const std::vector<int>& e) const {
  auto it = index->find(e);
  return it == index->end() ? static_cast<Elem>(group.order()) : it->second;
}

Elem GroupHandle::parse_element(const Json& j) const {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (Elem i = 0; i < group.order(); ++i)
      if (group.label(i) == s) return i;
    bad("no element labelled " + s + " in " + name);
  }
  const std::size_t width = kind == Kind::Perm ? degree : static_cast<std::size_t>(degree) * degree;
  Json wrapped = Json::array({j});
  Rep r;
  try {
    r = json_reps(wrapped, width).front();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed element: ") + e.what());
  }
  const Elem e = find(r);
  if (e == group.order()) bad("element " + j.dump() + " is not in " + name);
  return e;
}

Json GroupHandle::element_json(Elem i) const {
  const Rep& r = element(i);
  if (kind == Kind::Perm) return Json(r);
  Json rows = Json::array();
  for (int a = 0; a < degree; ++a)
    rows.push_back(Json(Rep(r.begin() + a * degree, r.begin() + (a + 1) * degree)));
  return rows;
}

GroupHandle make_perm_group(std::string name, int degree, const std::vector<std::vector<int>>& gens) {
  if (degree < 1) bad("degree must be positive");
  for (const Rep& g : gens) {
    Rep sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < degree; ++i)
      if (static_cast<int>(sorted.size()) != degree || sorted[i] != i) bad("generator is not a permutation");
  }
  Rep id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  // Left to right: (a b)(i) = b(a(i)).
  auto mul = [](const Rep& a, const Rep& b) {
    Rep c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  auto m = close_generators<Rep, decltype(mul), IntVectorHash>(id, gens, mul, cycle_label);
  return finish(std::move(name), GroupHandle::Kind::Perm, degree, nullptr, std::move(m));
}

GroupHandle make_matrix_group(std::string name, const FiniteField& f, int n,
                              const std::vector<std::vector<int>>& gens) {
  if (n < 1) bad("dimension must be positive");
  for (const Rep& g : gens) {
    if (static_cast<int>(g.size()) != n * n) bad("generator has the wrong size");
    for (int c : g)
      if (c < 0 || c >= f.q()) bad("entry out of range for GF(" + std::to_string(f.q()) + ")");
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i) rows[i].assign(g.begin() + i * n, g.begin() + (i + 1) * n);
    if (!is_invertible(make_matrix(f, rows))) bad("generator is not invertible");
  }
  Rep id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  const FiniteField* fp = &f;
  auto mul = [fp, n](const Rep& a, const Rep& b) {
    Rep c(a.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const auto aik = static_cast<std::uint8_t>(a[i * n + k]);
        if (!aik) continue;
        for (int j = 0; j < n; ++j)
          c[i * n + j] = fp->add(static_cast<std::uint8_t>(c[i * n + j]),
                                 fp->mul(aik, static_cast<std::uint8_t>(b[k * n + j])));
      }
    return c;
  };
  auto m = close_generators<Rep, decltype(mul), IntVectorHash>(
      id, gens, mul, [n](const Rep& r) { return matrix_label(r, n); });
  return finish(std::move(name), GroupHandle::Kind::Matrix, n, &f, std::move(m));
}

std::vector<std::string> builtin_names() {
  return {"S3", "S4", "D8", "Q8", "A4", "C2xC2", "SL23", "D12", "C7:C3", "GL22"};
}

GroupHandle builtin_group(const std::string& name) {
  if (name == "S3") return make_perm_group(name, 3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "S4") return make_perm_group(name, 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  if (name == "D8") return make_perm_group(name, 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  if (name == "A4") return make_perm_group(name, 4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  if (name == "C2xC2") return make_perm_group(name, 4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  if (name == "D12") return make_perm_group(name, 6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}});
  if (name == "C7:C3") return make_perm_group(name, 7, {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}});
  if (name == "Q8") return make_matrix_group(name, FiniteField::get(3), 2, {{0, 2, 1, 0}, {1, 1, 1, 2}});
  if (name == "SL23") return make_matrix_group(name, FiniteField::get(3), 2, {{1, 1, 0, 1}, {1, 0, 1, 1}});
  if (name == "GL22") return make_matrix_group(name, FiniteField::get(2), 2, {{1, 0, 1, 1}, {1, 1, 1, 0}});
  if (name.size() > 1 && name[0] == 'C' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int n = std::stoi(name.substr(1));
    if (n < 1 || n > 20000) bad("cyclic order out of range");
    Rep shift(n);
    for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    return make_perm_group(name, n, {shift});
  }
  bad("unknown builtin group " + name);
}

GroupHandle group_from_json(const Json& spec) {
  try {
    if (spec.is_string()) return builtin_group(spec.get<std::string>());
    if (!spec.is_object()) bad("group spec must be an object or a name");
    if (spec.contains("builtin")) return builtin_group(spec.at("builtin").get<std::string>());
    const std::string type = spec.at("type").get<std::string>();
    const std::string name = spec.value("name", type);
    if (type == "perm") {
      const int degree = spec.at("degree").get<int>();
      return make_perm_group(name, degree, json_reps(spec.at("gens"), static_cast<std::size_t>(degree)));
    }
    if (type == "matrix") {
      const Json& qj = spec.at("q");
      const FiniteField& f =
          qj.is_string() ? parse_field_label(qj.get<std::string>()) : FiniteField::by_order(qj.get<int>());
      const int n = spec.at("n").get<int>();
      return make_matrix_group(name, f, n, json_reps(spec.at("gens"), static_cast<std::size_t>(n) * n));
    }
    bad("unknown group type " + type);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed group spec: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(e.what());
  }
}

}  // namespace gensol
