#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "gensol/field.hpp"
#include "gensol/group.hpp"

namespace gensol {

using Json = nlohmann::json;

struct IntVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

/// A materialized group together with the concrete element representation it
/// came from, so elements can be parsed and printed.
struct GroupHandle {
  enum class Kind { Perm, Matrix };

  std::string name;
  Kind kind = Kind::Perm;
  CayleyGroup group;
  /// Permutation degree or matrix dimension.
  int degree = 0;
  const FiniteField* field = nullptr;
  /// Element i as 0-based images (Perm) or row-major field codes (Matrix).
  std::shared_ptr<const std::vector<std::vector<int>>> elements;

  const std::vector<int>& element(Elem i) const { return (*elements)[i]; }
  /// Index of a concrete element, or order() if it is not in the group.
  Elem find(const std::vector<int>& e) const;
  /// Parses an element given as images/codes or as its label string.
  /// Throws ParseError.
  Elem parse_element(const Json& j) const;
  /// Concrete representation as JSON.
  Json element_json(Elem i) const;

  std::shared_ptr<const std::unordered_map<std::vector<int>, Elem, IntVectorHash>> index;
};

/// Permutations of {0, ..., degree-1} given by their images. Labels are in
/// cycle notation on 1..degree, e.g. "(1 2)(3 4)"; the identity is "()".
GroupHandle make_perm_group(std::string name, int degree, const std::vector<std::vector<int>>& gens);
/// Invertible n x n matrices over f, each as n*n row-major codes. Labels are
/// nested row lists, e.g. "[[1,0],[1,1]]".
GroupHandle make_matrix_group(std::string name, const FiniteField& f, int n,
                              const std::vector<std::vector<int>>& gens);

/// S3, S4, D8, Q8, A4, C2xC2, SL23, D12, C7:C3, GL22 and Cn for n >= 1.
/// Throws ParseError for unknown names.
GroupHandle builtin_group(const std::string& name);
std::vector<std::string> builtin_names();

/// {"type":"perm","degree":n,"gens":[[images]...]},
/// {"type":"matrix","q":q,"n":n,"gens":[[codes]...]}, {"builtin":"S4"} or a
/// bare name string. Throws ParseError.
GroupHandle group_from_json(const Json& spec);

}  // namespace gensol
