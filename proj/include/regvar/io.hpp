//
// regvar - regular languages, finite D-monoids and their dualities
//

// JSON and DOT serialization. Every to_json output is accepted by the
// matching *_from_json, which validates and throws InputError on malformed
// input. Object keys are emitted sorted, so dumps are deterministic.

#ifndef REGVAR_IO_HPP_
#define REGVAR_IO_HPP_

#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include <json.hpp>

#include "core.hpp"
#include "dalg.hpp"
#include "duality.hpp"
#include "locvar.hpp"
#include "opfib.hpp"
#include "profinite.hpp"
#include "reglang.hpp"

namespace regvar {

  using Json = nlohmann::json;

  Json     to_json(Alphabet const& a);
  Alphabet alphabet_from_json(Json const& j);

  // {"alphabet", "states", "initial", "accepting", "delta"}; delta has one
  // row per state in symbol order.
  Json         to_json(CanonicalDfa const& l);
  CanonicalDfa dfa_from_json(Json const& j);

  // Words are strings over the alphabet's symbols; SET/POS elements are a
  // single word, SLAT/Z2VEC elements a list of words.
  Json         to_json(FreeDElement const& x, Alphabet const& a);
  FreeDElement free_element_from_json(Json const& j, DSignature d, Alphabet const& a);

  // {"domain", "codomain", "dsig", "images"}.
  Json         to_json(FreeMorphism const& f);
  FreeMorphism morphism_from_json(Json const& j);

  // {"dsig", "size", "unit", "mult"} plus "order" (POS), "join"/"zero"
  // (SLAT) or "add"/"zero"/"dim" (Z2VEC). With check = false only the
  // shapes of the tables are checked, not the monoid laws.
  Json          to_json(FiniteDMonoid const& m);
  FiniteDMonoid finite_monoid_from_json(Json const& j, bool check = true);

  // The monoid fields plus "alphabet", "gens" (symbol -> element) and
  // "labels".
  Json             to_json(GeneratedDMonoid const& g);
  GeneratedDMonoid monoid_from_json(Json const& j);

  // {"csig", "alphabet", "languages"}, languages in canonical order.
  Json         to_json(LocalVariety const& v);
  LocalVariety variety_from_json(Json const& j);

  // {"csig", "size", "plus", "meet", "complement", "zero", "one"}.
  Json to_json(FiniteCAlgebra const& a);

  // Every element of the dual with its hom bit-vector.
  Json to_json(DualObject const& d);

  // FINITE and GENERATED only: {"mode", "alphabet", "dsig", "elements"}.
  Json               to_json(LocalPseudovariety const& p);
  LocalPseudovariety pseudovariety_from_json(Json const& j);

  Json to_json(Verdict const& v);
  Json to_json(ApproximantMonoid const& m);

  Json kernel_pairs_to_json(
      std::vector<std::pair<FreeDElement, FreeDElement>> const& pairs,
      Alphabet const&                                            a);

  // Hasse diagram of the Quo order on the given monoids.
  std::string quo_dot(std::vector<GeneratedDMonoid> const& ms);
  // Hasse diagram of inclusion between local varieties.
  std::string variety_lattice_dot(std::vector<LocalVariety> const& vs);
  std::string to_dot(CanonicalDfa const& l);

}  // namespace regvar

#endif  // REGVAR_IO_HPP_
