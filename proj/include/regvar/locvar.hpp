//
// regvar - regular languages, finite D-monoids and their dualities
//

// Finite local varieties of regular languages: sets of languages over one
// alphabet closed under the operations of a C-signature and under left and
// right derivatives, and their correspondence with generated D-monoids.

#ifndef REGVAR_LOCVAR_HPP_
#define REGVAR_LOCVAR_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"
#include "dalg.hpp"
#include "duality.hpp"
#include "reglang.hpp"

namespace regvar {

  class LocalVariety {
   public:
    LocalVariety() = default;

    // Sorts and deduplicates; throws InputError naming the first closure
    // failure.
    LocalVariety(CSignature                csig,
                 Alphabet                  alphabet,
                 std::vector<CanonicalDfa> languages);

    CSignature csig() const noexcept {
      return _csig;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<CanonicalDfa> const& languages() const noexcept {
      return _languages;
    }
    std::size_t size() const noexcept {
      return _languages.size();
    }
    CanonicalDfa const& language(std::size_t i) const {
      return _languages.at(i);
    }

    std::optional<std::size_t> index(CanonicalDfa const& l) const;
    bool contains(CanonicalDfa const& l) const {
      return index(l).has_value();
    }
    bool subset_of(LocalVariety const& that) const;

    // Element i is language i.
    FiniteCAlgebra algebra() const;

    // Missing constants, operation results and derivatives.
    static std::vector<std::string>
    violations(CSignature                       csig,
               Alphabet const&                  alphabet,
               std::vector<CanonicalDfa> const& sorted_languages);

    auto operator<=>(LocalVariety const&) const = default;
    bool operator==(LocalVariety const&) const  = default;

   private:
    friend struct VarietyBuilder;

    CSignature                _csig = CSignature::ba;
    Alphabet                  _alphabet;
    std::vector<CanonicalDfa> _languages;
  };

  // The least local variety containing the generators. Throws ResourceError
  // if the generators' joint transition monoid exceeds 2^16 elements or the
  // variety exceeds `limit` languages.
  LocalVariety close(CSignature                       csig,
                     Alphabet const&                  alphabet,
                     std::vector<CanonicalDfa> const& generators,
                     std::size_t                      limit = 1 << 14);

  struct Coalgebra {
    // gamma1[i]: whether language i contains the empty word.
    std::vector<bool> gamma1;
    // gamma2[i][a]: index of the left derivative of language i by a.
    std::vector<std::vector<std::size_t>> gamma2;
  };

  // Throws InvariantError if a derivative leaves the variety.
  Coalgebra coalgebra_structure(LocalVariety const& v);

  // The dual generated D-monoid; keys[x][i] is the value of element x (a
  // homomorphism v -> 2) on language i.
  Generated variety_to_generated(LocalVariety const& v);
  GeneratedDMonoid variety_to_monoid(LocalVariety const& v);

  // The languages recognized by g through D-maps into the two-element
  // object.
  LocalVariety monoid_to_variety(GeneratedDMonoid const& g, CSignature csig);

  // The language {w : p(e(w)) = 1} as a minimal DFA, reading the monoid as
  // an automaton.
  CanonicalDfa recognized_language(GeneratedDMonoid const& g,
                                   std::vector<std::uint8_t> const& p);

  enum class PreimageRoute { automatic, languages, monoids };

  // Whether v contains the f-preimage of every language of w, where f maps
  // v's alphabet into w's. The language route builds each preimage as a
  // DFA; the monoid route asks whether e_w f factors through e_v.
  // `automatic` uses languages for SET/POS and monoids otherwise.
  bool check_preimage_closure(LocalVariety const& v,
                              FreeMorphism const& f,
                              LocalVariety const& w,
                              PreimageRoute       route = PreimageRoute::automatic);

}  // namespace regvar

#endif  // REGVAR_LOCVAR_HPP_
