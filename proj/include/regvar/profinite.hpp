//
// regvar - regular languages, finite D-monoids and their dualities
//

// Finite stand-ins for profinite objects: limits of finite families of
// generated monoids (their subdirect joins), the ideals they recover,
// equational theories truncated at a size bound, and kernel pairs.

#ifndef REGVAR_PROFINITE_HPP_
#define REGVAR_PROFINITE_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "core.hpp"
#include "dalg.hpp"
#include "opfib.hpp"

namespace regvar {

  ////////////////////////////////////////////////////////////////////////
  // Approximants
  ////////////////////////////////////////////////////////////////////////

  struct ApproximantMonoid {
    // The canonical subdirect join of the provenance.
    GeneratedDMonoid              base;
    std::vector<GeneratedDMonoid> provenance;
    // projections[i]: base -> provenance[i], surjective.
    std::vector<DMonoidMorphism>  projections;
  };

  // The limit of the finite diagram spanned by the generators. Throws
  // InputError on an empty family or mixed alphabets or signatures, and
  // ResourceError if the join exceeds `limit` elements.
  ApproximantMonoid limit_of(std::vector<GeneratedDMonoid> const& generators,
                             std::size_t                          limit = 1 << 16);

  // The mediating surjection k -> m.base, if every generator of m is a
  // quotient of k.
  std::optional<DMonoidMorphism> mediating_map(GeneratedDMonoid const&  k,
                                               ApproximantMonoid const& m);

  // The finite quotients of m.base up to size_bound, as a FINITE local
  // pseudovariety. Checked against the ideal generated by the provenance;
  // throws InvariantError if they differ.
  LocalPseudovariety recover_ideal(ApproximantMonoid const& m,
                                   std::size_t              size_bound);

  // Distinct pairs (u, v), u < v, of free elements with payload length <=
  // length_bound and the same value in g, sorted.
  std::vector<std::pair<FreeDElement, FreeDElement>>
  kernel_pairs(GeneratedDMonoid const& g, std::size_t length_bound);

  ////////////////////////////////////////////////////////////////////////
  // Pseudovarieties of D-monoids and truncated theories
  ////////////////////////////////////////////////////////////////////////

  struct PseudovarietyPredicate {
    DSignature                                dsig = DSignature::set;
    std::function<bool(FiniteDMonoid const&)> membership;
    std::string                               description;

    bool operator()(FiniteDMonoid const& m) const {
      return membership(m);
    }
  };

  // "all", "idempotent", "commutative", "x2=x3" (x·x = x·x·x), "group".
  PseudovarietyPredicate named_predicate(std::string const& name, DSignature dsig);
  std::vector<std::string> predicate_names();

  // Closure of the predicate under quotients, generated submonoids and
  // products (subdirect products up to a relabelling of the generators),
  // tested on the members of `sample`. One line per failure.
  std::vector<std::string>
  spot_check(PseudovarietyPredicate const&        p,
             std::vector<GeneratedDMonoid> const& sample);

  struct TruncatedTheory {
    DSignature                             dsig = DSignature::set;
    std::size_t                            size_bound = 0;
    std::map<Alphabet, ApproximantMonoid> entries;
    // Spot-check failures of the predicate the theory came from.
    std::vector<std::string>               warnings;
  };

  // The join of every Σ-generated D-monoid of size <= size_bound whose
  // monoid satisfies p.
  ApproximantMonoid theory_from_pseudovariety(PseudovarietyPredicate const& p,
                                              Alphabet const&               alphabet,
                                              std::size_t size_bound);

  // One entry per alphabet, with warnings from spot-checking p on the
  // enumerated monoids.
  TruncatedTheory truncated_theory(PseudovarietyPredicate const& p,
                                   std::vector<Alphabet> const&  alphabets,
                                   std::size_t                   size_bound);

  // Whether m is a quotient of the theory's entry for m's alphabet. The
  // answer is relative to t.size_bound. Throws InputError without an
  // entry.
  Verdict pseudovariety_from_theory(TruncatedTheory const& t,
                                    GeneratedDMonoid const& m);
  // The same for a bare monoid, generated by all its elements over an
  // alphabet of size |m|; t needs an entry of that size.
  Verdict pseudovariety_from_theory(TruncatedTheory const& t,
                                    FiniteDMonoid const&   m);

  // Whether h: F_Σ -> F_Δ with h e_Σ = e_Δ f exists between the entries for
  // f's endpoints.
  Verdict theory_naturality_check(TruncatedTheory const& t, FreeMorphism const& f);

  // The members of `sample` accepted by t, tested for closure under
  // quotients, generated submonoids and subdirect products.
  std::vector<std::string> theory_closure_check(
      TruncatedTheory const&               t,
      std::vector<GeneratedDMonoid> const& sample);

  // The D-submonoid of g generated by the given elements, one per letter of
  // g's alphabet.
  GeneratedDMonoid generated_submonoid(GeneratedDMonoid const& g,
                                       std::vector<Elem> const& gens);

}  // namespace regvar

#endif  // REGVAR_PROFINITE_HPP_
