//
// regvar - regular languages, finite D-monoids and their dualities
//

// Local pseudovarieties (ideals of generated monoids) and the pushforwards
// of local varieties and pseudovarieties along morphisms of free
// D-monoids. Fibers are posets, so morphism claims are plain inclusion
// checks after pushing forward.

#ifndef REGVAR_OPFIB_HPP_
#define REGVAR_OPFIB_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "core.hpp"
#include "dalg.hpp"
#include "locvar.hpp"
#include "reglang.hpp"

namespace regvar {

  ////////////////////////////////////////////////////////////////////////
  // LocalPseudovariety
  ////////////////////////////////////////////////////////////////////////

  enum class PseudovarietyMode { finite, generated, oracle };

  std::string_view to_string(PseudovarietyMode m) noexcept;

  class LocalPseudovariety {
   public:
    using Membership  = std::function<bool(GeneratedDMonoid const&)>;
    using Enumeration = std::function<std::vector<GeneratedDMonoid>(std::size_t)>;

    LocalPseudovariety() = default;

    // An explicit set of members, canonicalized and sorted. Closure is not
    // enforced; see violations().
    static LocalPseudovariety finite(Alphabet                      alphabet,
                                     DSignature                    dsig,
                                     std::vector<GeneratedDMonoid> members);
    // The ideal generated by a family; comparable generators are dropped so
    // that an antichain remains.
    static LocalPseudovariety generated(Alphabet                      alphabet,
                                        DSignature                    dsig,
                                        std::vector<GeneratedDMonoid> gens);
    static LocalPseudovariety principal(GeneratedDMonoid const& g) {
      return generated(g.alphabet(), g.dsig(), {g});
    }
    static LocalPseudovariety oracle(Alphabet    alphabet,
                                     DSignature  dsig,
                                     Membership  member,
                                     Enumeration enumerate,
                                     std::string description);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    DSignature dsig() const noexcept {
      return _dsig;
    }
    PseudovarietyMode mode() const noexcept {
      return _mode;
    }
    // FINITE: the members; GENERATED: the antichain; ORACLE: empty.
    std::vector<GeneratedDMonoid> const& elements() const noexcept {
      return _elements;
    }
    std::string const& description() const noexcept {
      return _description;
    }

    bool contains(GeneratedDMonoid const& n) const;

    // All members with at most size_bound elements, sorted.
    std::vector<GeneratedDMonoid> enumerate(std::size_t size_bound) const;

    // GENERATED: the join of the antichain, which generates the ideal.
    // FINITE: the join of the members. Throws UnsupportedModeError for
    // ORACLE.
    GeneratedDMonoid top() const;

    // FINITE only: missing quotients and subdirect products.
    std::vector<std::string> violations() const;

   private:
    Alphabet                      _alphabet;
    DSignature                    _dsig = DSignature::set;
    PseudovarietyMode             _mode = PseudovarietyMode::finite;
    std::vector<GeneratedDMonoid> _elements;
    std::optional<GeneratedDMonoid> _top;
    Membership                    _member;
    Enumeration                   _enumerate;
    std::string                   _description;
  };

  ////////////////////////////////////////////////////////////////////////
  // Checks and pushforwards
  ////////////////////////////////////////////////////////////////////////

  struct Verdict {
    bool        holds = true;
    // A human-readable counterexample when holds is false.
    std::string witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // The Σ-generated monoid generated inside n by the images of f's letters:
  // the image of e_n f. f goes from Σ to n's alphabet.
  GeneratedDMonoid image_of(GeneratedDMonoid const& n, FreeMorphism const& f);

  // Whether e_n f = g e_m for some D-monoid morphism g: m -> n.
  bool factors(GeneratedDMonoid const& m,
               FreeMorphism const&     f,
               GeneratedDMonoid const& n);

  // (Σ, v) -> (Δ, w) along f: v contains the f-preimage of every language
  // of w.
  Verdict check_flang_morphism(LocalVariety const& v,
                               FreeMorphism const& f,
                               LocalVariety const& w);

  // (Σ, p) -> (Δ, q) along f: every member of q is reached from a member
  // of p. q must not be in ORACLE mode; p may be ORACLE only if q is
  // finite and small enough to search p's enumeration up to its sizes.
  Verdict check_fvar_morphism(LocalPseudovariety const& p,
                              FreeMorphism const&       f,
                              LocalPseudovariety const& q);

  // f_*(v): the largest local variety over Δ whose f-preimages lie in v,
  // as a membership oracle.
  struct VarietyOracle {
    Alphabet                                 alphabet;
    CSignature                               csig = CSignature::ba;
    std::function<bool(CanonicalDfa const&)> contains;
    std::string                              description;

    // Members with at most max_states states, sorted.
    std::vector<CanonicalDfa> enumerate(std::size_t max_states) const;
  };

  VarietyOracle pushforward_variety(FreeMorphism const& f, LocalVariety const& v);

  // f_#(p) in ORACLE mode; enumeration filters the Δ-generated monoids up
  // to the requested size.
  LocalPseudovariety pushforward_pseudovariety(FreeMorphism const&       f,
                                               LocalPseudovariety const& p);

  // The square relating f_* and f_# through the variety/monoid
  // correspondence, checked two ways: every Δ-generated monoid n of size <=
  // size_bound is in f_#(↓S(v)) iff every language it recognizes is in
  // f_*(v); and every Δ-language with <= state_bound states is in f_*(v) iff
  // its syntactic D-monoid is in f_#(↓S(v)).
  Verdict square_check(FreeMorphism const& f,
                       LocalVariety const& v,
                       std::size_t         size_bound  = 6,
                       std::size_t         state_bound = 8);

  struct SubcategorySpec {
    std::vector<Alphabet>     objects;
    std::vector<FreeMorphism> morphisms;
  };

  // Every generating morphism is a morphism of local varieties.
  Verdict section_check(SubcategorySpec const&                spec,
                        std::map<Alphabet, LocalVariety> const& family);

  // Closure under preimages of every endomorphism whose images have payload
  // length <= length_bound. Only meaningful relative to the bound.
  Verdict fully_invariant_check(LocalVariety const& v, std::size_t length_bound);

}  // namespace regvar

#endif  // REGVAR_OPFIB_HPP_
