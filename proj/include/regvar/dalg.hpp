//
// regvar - regular languages, finite D-monoids and their dualities
//

// Finite D-monoids over the four base signatures: plain, ordered,
// idempotent-semiring and Z2-algebra monoids. Generated monoids carry a
// surjection from the free D-monoid on an alphabet and are stored in a
// canonical form (elements sorted by their least representative), so that
// equality of encodings is equality in the poset of generated quotients.

#ifndef REGVAR_DALG_HPP_
#define REGVAR_DALG_HPP_

#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint8_t, uint32_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "core.hpp"
#include "reglang.hpp"

namespace regvar {

  ////////////////////////////////////////////////////////////////////////
  // FiniteDObject
  ////////////////////////////////////////////////////////////////////////

  // A finite set, poset, join-semilattice with bottom, or Z2-space. Elements
  // are 0, ..., size() - 1. The binary operation is the join (SLAT) or the
  // addition (Z2VEC), with zero() its unit.
  class FiniteDObject {
   public:
    FiniteDObject() = default;

    static FiniteDObject set(std::size_t n);
    // leq is row-major, leq[x * n + y] != 0 iff x <= y.
    static FiniteDObject poset(std::size_t n, std::vector<std::uint8_t> leq);
    static FiniteDObject semilattice(std::size_t n,
                                     std::vector<Elem> join,
                                     Elem              bottom);
    // Elements are the bit-vectors 0, ..., 2^dim - 1 under xor.
    static FiniteDObject space(std::size_t dim);
    // A Z2-space with an arbitrary addition table.
    static FiniteDObject space(std::size_t n, std::vector<Elem> add, Elem zero);

    DSignature dsig() const noexcept {
      return _dsig;
    }
    std::size_t size() const noexcept {
      return _size;
    }

    bool leq(Elem x, Elem y) const;
    Elem plus(Elem x, Elem y) const {
      return _op[x * _size + y];
    }
    Elem zero() const noexcept {
      return _zero;
    }
    // log2(size) for Z2VEC.
    std::size_t dim() const;

    std::vector<std::uint8_t> const& order_table() const noexcept {
      return _leq;
    }
    std::vector<Elem> const& op_table() const noexcept {
      return _op;
    }

    // Lists every violated law; empty means valid.
    std::vector<std::string> violations() const;

    auto operator<=>(FiniteDObject const&) const = default;
    bool operator==(FiniteDObject const&) const  = default;

   private:
    DSignature                _dsig = DSignature::set;
    std::size_t               _size = 0;
    std::vector<std::uint8_t> _leq;  // POS only
    std::vector<Elem>         _op;   // SLAT and Z2VEC only
    Elem                      _zero = 0;
  };

  // Whether `table` (indexed by source elements) preserves the D-structure:
  // monotone, join-and-bottom preserving, or linear.
  bool is_d_map(FiniteDObject const&     source,
                FiniteDObject const&     target,
                std::vector<Elem> const& table);

  ////////////////////////////////////////////////////////////////////////
  // FiniteDMonoid
  ////////////////////////////////////////////////////////////////////////

  class FiniteDMonoid {
   public:
    FiniteDMonoid() = default;
    FiniteDMonoid(FiniteDObject carrier, Elem unit, std::vector<Elem> mult);

    // The Z2-algebra on the bit-vectors of length dim whose product of basis
    // vectors i and j is constants[i * dim + j], extended bilinearly.
    static FiniteDMonoid z2_algebra(std::size_t              dim,
                                    Elem                     unit,
                                    std::vector<Elem> const& constants);

    FiniteDObject const& carrier() const noexcept {
      return _carrier;
    }
    DSignature dsig() const noexcept {
      return _carrier.dsig();
    }
    std::size_t size() const noexcept {
      return _carrier.size();
    }
    Elem unit() const noexcept {
      return _unit;
    }
    Elem mult(Elem x, Elem y) const {
      return _mult[x * size() + y];
    }
    std::vector<Elem> const& mult_table() const noexcept {
      return _mult;
    }

    auto operator<=>(FiniteDMonoid const&) const = default;
    bool operator==(FiniteDMonoid const&) const  = default;

   private:
    FiniteDObject     _carrier;
    Elem              _unit = 0;
    std::vector<Elem> _mult;
  };

  struct ValidityReport {
    std::vector<std::string> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Associativity, unit laws, the laws of the carrier, and the bimorphism
  // clauses for the signature. Never throws on malformed tables of the
  // right size.
  ValidityReport validate(FiniteDMonoid const& m);

  ////////////////////////////////////////////////////////////////////////
  // DMonoidMorphism
  ////////////////////////////////////////////////////////////////////////

  struct DMonoidMorphism {
    FiniteDMonoid     source;
    FiniteDMonoid     target;
    std::vector<Elem> table;

    Elem operator()(Elem x) const {
      return table[x];
    }
    bool is_surjective() const;
    bool operator==(DMonoidMorphism const&) const = default;
  };

  ValidityReport validate(DMonoidMorphism const& f);

  DMonoidMorphism compose(DMonoidMorphism const& f, DMonoidMorphism const& g);

  ////////////////////////////////////////////////////////////////////////
  // GeneratedDMonoid
  ////////////////////////////////////////////////////////////////////////

  // A finite D-monoid M with a surjection e: ΨΣ* -> M given by the images
  // of the letters. Values built by this library are canonical: element x
  // is labelled by the least free element t with e(t) = x, and elements are
  // numbered in increasing label order.
  class GeneratedDMonoid {
   public:
    GeneratedDMonoid() = default;

    // Canonicalizes; throws InputError if the generators do not generate.
    GeneratedDMonoid(FiniteDMonoid monoid,
                     Alphabet      alphabet,
                     std::vector<Elem> gens);

    FiniteDMonoid const& monoid() const noexcept {
      return _monoid;
    }
    DSignature dsig() const noexcept {
      return _monoid.dsig();
    }
    std::size_t size() const noexcept {
      return _monoid.size();
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Elem> const& gens() const noexcept {
      return _gens;
    }
    Elem gen(Letter a) const {
      return _gens.at(a);
    }
    std::vector<FreeDElement> const& labels() const noexcept {
      return _labels;
    }
    FreeDElement const& label(Elem x) const {
      return _labels.at(x);
    }

    Elem evaluate(Word const& w) const;
    Elem evaluate(FreeDElement const& x) const;

    std::string describe() const;

    auto operator<=>(GeneratedDMonoid const&) const = default;
    bool operator==(GeneratedDMonoid const&) const  = default;

   private:
    friend struct GeneratedBuilder;

    FiniteDMonoid             _monoid;
    Alphabet                  _alphabet;
    std::vector<Elem>         _gens;
    std::vector<FreeDElement> _labels;
  };

  ////////////////////////////////////////////////////////////////////////
  // Generated substructures of an ambient algebra
  ////////////////////////////////////////////////////////////////////////

  // Elements of an ambient structure are opaque keys; the generated
  // D-submonoid is computed by closing the generators under multiplication
  // (and the join or sum).
  using Key = std::vector<std::uint32_t>;

  struct Ambient {
    DSignature                            dsig = DSignature::set;
    Alphabet                              alphabet;
    Key                                   unit;
    std::vector<Key>                      gens;
    std::function<Key(Key const&, Key const&)>  mult;
    // SLAT and Z2VEC only.
    std::function<Key(Key const&, Key const&)>  plus;
    Key                                   zero;
    // POS only.
    std::function<bool(Key const&, Key const&)> leq;
  };

  struct Generated {
    GeneratedDMonoid monoid;
    // keys[x] is the ambient element of canonical element x.
    std::vector<Key> keys;
  };

  // Throws ResourceError if the result would have more than `limit`
  // elements.
  Generated generate(Ambient const& ambient, std::size_t limit = 1 << 16);

  // The ambient structure of a generated monoid itself (keys are {x}).
  Ambient ambient_of(GeneratedDMonoid const& g);

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  GeneratedDMonoid canonicalize(GeneratedDMonoid const& g);

  // The trivial one-element monoid.
  GeneratedDMonoid trivial_monoid(Alphabet const& alphabet, DSignature dsig);

  // Right-action transformation monoid of a DFA (SET).
  GeneratedDMonoid transition_monoid(CanonicalDfa const& l);

  // The image of <e_1, e_2>: the join in Quo.
  GeneratedDMonoid subdirect(GeneratedDMonoid const& g1,
                             GeneratedDMonoid const& g2);
  GeneratedDMonoid subdirect(std::vector<GeneratedDMonoid> const& gs);

  // The D-monoid morphism h: source -> target with h(source_gens[a]) =
  // target_images[a], if it exists. The relation generated by the pairs
  // (source_gens[a], target_images[a]) must be the graph of a function and,
  // for POS, that function must be monotone. `source_gens` must generate
  // `source`.
  std::optional<DMonoidMorphism>
  factor_through(FiniteDMonoid const&     source,
                 std::vector<Elem> const& source_gens,
                 FiniteDMonoid const&     target,
                 std::vector<Elem> const& target_images);

  // g1 <= g2 in Quo: the witness f: g2 -> g1 with e_1 = f e_2.
  std::optional<DMonoidMorphism> leq_quo(GeneratedDMonoid const& g1,
                                         GeneratedDMonoid const& g2);

  // The least congruence containing `pairs`; for POS the pairs are
  // inequations x <= y and the quotient carries the induced order.
  std::pair<GeneratedDMonoid, DMonoidMorphism>
  quotient(GeneratedDMonoid const&                  g,
           std::vector<std::pair<Elem, Elem>> const& pairs);

  // Every quotient of g with at most size_bound elements, largest first.
  // Throws ResourceError if g has more than 64 elements or more than
  // `limit` congruences are met.
  std::vector<GeneratedDMonoid> enumerate_quotients(GeneratedDMonoid const& g,
                                                    std::size_t size_bound,
                                                    std::size_t limit = 200000);

  // Every Σ-generated D-monoid with at most size_bound elements, sorted.
  // Practical for SET/POS up to size 6 on one letter and 4 on two letters;
  // SLAT/Z2VEC only for very small bounds.
  std::vector<GeneratedDMonoid> enumerate_generated(Alphabet const& alphabet,
                                                    DSignature      dsig,
                                                    std::size_t size_bound);

  // The free D-monoid on a SET monoid W: finite subsets of W under union
  // (SLAT) or the monoid algebra Z2[W] (Z2VEC), generated by W's
  // generators.
  GeneratedDMonoid free_extension(GeneratedDMonoid const& w, DSignature dsig);

  // Forgets the D-structure of a generated monoid down to its multiplicative
  // monoid of word values (SET).
  GeneratedDMonoid word_monoid(GeneratedDMonoid const& g);

}  // namespace regvar

#endif  // REGVAR_DALG_HPP_
