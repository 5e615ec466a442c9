//
// regvar - regular languages, finite D-monoids and their dualities
//

// Regular languages as canonical minimal DFAs, together with the boolean
// (lattice, semilattice, xor) structure, left and right derivatives, and
// preimages under free monoid morphisms.

#ifndef REGVAR_REGLANG_HPP_
#define REGVAR_REGLANG_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <memory>       // for shared_ptr
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"

namespace regvar {

  ////////////////////////////////////////////////////////////////////////
  // Regex
  ////////////////////////////////////////////////////////////////////////

  // Syntax tree for the input grammar
  //
  //   union  := xor ('|' xor)*
  //   xor    := inter ('^' inter)*
  //   inter  := concat ('&' concat)*
  //   concat := unary unary*
  //   unary  := '~' unary | atom '*'*
  //   atom   := '0' | 'e' | letter | '(' union ')'
  //
  // where 0 is the empty language, e the empty word, and ~ complement.
  struct Regex {
    enum class Kind : std::uint8_t {
      empty,
      epsilon,
      literal,
      concat,
      alt,
      star,
      inter,
      complement,
      xor_
    };

    Kind                                      kind   = Kind::empty;
    Letter                                    letter = 0;
    std::vector<std::shared_ptr<Regex const>> children;

    static Regex parse(std::string_view text, Alphabet const& alphabet);
    std::string  to_string(Alphabet const& alphabet) const;
  };

  ////////////////////////////////////////////////////////////////////////
  // CanonicalDfa
  ////////////////////////////////////////////////////////////////////////

  // A complete, minimal DFA whose states are numbered in breadth-first
  // order of discovery from the initial state (letters in alphabet order).
  // The initial state is always 0. Two DFAs accept the same language iff
  // they compare equal.
  class CanonicalDfa {
   public:
    using State = std::uint32_t;

    CanonicalDfa() = default;

    // Minimizes and renumbers an arbitrary complete DFA. `delta` is
    // row-major: delta[q * |alphabet| + a].
    static CanonicalDfa from_dfa(Alphabet           alphabet,
                                 std::size_t        states,
                                 State              initial,
                                 std::vector<State> delta,
                                 std::vector<bool>  accepting);

    static CanonicalDfa empty_language(Alphabet const& alphabet);
    static CanonicalDfa full_language(Alphabet const& alphabet);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t size() const noexcept {
      return _accepting.size();
    }
    State initial() const noexcept {
      return 0;
    }
    State next(State q, Letter a) const {
      return _delta[q * _alphabet.size() + a];
    }
    State run(State q, Word const& w) const;
    bool  accepting(State q) const {
      return _accepting[q];
    }
    std::vector<State> const& delta() const noexcept {
      return _delta;
    }
    std::vector<bool> const& accepting_states() const noexcept {
      return _accepting;
    }

    bool contains(Word const& w) const {
      return _accepting[run(0, w)];
    }
    bool is_empty() const noexcept;
    bool is_full() const noexcept;
    bool contains_empty_word() const noexcept {
      return _accepting[0];
    }

    // Canonical total order: size, then transitions, then accepting set.
    std::strong_ordering operator<=>(CanonicalDfa const& that) const;
    bool                 operator==(CanonicalDfa const& that) const {
      return _alphabet == that._alphabet && _delta == that._delta
             && _accepting == that._accepting;
    }

    // Short structural digest, stable across runs.
    std::string digest() const;

   private:
    Alphabet           _alphabet;
    std::vector<State> _delta;
    std::vector<bool>  _accepting;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  CanonicalDfa compile(Regex const& r, Alphabet const& alphabet);
  CanonicalDfa compile(std::string_view regex, Alphabet const& alphabet);

  enum class AlgebraOp : std::uint8_t {
    union_,
    intersection,
    complement,
    xor_,
    const_empty,
    const_full
  };

  AlgebraOp        parse_algebra_op(std::string_view name);
  std::string_view to_string(AlgebraOp op) noexcept;

  // Constants take no arguments but need an alphabet, passed separately.
  CanonicalDfa algebra_op(AlgebraOp                        op,
                          std::vector<CanonicalDfa> const& args,
                          Alphabet const&                  alphabet);
  CanonicalDfa algebra_op(AlgebraOp op, std::vector<CanonicalDfa> const& args);

  CanonicalDfa operator|(CanonicalDfa const& l, CanonicalDfa const& r);
  CanonicalDfa operator&(CanonicalDfa const& l, CanonicalDfa const& r);
  CanonicalDfa operator^(CanonicalDfa const& l, CanonicalDfa const& r);
  CanonicalDfa operator~(CanonicalDfa const& l);

  // a^{-1}L = {w : aw in L}
  CanonicalDfa left_derivative(CanonicalDfa const& l, Letter a);
  // La^{-1} = {w : wa in L}
  CanonicalDfa right_derivative(CanonicalDfa const& l, Letter a);

  // {w : f(w) in L} for a SET or POS morphism f whose codomain is the
  // alphabet of L.
  CanonicalDfa preimage(FreeMorphism const& f, CanonicalDfa const& l);

  // Every language u^{-1} L v^{-1}, sorted canonically and without
  // duplicates.
  std::vector<CanonicalDfa> two_sided_derivatives(CanonicalDfa const& l);

  // All canonical minimal DFAs with at most `max_states` states, sorted.
  // Throws ResourceError if more than `limit` candidate automata would have
  // to be inspected.
  std::vector<CanonicalDfa> enumerate_canonical_dfas(Alphabet const& alphabet,
                                                     std::size_t max_states,
                                                     std::size_t limit
                                                     = 4'000'000);

}  // namespace regvar

#endif  // REGVAR_REGLANG_HPP_
