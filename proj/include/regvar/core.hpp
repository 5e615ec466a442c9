//
// regvar - regular languages, finite D-monoids and their dualities
//

// Basic vocabulary shared by every module: errors, alphabets, words, the
// four base signatures, elements of free D-monoids and morphisms between
// them.

#ifndef REGVAR_CORE_HPP_
#define REGVAR_CORE_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace regvar {

  ////////////////////////////////////////////////////////////////////////
  // Errors
  ////////////////////////////////////////////////////////////////////////

  // Malformed or inconsistent user input (exit code 2 in the CLI).
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // An enumeration or construction would exceed a documented bound (exit
  // code 3 in the CLI).
  struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // A theoretical guarantee failed to hold; always signals a bug or
  // corrupted input.
  struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
  };

  // An operation was asked to work on a representation it cannot handle.
  struct UnsupportedModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;
  using Elem   = std::uint32_t;

  // Length first, then lexicographic.
  std::strong_ordering shortlex_compare(Word const& u, Word const& v);

  inline bool shortlex_less(Word const& u, Word const& v) {
    return shortlex_compare(u, v) < 0;
  }

  // All words of length <= max_length in shortlex order.
  std::vector<Word> words_up_to(std::size_t alphabet_size,
                                std::size_t max_length);

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  // An ordered list of distinct one-character symbols. The characters used
  // by the regex grammar (0 e | & ~ ^ * ( ) and whitespace) are reserved.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    // Accepts "ab", "a,b" or "a b".
    static Alphabet parse(std::string_view spec);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    bool empty() const noexcept {
      return _symbols.empty();
    }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    std::string const& symbol(Letter a) const {
      return _symbols.at(a);
    }

    std::optional<Letter> find(char c) const noexcept;
    Letter                index(std::string_view symbol) const;

    // The empty string is the empty word.
    Word        parse_word(std::string_view text) const;
    std::string format(Word const& w) const;

    auto operator<=>(Alphabet const&) const = default;
    bool operator==(Alphabet const&) const  = default;

   private:
    std::vector<std::string> _symbols;
  };

  // "ε" for the empty word, the concatenated symbols otherwise.
  std::string pretty(Alphabet const& alphabet, Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Signatures
  ////////////////////////////////////////////////////////////////////////

  // Monoids in Set, Pos, SLat and Z2-Vec: ordinary monoids, ordered
  // monoids, idempotent semirings and Z2-algebras.
  enum class DSignature : std::uint8_t { set, pos, slat, z2vec };

  // Boolean algebras, distributive lattices, semilattices with 0, Z2-spaces.
  enum class CSignature : std::uint8_t { ba, dlat, slat, z2vec };

  std::string_view to_string(DSignature d) noexcept;
  std::string_view to_string(CSignature c) noexcept;
  DSignature       parse_dsignature(std::string_view text);
  CSignature       parse_csignature(std::string_view text);

  // BA<->SET, DLAT<->POS, SLAT<->SLAT, Z2VEC<->Z2VEC.
  constexpr DSignature dual_of(CSignature c) noexcept {
    switch (c) {
      case CSignature::ba:
        return DSignature::set;
      case CSignature::dlat:
        return DSignature::pos;
      case CSignature::slat:
        return DSignature::slat;
      case CSignature::z2vec:
        break;
    }
    return DSignature::z2vec;
  }

  constexpr CSignature predual_of(DSignature d) noexcept {
    switch (d) {
      case DSignature::set:
        return CSignature::ba;
      case DSignature::pos:
        return CSignature::dlat;
      case DSignature::slat:
        return CSignature::slat;
      case DSignature::z2vec:
        break;
    }
    return CSignature::z2vec;
  }

  // True for the signatures whose free monoid elements are single words.
  constexpr bool is_word_based(DSignature d) noexcept {
    return d == DSignature::set || d == DSignature::pos;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free D-monoid elements
  ////////////////////////////////////////////////////////////////////////

  // An element of the free D-monoid on an alphabet. For SET and POS the
  // payload is exactly one word; for SLAT it is a finite set of words and
  // for Z2VEC a finite sum of words reduced mod 2, both stored as a
  // shortlex-sorted, duplicate-free list.
  //
  // The total order used for canonical labels is shortlex on words; word
  // sets are compared at the largest word in which they differ, the set
  // lacking that word being smaller (so the order is a well-order).
  class FreeDElement {
   public:
    FreeDElement() = default;

    static FreeDElement word(DSignature dsig, Word w);
    // Normalizes: SLAT removes duplicates, Z2VEC cancels pairs.
    static FreeDElement combination(DSignature dsig, std::vector<Word> words);
    static FreeDElement zero(DSignature dsig);  // SLAT/Z2VEC only
    static FreeDElement one(DSignature dsig) {
      return word(dsig, {});
    }

    DSignature dsig() const noexcept {
      return _dsig;
    }
    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    // SET/POS only.
    Word const& as_word() const;

    // Longest word in the payload (0 for the zero element).
    std::size_t length() const noexcept;

    FreeDElement operator*(FreeDElement const& that) const;
    // SLAT join / Z2VEC sum.
    FreeDElement operator+(FreeDElement const& that) const;

    std::strong_ordering operator<=>(FreeDElement const& that) const;
    bool                 operator==(FreeDElement const& that) const {
      return _dsig == that._dsig && _words == that._words;
    }

    std::string to_string(Alphabet const& alphabet) const;

   private:
    DSignature        _dsig = DSignature::set;
    std::vector<Word> _words{Word{}};
  };

  // All elements with payload length <= max_length: words for SET/POS, and
  // every set of such words for SLAT/Z2VEC (throws ResourceError if there
  // would be more than `limit`).
  std::vector<FreeDElement> free_elements_up_to(DSignature  dsig,
                                                std::size_t alphabet_size,
                                                std::size_t max_length,
                                                std::size_t limit = 1 << 16);

  ////////////////////////////////////////////////////////////////////////
  // Morphisms of free D-monoids
  ////////////////////////////////////////////////////////////////////////

  // A D-monoid morphism between free D-monoids, given by the images of the
  // domain's letters.
  class FreeMorphism {
   public:
    FreeMorphism() = default;
    FreeMorphism(Alphabet                  domain,
                 Alphabet                  codomain,
                 DSignature                dsig,
                 std::vector<FreeDElement> images);

    static FreeMorphism identity(Alphabet const& alphabet, DSignature dsig);

    Alphabet const& domain() const noexcept {
      return _domain;
    }
    Alphabet const& codomain() const noexcept {
      return _codomain;
    }
    DSignature dsig() const noexcept {
      return _dsig;
    }
    std::vector<FreeDElement> const& images() const noexcept {
      return _images;
    }
    FreeDElement const& image(Letter a) const {
      return _images.at(a);
    }

    FreeDElement apply(FreeDElement const& x) const;
    FreeDElement apply(Word const& w) const;

    // Longest word in any image.
    std::size_t payload_length() const noexcept;

    bool operator==(FreeMorphism const&) const = default;

    std::string to_string() const;

   private:
    Alphabet                  _domain;
    Alphabet                  _codomain;
    DSignature                _dsig = DSignature::set;
    std::vector<FreeDElement> _images;
  };

  // The composite "first f, then g".
  FreeMorphism compose(FreeMorphism const& f, FreeMorphism const& g);

  // Every morphism domain -> codomain whose images have payload length
  // <= max_length.
  std::vector<FreeMorphism> morphisms_up_to(Alphabet const& domain,
                                            Alphabet const& codomain,
                                            DSignature      dsig,
                                            std::size_t     max_length,
                                            std::size_t     limit = 1 << 20);

}  // namespace regvar

#endif  // REGVAR_CORE_HPP_
