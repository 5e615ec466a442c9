//
// regvar - regular languages, finite D-monoids and their dualities
//

// The finite dualities between boolean algebras and sets, distributive
// lattices and posets, semilattices and themselves, and Z2-spaces and
// themselves. Both directions are computed as homomorphisms into the
// two-element object, represented as 0/1 vectors indexed by the source
// carrier.

#ifndef REGVAR_DUALITY_HPP_
#define REGVAR_DUALITY_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <string>   // for string
#include <vector>   // for vector

#include "core.hpp"
#include "dalg.hpp"

namespace regvar {

  // A map into {0, 1}, one entry per source element.
  using HomVec = std::vector<std::uint8_t>;

  ////////////////////////////////////////////////////////////////////////
  // FiniteCAlgebra
  ////////////////////////////////////////////////////////////////////////

  // Elements are 0, ..., size() - 1. plus() is the join for BA, DLAT and
  // SLAT_C and the addition for Z2VEC_C; meet() exists for BA and DLAT,
  // complement() for BA, one() for BA and DLAT.
  class FiniteCAlgebra {
   public:
    FiniteCAlgebra() = default;

    // Validates; throws InputError listing the first violated law.
    FiniteCAlgebra(CSignature        csig,
                   std::size_t       n,
                   std::vector<Elem> plus,
                   std::vector<Elem> meet,
                   std::vector<Elem> complement,
                   Elem              zero,
                   Elem              one);

    static FiniteCAlgebra two(CSignature csig);
    // Subsets of `atoms` atoms as bitmasks.
    static FiniteCAlgebra boolean(std::size_t atoms);
    // Down-sets of a finite poset, as bitmasks in increasing order.
    static FiniteCAlgebra down_sets(FiniteDObject const& poset);
    static FiniteCAlgebra semilattice(std::size_t       n,
                                      std::vector<Elem> join,
                                      Elem              zero);
    static FiniteCAlgebra space(std::size_t dim);

    CSignature csig() const noexcept {
      return _csig;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Elem plus(Elem x, Elem y) const {
      return _plus[x * _size + y];
    }
    Elem meet(Elem x, Elem y) const {
      return _meet[x * _size + y];
    }
    Elem complement(Elem x) const {
      return _complement[x];
    }
    Elem zero() const noexcept {
      return _zero;
    }
    Elem one() const noexcept {
      return _one;
    }
    std::vector<Elem> const& plus_table() const noexcept {
      return _plus;
    }
    std::vector<Elem> const& meet_table() const noexcept {
      return _meet;
    }
    std::vector<Elem> const& complement_table() const noexcept {
      return _complement;
    }

    // For lattices: x <= y iff x v y = y.
    bool leq(Elem x, Elem y) const {
      return plus(x, y) == y;
    }

    // BA only: the minimal non-zero elements.
    std::vector<Elem> atoms() const;
    // DLAT only: the non-zero elements that are not joins of two strictly
    // smaller elements.
    std::vector<Elem> join_irreducibles() const;

    std::vector<std::string> violations() const;

    auto operator<=>(FiniteCAlgebra const&) const = default;
    bool operator==(FiniteCAlgebra const&) const  = default;

   private:
    CSignature        _csig = CSignature::ba;
    std::size_t       _size = 0;
    std::vector<Elem> _plus;
    std::vector<Elem> _meet;
    std::vector<Elem> _complement;
    Elem              _zero = 0;
    Elem              _one  = 0;
  };

  struct CAlgebraMorphism {
    FiniteCAlgebra    source;
    FiniteCAlgebra    target;
    std::vector<Elem> table;

    Elem operator()(Elem x) const {
      return table[x];
    }
    bool is_bijective() const;
    bool operator==(CAlgebraMorphism const&) const = default;
  };

  bool is_homomorphism(CAlgebraMorphism const& h);

  // A D-structure-preserving map between finite D-objects.
  struct DMap {
    FiniteDObject     source;
    FiniteDObject     target;
    std::vector<Elem> table;

    Elem operator()(Elem x) const {
      return table[x];
    }
    bool operator==(DMap const&) const = default;
  };

  // The two-element D-object O_D: a set, the 2-chain, the 2-chain as a
  // semilattice, and the 1-dimensional space.
  FiniteDObject two_object(DSignature dsig);

  ////////////////////////////////////////////////////////////////////////
  // Duality
  ////////////////////////////////////////////////////////////////////////

  // All csig-homomorphisms a -> 2, sorted lexicographically.
  std::vector<HomVec> homs_into_two(FiniteCAlgebra const& a);
  // All D-maps x -> O_D, sorted lexicographically. Throws ResourceError for
  // SET carriers above 20 elements.
  std::vector<HomVec> d_maps_into_two(FiniteDObject const& x);

  struct DualObject {
    FiniteDObject       object;
    std::vector<HomVec> homs;  // element i of object is homs[i]
  };

  struct PObject {
    FiniteCAlgebra      algebra;
    std::vector<HomVec> maps;  // element i of algebra is maps[i]
  };

  // C-algebra a |-> the D-object of homs a -> 2 with pointwise structure.
  DualObject dual_object(FiniteCAlgebra const& a);
  // h: a -> b |-> (f |-> f o h): dual(b) -> dual(a).
  DMap dual_morphism(CAlgebraMorphism const& h);

  // D-object x |-> the C-algebra of D-maps x -> O_D with pointwise
  // structure.
  PObject p_object(FiniteDObject const& x);
  // g: x -> y |-> (p |-> p o g): P(y) -> P(x).
  CAlgebraMorphism p_morphism(DMap const& g);

  // a -> P(dual(a)), x |-> (f |-> f(x)); throws InvariantError unless it is
  // an isomorphism.
  CAlgebraMorphism unit_iso(FiniteCAlgebra const& a);
  // x -> dual(P(x)), x |-> (p |-> p(x)); throws InvariantError unless it is
  // an isomorphism of D-objects.
  DMap counit_iso(FiniteDObject const& x);

}  // namespace regvar

#endif  // REGVAR_DUALITY_HPP_
